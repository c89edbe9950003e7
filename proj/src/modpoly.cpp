#include "modpoly.hpp"

#include <algorithm>

namespace monalg::modp {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  std::int64_t t = t0 % static_cast<std::int64_t>(p);
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly reduce(const std::vector<mpz_class>& coeffs, std::uint64_t p) {
  Poly out(coeffs.size());
  mpz_class pz = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class m = coeffs[i] % pz;
    if (m < 0) m += pz;
    out[i] = m.get_ui();
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

Poly divrem(Poly a, const Poly& b, std::uint64_t p, Poly* quot) {
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::uint64_t binv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t scale = mulmod(a.back(), binv, p);
    std::size_t off = a.size() - b.size();
    if (quot && scale) (*quot)[off] = scale;
    if (scale) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = mulmod(scale, b[i], p);
        a[off + i] = (a[off + i] + p - sub) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  if (quot) trim(*quot);
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Poly make_monic(Poly a, std::uint64_t p) {
  trim(a);
  if (a.empty() || a.back() == 1) return a;
  std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& v : a) v = mulmod(v, inv, p);
  return a;
}

Poly powmod_xq(const Poly& base, const mpz_class& e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  Poly b = divrem(base, f, p);
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = divrem(mul(result, b, p), f, p);
    n >>= 1;
    if (n > 0) b = divrem(mul(b, b, p), f, p);
  }
  return result;
}

Poly derivative(const Poly& a, std::uint64_t p) {
  Poly out;
  if (a.size() <= 1) return out;
  out.resize(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = mulmod(a[i], i % p, p);
  trim(out);
  return out;
}

namespace {

// Cantor-Zassenhaus split of a monic product of irreducibles of equal degree d.
void equal_degree_split(const Poly& f, long d, std::uint64_t p,
                        std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  mpz_class half = (q - 1) / 2;  // p odd throughout the pipeline
  while (true) {
    Poly r(static_cast<std::size_t>(deg(f)), 0);
    for (auto& v : r) v = rng() % p;
    trim(r);
    if (deg(r) < 1) continue;
    Poly g = gcd(r, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      Poly quo;
      divrem(f, g, p, &quo);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(make_monic(std::move(quo), p), d, p, rng, out);
      return;
    }
    Poly h = powmod_xq(r, half, f, p);
    // h^2 = 1 mod each factor; h - 1 vanishes on a random half of them.
    if (h.empty()) continue;
    h[0] = (h[0] + p - 1) % p;
    trim(h);
    if (h.empty()) continue;
    g = gcd(h, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      Poly quo;
      divrem(f, g, p, &quo);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(make_monic(std::move(quo), p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<long> factor_degrees(const Poly& f, std::uint64_t p) {
  std::vector<long> out;
  Poly rest = f;
  Poly h{0, 1};  // x
  mpz_class pz = static_cast<unsigned long>(p);
  for (long d = 1; deg(rest) >= 2 * d; ++d) {
    h = powmod_xq(h, pz, rest, p);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    Poly g = hx.empty() ? rest : gcd(hx, rest, p);
    if (deg(g) > 0) {
      for (long i = 0; i < deg(g) / d; ++i) out.push_back(d);
      Poly quo;
      divrem(rest, g, p, &quo);
      rest = make_monic(std::move(quo), p);
      h = divrem(h, rest, p);
    }
  }
  if (deg(rest) > 0) out.push_back(deg(rest));
  return out;
}

std::vector<Poly> factor_squarefree_monic(const Poly& f, std::uint64_t p,
                                          std::mt19937_64& rng) {
  std::vector<Poly> out;
  // Distinct-degree stage: gcd with x^(p^d) - x peels the degree-d part.
  Poly rest = f;
  Poly h{0, 1};  // x
  mpz_class pz = static_cast<unsigned long>(p);
  for (long d = 1; deg(rest) >= 2 * d; ++d) {
    h = powmod_xq(h, pz, rest, p);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    // hx = 0 means rest divides x^(p^d) - x: everything left has degree d.
    Poly g = hx.empty() ? rest : gcd(hx, rest, p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      Poly quo;
      divrem(rest, g, p, &quo);
      rest = make_monic(std::move(quo), p);
      h = divrem(h, rest, p);
    }
  }
  if (deg(rest) > 0) out.push_back(rest);
  // Deterministic order regardless of the random splits.
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

}  // namespace monalg::modp
