#include "monalg/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "modpoly.hpp"
#include "monalg/cyclotomic.hpp"
#include "monalg/numtheory.hpp"

namespace monalg {

namespace {

// One fixed seed per factorization call keeps equal-degree splitting and hence
// the whole pipeline reproducible.
constexpr std::uint64_t kFactorSeed = 0x6d6f6e616c676673ULL;

// ---- arithmetic on mpz coefficient vectors modulo m (nonnegative reps) ----

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& v : out) v %= m;
  for (auto& v : out)
    if (v < 0) v += m;
  ztrim(out);
  return out;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] += b[i];
    if (out[i] >= m) out[i] -= m;
  }
  ztrim(out);
  return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] -= b[i];
    if (out[i] < 0) out[i] += m;
  }
  ztrim(out);
  return out;
}

// Division by a monic divisor, all coefficients mod m.
void zdivrem_monic(const ZPoly& a, const ZPoly& h, const mpz_class& m, ZPoly& q,
                   ZPoly& r) {
  r = a;
  q.clear();
  if (r.size() < h.size()) return;
  q.assign(r.size() - h.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class top = r[k + h.size() - 1];
    if (top == 0) continue;
    q[k] = top;
    for (std::size_t i = 0; i < h.size(); ++i) {
      r[k + i] -= top * h[i];
      r[k + i] %= m;
      if (r[k + i] < 0) r[k + i] += m;
    }
  }
  r.resize(h.size() - 1);
  ztrim(r);
  ztrim(q);
}

ZPoly from_modp(const modp::Poly& a) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<unsigned long>(a[i]);
  return out;
}

// Quadratic two-factor Hensel step chain: from f = g*h (mod p) with Bezout
// s*g + t*h = 1 (mod p) up to modulus >= target. f, g, h monic.
struct PairLift {
  ZPoly g, h;
  mpz_class modulus;
};

PairLift lift_pair(const ZPoly& f_mod_final, const mpz_class& final_mod,
                   ZPoly g, ZPoly h, ZPoly s, ZPoly t, const mpz_class& p) {
  mpz_class m = p;
  while (m < final_mod) {
    mpz_class m2 = m * m;
    ZPoly f2(f_mod_final.size());
    for (std::size_t i = 0; i < f_mod_final.size(); ++i) f2[i] = f_mod_final[i] % m2;
    ztrim(f2);
    ZPoly e = zsub(f2, zmul(g, h, m2), m2);
    ZPoly q, r;
    zdivrem_monic(zmul(s, e, m2), h, m2, q, r);
    ZPoly g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
    ZPoly h2 = zadd(h, r, m2);
    // Bezout lift: s2*g2 + t2*h2 = 1 (mod m^2).
    ZPoly one{mpz_class(1)};
    ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), one, m2);
    ZPoly c, d;
    zdivrem_monic(zmul(s, b, m2), h2, m2, c, d);
    ZPoly s2 = zsub(s, d, m2);
    ZPoly t2 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
    // Keep deg t < deg g (and so deg s < deg h): t -= u*g, s += u*h preserves
    // s*g + t*h = 1 while stopping degree creep across rounds.
    if (t2.size() >= g2.size()) {
      ZPoly u, tr;
      zdivrem_monic(t2, g2, m2, u, tr);
      t2 = std::move(tr);
      s2 = zadd(s2, zmul(u, h2, m2), m2);
    }
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
  }
  return {std::move(g), std::move(h), m};
}

// Extended Euclid over F_p for coprime a, b: s*a + t*b = 1.
void xgcd_coprime(const modp::Poly& a, const modp::Poly& b, std::uint64_t p,
                  modp::Poly& s, modp::Poly& t) {
  modp::Poly r0 = a, r1 = b;
  modp::Poly s0{1}, s1{}, t0{}, t1{1};
  auto scale = [p](const modp::Poly& v, std::uint64_t k) {
    modp::Poly out = v;
    for (auto& x : out)
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * k) % p);
    modp::trim(out);
    return out;
  };
  auto sub = [p](const modp::Poly& x, const modp::Poly& y) {
    modp::Poly out(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = (out[i] + p - y[i]) % p;
    modp::trim(out);
    return out;
  };
  auto mul = [p](const modp::Poly& x, const modp::Poly& y) {
    return modp::mul(x, y, p);
  };
  while (!r1.empty()) {
    modp::Poly q;
    modp::Poly r2 = modp::divrem(r0, r1, p, &q);
    modp::Poly s2 = sub(s0, mul(q, s1));
    modp::Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant; normalize to 1.
  std::uint64_t inv = modp::inv_mod(r0[0], p);
  s = scale(s0, inv);
  t = scale(t0, inv);
}

// Lift the monic mod-p factors of monic F (given mod final_mod) to final_mod.
void lift_tree(const ZPoly& F, const std::vector<modp::Poly>& factors,
               std::size_t lo, std::size_t hi, std::uint64_t p,
               const mpz_class& final_mod, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out[lo] = F;
    return;
  }
  // Balance by degree so the two subproducts have comparable size.
  long total = 0;
  for (std::size_t i = lo; i < hi; ++i) total += modp::deg(factors[i]);
  std::size_t mid = lo + 1;
  long acc = modp::deg(factors[lo]);
  while (mid < hi - 1 && 2 * acc < total) {
    acc += modp::deg(factors[mid]);
    ++mid;
  }
  modp::Poly G{1}, H{1};
  for (std::size_t i = lo; i < mid; ++i) G = modp::mul(G, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i) H = modp::mul(H, factors[i], p);
  modp::Poly s, t;
  xgcd_coprime(G, H, p, s, t);
  PairLift lifted = lift_pair(F, final_mod, from_modp(G), from_modp(H),
                              from_modp(s), from_modp(t), p);
  // Reduce the lifted halves back to final_mod representatives.
  auto reduce_to = [&](ZPoly v) {
    for (auto& x : v) x %= final_mod;
    ztrim(v);
    return v;
  };
  lift_tree(reduce_to(std::move(lifted.g)), factors, lo, mid, p, final_mod, out);
  lift_tree(reduce_to(std::move(lifted.h)), factors, mid, hi, p, final_mod, out);
}

// Smallest odd prime p with p not dividing lc(f) and f squarefree mod p.
// Same primes as "p not dividing lc(f)*resultant(f, f')": for p not dividing
// lc, p divides res(f, f') exactly when f mod p has a repeated factor.
std::uint64_t choose_prime(const IntPoly& f) {
  for (std::uint64_t p = 3;; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class pz = static_cast<unsigned long>(p);
    if (mpz_divisible_p(f.lc().get_mpz_t(), pz.get_mpz_t())) continue;
    modp::Poly fp = modp::reduce(f.coeffs(), p);
    modp::Poly fd = modp::derivative(fp, p);
    if (fd.empty()) continue;  // f' = 0 mod p: not squarefree mod p
    modp::Poly g = modp::gcd(fp, fd, p);
    if (modp::deg(g) == 0) return p;
  }
}

// Coefficient bound for lc-adjusted candidate divisors: |lc(f)| * 2^deg * ||f||_2.
mpz_class candidate_bound(const IntPoly& f) {
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class b = root * abs(f.lc());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(f.degree()));
  return b;
}

mpz_class center(const mpz_class& v, const mpz_class& m) {
  mpz_class r = v;
  if (2 * r >= m) r -= m;
  return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factor a primitive squarefree poly with positive lc, degree >= 1, f(0) != 0.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
  std::vector<IntPoly> out;
  if (f.degree() == 1) {
    out.push_back(f);
    return out;
  }
  std::uint64_t p = choose_prime(f);
  std::mt19937_64 rng(kFactorSeed);
  modp::Poly fbar = modp::make_monic(modp::reduce(f.coeffs(), p), p);
  std::vector<modp::Poly> mod_factors = modp::factor_squarefree_monic(fbar, p, rng);
  if (mod_factors.size() == 1) {
    out.push_back(f);
    return out;
  }

  // A true factor's degree is a subset sum of the modular factor degrees for
  // every good prime, so when many modular factors appear, intersect the
  // achievable-degree sets of a few further primes: that screens recombination
  // and often certifies irreducibility outright. Lifting stays at p.
  long n = f.degree();
  std::vector<char> degree_mask;
  if (mod_factors.size() >= 8) {
    std::vector<std::vector<long>> profiles;
    profiles.emplace_back();
    for (const auto& g : mod_factors) profiles.back().push_back(modp::deg(g));
    int scans = 0;
    for (std::uint64_t cand = p + 2; scans < 2 && cand < p + 400; cand += 2) {
      if (!is_prime(cand)) continue;
      mpz_class cz = static_cast<unsigned long>(cand);
      if (mpz_divisible_p(f.lc().get_mpz_t(), cz.get_mpz_t())) continue;
      modp::Poly fc = modp::reduce(f.coeffs(), cand);
      modp::Poly fd = modp::derivative(fc, cand);
      if (fd.empty()) continue;
      if (modp::deg(modp::gcd(fc, fd, cand)) != 0) continue;
      profiles.push_back(
          modp::factor_degrees(modp::make_monic(std::move(fc), cand), cand));
      ++scans;
      if (profiles.back().size() == 1) {
        out.push_back(f);
        return out;
      }
    }
    degree_mask.assign(static_cast<std::size_t>(n) + 1, 1);
    for (const auto& degs : profiles) {
      std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
      reach[0] = 1;
      for (long d : degs)
        for (long i = n; i >= d; --i)
          if (reach[i - d]) reach[i] = 1;
      for (long i = 0; i <= n; ++i) degree_mask[i] &= reach[i];
    }
    bool proper = false;
    for (long i = 1; i < n && !proper; ++i) proper = degree_mask[i] != 0;
    if (!proper) {
      out.push_back(f);
      return out;
    }
  }

  mpz_class bound = 2 * candidate_bound(f) + 1;
  mpz_class final_mod = static_cast<unsigned long>(p);
  while (final_mod < bound) final_mod *= final_mod;
  // Monic image of f modulo final_mod.
  mpz_class lcinv;
  mpz_class lc_mod = f.lc() % final_mod;
  if (lc_mod < 0) lc_mod += final_mod;
  mpz_invert(lcinv.get_mpz_t(), lc_mod.get_mpz_t(), final_mod.get_mpz_t());
  ZPoly ftilde(f.coeffs().size());
  for (std::size_t i = 0; i < ftilde.size(); ++i) {
    ftilde[i] = (f.coeffs()[i] * lcinv) % final_mod;
    if (ftilde[i] < 0) ftilde[i] += final_mod;
  }
  std::vector<ZPoly> lifted(mod_factors.size());
  lift_tree(ftilde, mod_factors, 0, mod_factors.size(), p, final_mod, lifted);

  // Zassenhaus recombination over subsets of the lifted factors.
  std::vector<std::size_t> active(mod_factors.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  IntPoly rem = f;
  bool found_one = true;
  while (found_one) {
    found_one = false;
    mpz_class rem_lc_mod = rem.lc() % final_mod;
    if (rem_lc_mod < 0) rem_lc_mod += final_mod;
    mpz_class trail_target = abs(rem.lc() * rem.coeff(0));
    for (std::size_t s = 1; !found_one && 2 * s <= active.size(); ++s) {
      std::vector<std::size_t> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      do {
        if (!degree_mask.empty()) {
          long degsum = 0;
          for (std::size_t i : idx)
            degsum += static_cast<long>(lifted[active[i]].size()) - 1;
          if (!degree_mask[degsum]) continue;
        }
        // Cheap screen on the would-be constant coefficient.
        mpz_class trail = rem_lc_mod;
        for (std::size_t i : idx) {
          const ZPoly& g = lifted[active[i]];
          trail = (trail * g[0]) % final_mod;
        }
        trail = center(trail, final_mod);
        if (trail == 0) continue;
        mpz_class trail_abs = abs(trail);
        if (!mpz_divisible_p(trail_target.get_mpz_t(), trail_abs.get_mpz_t()))
          continue;
        ZPoly cand{rem_lc_mod};
        for (std::size_t i : idx) cand = zmul(cand, lifted[active[i]], final_mod);
        std::vector<mpz_class> cc(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) cc[i] = center(cand[i], final_mod);
        IntPoly candidate{std::move(cc)};
        if (candidate.is_zero()) continue;
        IntPoly pp = content_primitive(candidate).primitive;
        if (pp.degree() < 1) continue;
        if (!divides_exactly(pp, rem)) continue;
        out.push_back(pp);
        rem = div_rem(rem, pp).first;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < active.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            keep.push_back(active[i]);
        active = std::move(keep);
        found_one = true;
        break;
      } while (next_combination(idx, active.size()));
    }
  }
  if (rem.degree() >= 1) out.push_back(rem);
  return out;
}

std::string cache_key(const IntPoly& f) {
  std::ostringstream os;
  for (const auto& c : f.coeffs()) os << c.get_str() << ';';
  return os.str();
}

std::shared_mutex g_cache_mutex;
std::unordered_map<std::string, Factorization> g_cache;

}  // namespace

IntPoly Factorization::reconstruct() const {
  IntPoly acc = IntPoly::constant(content * sign);
  for (const auto& [g, m] : factors)
    for (unsigned i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot decompose 0");
  if (f.degree() == 0)
    throw error(errc::constant_input, "constants have no squarefree decomposition");
  IntPoly fp = content_primitive(f).primitive;
  IntPoly d = fp.derivative();
  IntPoly g = gcd(fp, d);
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (g.degree() == 0) {
    out.emplace_back(fp, 1);
    return out;
  }
  IntPoly w = div_rem(fp, g).first;
  IntPoly y = div_rem(d, g).first;
  IntPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    IntPoly h = z.is_zero() ? content_primitive(w).primitive : gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = div_rem(w, h).first;
    y = z.is_zero() ? IntPoly() : div_rem(z, h).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Factorization factor_over_integers(const IntPoly& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot factor 0");
  if (f.degree() > kFactorDegreeLimit)
    throw error(errc::degree_limit, "degree exceeds the factorization cap");

  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(cache_key(f));
    if (it != g_cache.end()) return it->second;
  }

  Factorization result;
  ContentSplit cs = content_primitive(f);
  result.sign = cs.sign;
  result.content = cs.content;
  IntPoly body = cs.primitive;
  std::map<std::vector<mpz_class>, std::pair<IntPoly, unsigned>> merged;
  auto add_factor = [&](const IntPoly& g, unsigned mult) {
    auto it = merged.find(g.coeffs());
    if (it == merged.end())
      merged.emplace(g.coeffs(), std::make_pair(g, mult));
    else
      it->second.second += mult;
  };

  if (body.degree() >= 1) {
    // Peel the monomial part so every remaining piece has a nonzero constant.
    unsigned long v = 0;
    while (body.coeff(v) == 0) ++v;
    if (v > 0) {
      add_factor(IntPoly::x(), static_cast<unsigned>(v));
      std::vector<mpz_class> shifted(body.coeffs().begin() + v, body.coeffs().end());
      body = IntPoly{std::move(shifted)};
    }
    if (body.degree() >= 1) {
      for (const auto& [part, mult] : squarefree_decomposition(body))
        for (const IntPoly& irr : factor_squarefree_primitive(part))
          add_factor(irr, mult);
    }
  }

  for (auto& [key, val] : merged) result.factors.push_back(val);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });

  {
    std::unique_lock lock(g_cache_mutex);
    g_cache.emplace(cache_key(f), result);
  }
  return result;
}

bool is_irreducible(const IntPoly& f) {
  if (f.is_zero() || f.degree() == 0)
    throw error(errc::constant_input, "irreducibility applies to nonconstants");
  Factorization fac = factor_over_integers(f);
  return fac.content == 1 && fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::optional<unsigned long> cyclotomic_index(const IntPoly& f) {
  if (f.is_zero()) return std::nullopt;
  long d = f.degree();
  if (d < 1) return std::nullopt;
  if (abs(f.lc()) != 1 || abs(f.coeff(0)) != 1) return std::nullopt;
  for (unsigned long y : inverse_totient(static_cast<unsigned long>(d))) {
    IntPoly phi = cyclotomic_poly(y);
    if (f == phi || f == -phi) return y;
  }
  return std::nullopt;
}

}  // namespace monalg
