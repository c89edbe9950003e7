#include "monalg/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace monalg {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<unsigned long, unsigned>> factor_integer(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  std::vector<unsigned long> out{1};
  for (auto [p, e] : factor_integer(n)) {
    std::size_t base = out.size();
    unsigned long pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long totient(unsigned long n) {
  unsigned long t = n;
  for (auto [p, e] : factor_integer(n)) {
    (void)e;
    t -= t / p;
  }
  return t;
}

int moebius(unsigned long n) {
  int sign = 1;
  for (auto [p, e] : factor_integer(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

unsigned long radical(unsigned long n) {
  unsigned long r = 1;
  for (auto [p, e] : factor_integer(n)) {
    (void)e;
    r *= p;
  }
  return r;
}

bool is_squarefree(unsigned long n) { return n >= 1 && radical(n) == n; }

unsigned omega(unsigned long n) { return static_cast<unsigned>(factor_integer(n).size()); }

unsigned big_omega(unsigned long n) {
  unsigned s = 0;
  for (auto [p, e] : factor_integer(n)) {
    (void)p;
    s += e;
  }
  return s;
}

unsigned long multiplicative_order(long a, unsigned long n) {
  if (n < 2) throw error(errc::not_coprime, "order is defined modulo n >= 2");
  long am = a % static_cast<long>(n);
  if (am < 0) am += static_cast<long>(n);
  unsigned long u = static_cast<unsigned long>(am);
  if (std::gcd(u, n) != 1)
    throw error(errc::not_coprime, "base shares a factor with the modulus");
  // The order divides totient(n); scan its divisors in increasing order.
  auto powmod = [n](unsigned long b, unsigned long e) {
    unsigned long r = 1 % n;
    while (e) {
      if (e & 1) r = static_cast<unsigned long>((static_cast<unsigned __int128>(r) * b) % n);
      b = static_cast<unsigned long>((static_cast<unsigned __int128>(b) * b) % n);
      e >>= 1;
    }
    return r;
  };
  for (unsigned long d : divisors_of(totient(n)))
    if (powmod(u, d) == 1) return d;
  return totient(n);  // unreachable for valid input
}

namespace {

// DFS over prime powers p^k with p^(k-1)(p-1) | m, primes strictly increasing.
void inv_totient_rec(unsigned long m, unsigned long min_p,
                     const std::vector<unsigned long>& candidate_primes,
                     unsigned long acc, std::vector<unsigned long>& out) {
  if (m == 1) {
    out.push_back(acc);
    // phi(2y) = phi(y) for odd y, but 2 is the smallest prime and the factors
    // are merged in increasing order, so 2 fits only before any other prime.
    if (min_p < 2) out.push_back(2 * acc);
    return;
  }
  for (unsigned long p : candidate_primes) {
    if (p <= min_p) continue;
    if (m % (p - 1)) continue;
    unsigned long rest = m / (p - 1);
    unsigned long pk = p;
    while (true) {
      inv_totient_rec(rest, p, candidate_primes, acc * pk, out);
      if (rest % p) break;
      rest /= p;
      pk *= p;
    }
  }
}

}  // namespace

std::vector<unsigned long> inverse_totient(unsigned long m) {
  std::vector<unsigned long> out;
  if (m == 0) return out;
  std::vector<unsigned long> candidates;
  for (unsigned long d : divisors_of(m))
    if (is_prime(d + 1)) candidates.push_back(d + 1);
  std::sort(candidates.begin(), candidates.end());
  inv_totient_rec(m, 1, candidates, 1, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace monalg
