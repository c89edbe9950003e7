#include "monalg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "monalg/numtheory.hpp"

namespace monalg {

namespace {

std::shared_mutex g_mutex;
std::map<unsigned long, IntPoly> g_cache;

// x^n - 1 divided by the product of Phi_d over proper divisors d. Used for
// squarefree n; composite prime powers go through the radical identity
// Phi_n(x) = Phi_rad(n)(x^(n/rad(n))) instead, which keeps the division work
// on the small squarefree indices.
IntPoly by_division(unsigned long n) {
  std::vector<mpz_class> xn(n + 1, 0);
  xn[0] = -1;
  xn[n] = 1;
  IntPoly acc{std::move(xn)};
  for (unsigned long d : divisors_of(n)) {
    if (d == n) continue;
    acc = div_rem(acc, cyclotomic_poly(d)).first;
  }
  return acc;
}

}  // namespace

IntPoly cyclotomic_poly(unsigned long n) {
  if (n == 0) throw error(errc::wrong_exponent_set, "cyclotomic index must be >= 1");
  {
    std::shared_lock lock(g_mutex);
    auto it = g_cache.find(n);
    if (it != g_cache.end()) return it->second;
  }
  IntPoly result;
  if (n == 1) {
    result = IntPoly({-1, 1});
  } else {
    unsigned long rad = radical(n);
    if (rad < n)
      result = compose_power(cyclotomic_poly(rad), n / rad);
    else
      result = by_division(n);
  }
  {
    std::unique_lock lock(g_mutex);
    g_cache.emplace(n, result);
  }
  return result;
}

std::vector<unsigned long> xn_minus_one_factorization(unsigned long n) {
  if (n == 0) throw error(errc::wrong_exponent_set, "exponent must be >= 1");
  return divisors_of(n);
}

std::vector<unsigned long> compose_indices(unsigned long y, unsigned long r) {
  if (r < 2 || !is_squarefree(r))
    throw error(errc::not_squarefree, "composition exponent must be squarefree >= 2");
  unsigned long g = std::gcd(y, r);
  std::vector<unsigned long> out;
  for (unsigned long d : divisors_of(r / g)) out.push_back(y * d * g);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monalg
