#include "monalg/lambda_star.hpp"

#include <stdexcept>

#include "monalg/errors.hpp"
#include "monalg/numtheory.hpp"

namespace monalg {

PrimeSplittingData prime_splitting_in_cyclotomic(unsigned long q, unsigned long N) {
  if (!is_prime(q)) throw error(errc::not_coprime, "q must be prime");
  if (N < 3 || !is_squarefree(N))
    throw error(errc::not_squarefree, "conductor must be a squarefree integer >= 3");

  PrimeSplittingData d;
  d.q = q;
  d.N = N;
  if (N % q != 0) {
    d.e = 1;
    d.f_res = N <= 2 ? 1 : multiplicative_order(static_cast<long>(q % N), N);
    d.g = totient(N) / d.f_res;
  } else {
    unsigned long M = N / q;
    d.e = q - 1;
    d.f_res = M <= 2 ? 1 : multiplicative_order(static_cast<long>(q % M), M);
    d.g = totient(M) / d.f_res;
  }
  return d;
}

mpz_class lambda_star_linear(const mpz_class& a, const std::set<unsigned long>& P) {
  mpz_class abs_a = abs(a);
  if (abs_a <= 1)
    throw error(errc::unit_root, "|a| must be at least 2");
  if (P.empty())
    throw error(errc::wrong_exponent_set, "P must be a nonempty set of odd primes");
  for (unsigned long p : P)
    if (!is_prime(p) || p == 2)
      throw error(errc::wrong_exponent_set, "P must contain odd primes");

  unsigned long N = 1;
  for (unsigned long p : P) N *= p;

  auto add_prime = [&](unsigned long q, unsigned long v, mpz_class& total) {
    PrimeSplittingData d = prime_splitting_in_cyclotomic(q, N);
    total += mpz_class(v) * d.e * d.g;
  };

  mpz_class total = 0;
  mpz_class rest = abs_a;
  for (mpz_class q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    unsigned long v = 0;
    while (rest % q == 0) {
      rest /= q;
      ++v;
    }
    add_prime(mpz_get_ui(q.get_mpz_t()), v, total);
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p())
      throw std::runtime_error("prime factor out of supported range");
    add_prime(mpz_get_ui(rest.get_mpz_t()), 1, total);
  }
  return total;
}

}  // namespace monalg
