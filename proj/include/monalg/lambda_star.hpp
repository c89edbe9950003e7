#pragma once

#include <gmpxx.h>

#include <set>

namespace monalg {

// How the rational prime q splits in the N-th cyclotomic field:
// ramification index e, residue degree f_res, and number of primes g.
struct PrimeSplittingData {
  unsigned long q = 0;
  unsigned long N = 0;
  unsigned long e = 0;
  unsigned long f_res = 0;
  unsigned long g = 0;
};

PrimeSplittingData prime_splitting_in_cyclotomic(unsigned long q, unsigned long N);

// Upper bound for the leading-S count of x - a under compositions drawn from
// the primes in P.  Requires |a| >= 2.
mpz_class lambda_star_linear(const mpz_class& a, const std::set<unsigned long>& P);

}  // namespace monalg
