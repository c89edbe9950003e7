#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monalg/errors.hpp"

namespace monalg {

enum class MonoidClass { natural, antimatter, atomic_non_accp, at_least_one };

// The monoid M_q generated by the powers of a fixed positive rational q.
struct PuiseuxParam {
  unsigned long num = 1;  // n(q)
  unsigned long den = 1;  // d(q); gcd(num, den) = 1
  unsigned long r = 1;    // squarefree part of den
  MonoidClass cls = MonoidClass::natural;

  PuiseuxParam() = default;
  PuiseuxParam(unsigned long n, unsigned long d);

  mpq_class q() const { return mpq_class(num, den); }
  mpq_class q_pow(unsigned long k) const;
};

// x = a0 + sum_i digits[i-1] * q^i with digits in [0, d(q)-1], top digit nonzero.
struct CanonicalRep {
  mpz_class a0;
  std::vector<unsigned long> digits;

  mpq_class value(const PuiseuxParam& p) const;
};

enum class AtomSet { single_unit, antimatter, powers_of_q };

AtomSet atoms_of(const PuiseuxParam& p);

std::optional<CanonicalRep> canonical_form(const mpq_class& x, const PuiseuxParam& p);
bool is_member(const mpq_class& x, const PuiseuxParam& p);

// True iff b - a lies in M_q. Both arguments must be members.
bool divides(const mpq_class& a, const mpq_class& b, const PuiseuxParam& p);

// Representations x = sum_i c_i q^i reached from the canonical form by trading
// n(q) copies of q^i for d(q) copies of q^(i+1) and back, up to `limit` many.
using ExponentMultiset = std::map<unsigned long, mpz_class>;
std::vector<ExponentMultiset> atomic_factorizations(const mpq_class& x,
                                                    const PuiseuxParam& p,
                                                    std::size_t limit);

enum class AccpStatus { satisfies, fails, unknown };

struct AccpResult {
  AccpStatus status = AccpStatus::unknown;
  // First three elements of a strictly descending divisibility chain when
  // status == fails.
  std::vector<mpq_class> witness_chain;
};

AccpResult accp_status(const mpq_class& x, const PuiseuxParam& p, unsigned horizon);

}  // namespace monalg
