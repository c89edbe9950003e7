#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monalg/errors.hpp"
#include "monalg/intpoly.hpp"
#include "monalg/puiseux.hpp"

namespace monalg {

// Element of Z[M_q]: finitely many terms c * x^e with e a nonnegative rational
// whose denominator divides a power of d(q).
class MonAlgPoly {
 public:
  MonAlgPoly() = default;
  explicit MonAlgPoly(PuiseuxParam ctx) : ctx_(std::move(ctx)) {}
  MonAlgPoly(PuiseuxParam ctx,
             const std::vector<std::pair<mpq_class, mpz_class>>& term_list);

  static MonAlgPoly from_int_poly(const IntPoly& f, const PuiseuxParam& ctx);

  const std::map<mpq_class, mpz_class>& terms() const { return terms_; }
  const PuiseuxParam& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const MonAlgPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MonAlgPoly& o) const { return !(*this == o); }
  MonAlgPoly operator-() const;
  MonAlgPoly operator+(const MonAlgPoly& o) const;
  MonAlgPoly operator-(const MonAlgPoly& o) const;
  MonAlgPoly operator*(const MonAlgPoly& o) const;
  MonAlgPoly operator*(const mpz_class& c) const;

  std::string to_string() const;

 private:
  PuiseuxParam ctx_;
  std::map<mpq_class, mpz_class> terms_;

  void add_term(const mpq_class& e, const mpz_class& c);
};

struct MonAlgStats {
  std::vector<mpq_class> support;
  mpq_class order;
  mpq_class degree;
  mpz_class content;
};

MonAlgStats stats(const MonAlgPoly& f);

// Minimal lambda with every exponent in (1/r^lambda) N0.
unsigned long level_of(const MonAlgPoly& f, unsigned long r);

// Exponent m maps to m * r^lambda; requires lambda >= level_of(f, r).
IntPoly to_integer_poly(const MonAlgPoly& f, unsigned long lambda);

struct MonAlgFactorization {
  int sign = 1;
  mpz_class content = 1;
  std::vector<std::pair<MonAlgPoly, unsigned>> factors;

  MonAlgPoly reconstruct(const PuiseuxParam& ctx) const;
};

MonAlgFactorization factor_at_level(const MonAlgPoly& f, unsigned long lambda);

struct StabilizationReport {
  struct Entry {
    MonAlgPoly factor;
    unsigned multiplicity = 1;
    bool monomial = false;
    std::optional<unsigned long> cyclotomic;  // y when the level factor is Phi_y
  };
  struct Level {
    unsigned long level = 0;
    std::vector<Entry> entries;
  };

  unsigned long base_level = 0;
  unsigned long lambda_max = 0;
  int sign = 1;
  mpz_class content = 1;
  // Least level from which the factor multiset stays constant through
  // lambda_max; requires at least one cross-level comparison to certify.
  std::optional<unsigned long> gamma;
  // Same test ignoring monomial and cyclotomic factors.
  std::optional<unsigned long> core_gamma;
  bool not_stabilized = false;
  std::vector<Level> levels;
};

StabilizationReport stable_factorization(const MonAlgPoly& f, unsigned long lambda_max);

// r^(H + m*lambda_value) for |lc| >= 2 (H from the exact power comparison),
// r^lambda_value for monic-up-to-sign f; r = product of pi, m = |pi|.
mpz_class divisor_count_bound(const IntPoly& f, const std::set<unsigned long>& pi,
                              unsigned long lambda_value);

// Number of distinct irreducible factors of f(x^(r^lambda)).
std::size_t count_irreducible_divisors(const IntPoly& f, unsigned long r,
                                       unsigned long lambda);

enum class AccpSupport { yes, no, unknown };

AccpSupport is_accp_supported(const MonAlgPoly& f, unsigned horizon);

}  // namespace monalg
