#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "monalg/errors.hpp"

namespace monalg {

// Dense univariate polynomial over arbitrary-precision integers.
// coeffs[i] is the coefficient of x^i; no stored leading zero; the zero
// polynomial is the empty vector and reports degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(const mpz_class& v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
  }
  // c * x^k
  static IntPoly monomial(const mpz_class& c, std::size_t k);
  static IntPoly x() { return IntPoly({0, 1}); }

  bool is_zero() const { return c_.empty(); }
  // -1 stands for deg(0) = -inf; fine for every comparison we do.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpz_class& lc() const;
  const mpz_class& coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const mpz_class& s) const;

  mpz_class eval(const mpz_class& v) const;
  IntPoly derivative() const;

  std::string to_string() const;  // human form, descending powers

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// Quotient and remainder with the quotient required integral: f = q*g + rem,
// deg rem < deg g. Throws DivisorZero and NonIntegralQuotient.
std::pair<IntPoly, IntPoly> div_rem(const IntPoly& f, const IntPoly& g);

// True division check: g | f over Z with integral quotient.
bool divides_exactly(const IntPoly& g, const IntPoly& f);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

struct ContentSplit {
  int sign;            // +1 or -1
  mpz_class content;   // positive
  IntPoly primitive;   // positive leading coefficient, content 1
};

// f = sign * content * primitive, exactly. Throws ZeroPolynomial.
ContentSplit content_primitive(const IntPoly& f);

// f(x^r). r >= 1.
IntPoly compose_power(const IntPoly& f, unsigned long r);

// Fixed total order used everywhere factor lists are sorted:
// by degree, then lexicographically on coefficients from the highest power down.
bool poly_less(const IntPoly& a, const IntPoly& b);

}  // namespace monalg
