#pragma once

#include <string>

#include "monalg/algebra.hpp"
#include "monalg/intpoly.hpp"

namespace monalg {

// Grammar: expr := term (("+"|"-") term)*; term := coeff | coeff "*" mono |
// mono; mono := "x" ["^" exponent]; exponent := integer | "(" integer "/"
// integer ")". Whitespace is insignificant; coefficients are optionally signed
// decimal integers; a leading "-" before the first term is accepted.
IntPoly parse_int_poly(const std::string& text);

// Rational-exponent mode; exponent denominators must divide a power of d(q).
MonAlgPoly parse_monalg_poly(const std::string& text, const PuiseuxParam& ctx);

}  // namespace monalg
