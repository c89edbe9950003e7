#pragma once

#include <stdexcept>
#include <string>

namespace monalg {

enum class errc {
  divisor_zero,
  non_integral_quotient,
  zero_polynomial,
  constant_input,
  not_squarefree,
  reducible_input,
  depth_limit,
  not_a_divisor,
  wrong_exponent_set,
  not_coprime,
  unit_root,
  not_member_input,
  antimatter_monoid,
  incompatible_denominator,
  level_too_small,
  excluded_polynomial,
  degree_limit,
  syntax_error,
  exponent_domain_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::divisor_zero: return "DivisorZero";
    case errc::non_integral_quotient: return "NonIntegralQuotient";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::constant_input: return "ConstantInput";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::reducible_input: return "ReducibleInput";
    case errc::depth_limit: return "DepthLimit";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::wrong_exponent_set: return "WrongExponentSet";
    case errc::not_coprime: return "NotCoprime";
    case errc::unit_root: return "UnitRoot";
    case errc::not_member_input: return "NotMemberInput";
    case errc::antimatter_monoid: return "AntimatterMonoid";
    case errc::incompatible_denominator: return "IncompatibleDenominator";
    case errc::level_too_small: return "LevelTooSmall";
    case errc::excluded_polynomial: return "ExcludedPolynomial";
    case errc::degree_limit: return "DegreeLimit";
    case errc::syntax_error: return "SyntaxError";
    case errc::exponent_domain_error: return "ExponentDomainError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const { return kind_; }

 private:
  errc kind_;
};

}  // namespace monalg
