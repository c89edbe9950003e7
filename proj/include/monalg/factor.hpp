#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monalg/intpoly.hpp"

namespace monalg {

// sign * content * prod factors[i]^mult[i] reconstructs the input exactly.
// Factors are primitive, irreducible, positive leading coefficient, sorted by
// poly_less, pairwise distinct.
struct Factorization {
  int sign = 1;
  mpz_class content = 1;
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly reconstruct() const;
  std::size_t distinct_count() const { return factors.size(); }
};

// Yun decomposition of the primitive part: pairwise coprime squarefree parts
// with multiplicities. Throws ConstantInput for constants (and ZeroPolynomial).
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

// Complete factorization over Z. Deterministic. Throws ZeroPolynomial and
// DegreeLimit (deg > 4096).
Factorization factor_over_integers(const IntPoly& f);

// True iff f is irreducible over Z (one factor, multiplicity 1, content 1).
// Throws ConstantInput.
bool is_irreducible(const IntPoly& f);

// y such that f = +-Phi_y, if any.
std::optional<unsigned long> cyclotomic_index(const IntPoly& f);

// Degree cap for factor_over_integers inputs.
inline constexpr long kFactorDegreeLimit = 4096;

}  // namespace monalg
