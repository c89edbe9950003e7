#pragma once

#include <vector>

#include "monalg/intpoly.hpp"

namespace monalg {

// Exact n-th cyclotomic polynomial, cache-assisted; safe for concurrent calls.
IntPoly cyclotomic_poly(unsigned long n);

// Sorted divisor list of n; x^n - 1 = prod over it of Phi_d.
std::vector<unsigned long> xn_minus_one_factorization(unsigned long n);

// Indices { y*d*gcd(y,r) : d | r/gcd(y,r) } with Phi_y(x^r) = prod Phi_index.
// r must be squarefree and >= 2; throws NotSquarefree.
std::vector<unsigned long> compose_indices(unsigned long y, unsigned long r);

}  // namespace monalg
