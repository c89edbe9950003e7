#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monalg/errors.hpp"

namespace monalg {

bool is_prime(unsigned long n);
std::vector<unsigned long> divisors_of(unsigned long n);                 // sorted
std::vector<std::pair<unsigned long, unsigned>> factor_integer(unsigned long n);
unsigned long totient(unsigned long n);
int moebius(unsigned long n);                       // 0 when n not squarefree
unsigned long radical(unsigned long n);
bool is_squarefree(unsigned long n);
unsigned omega(unsigned long n);                    // distinct prime factors; omega(1) = 0
unsigned big_omega(unsigned long n);                // with multiplicity; big_omega(1) = 0

// Least k >= 1 with a^k = 1 mod n. Throws NotCoprime when gcd(a, n) != 1.
unsigned long multiplicative_order(long a, unsigned long n);

// All y >= 1 with totient(y) = m, sorted ascending.
std::vector<unsigned long> inverse_totient(unsigned long m);

}  // namespace monalg
