#pragma once

// Internal dense arithmetic over F_p for word-sized odd primes. Only what the
// factorization pipeline needs: mul/divrem/gcd, x^(p^k) mod f via repeated
// squaring, distinct-degree splitting, and Cantor-Zassenhaus equal-degree
// splitting. Not part of the public headers.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace monalg::modp {

using Poly = std::vector<std::uint64_t>;  // coefficient of x^i at index i, trimmed

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long deg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

Poly reduce(const std::vector<mpz_class>& coeffs, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly divrem(Poly a, const Poly& b, std::uint64_t p, Poly* quot = nullptr);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly make_monic(Poly a, std::uint64_t p);
Poly powmod_xq(const Poly& base, const mpz_class& e, const Poly& f, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);

// Distinct irreducible monic factors of a squarefree monic f, in deterministic
// order. rng drives the equal-degree splits.
std::vector<Poly> factor_squarefree_monic(const Poly& f, std::uint64_t p,
                                          std::mt19937_64& rng);

// Multiset of irreducible-factor degrees of a squarefree monic f, from the
// distinct-degree stage alone (no equal-degree splits), ascending.
std::vector<long> factor_degrees(const Poly& f, std::uint64_t p);

}  // namespace monalg::modp
