#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "monalg/cyclotomic.hpp"
#include "monalg/errors.hpp"
#include "monalg/intpoly.hpp"
#include "monalg/numtheory.hpp"
#include "monalg/parallel.hpp"

using monalg::cyclotomic_poly;
using monalg::IntPoly;

namespace {
IntPoly xn1(unsigned long n) {
  std::vector<mpz_class> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(c);
}
}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(2) == IntPoly{1, 1});
  CHECK(cyclotomic_poly(3) == IntPoly{1, 1, 1});
  CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_poly(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
  // prime index: 1 + x + ... + x^(p-1)
  CHECK(cyclotomic_poly(7) == IntPoly{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("degrees, palindromy, and the first non-trivial coefficient") {
  for (unsigned long n = 1; n <= 200; ++n)
    CHECK(cyclotomic_poly(n).degree() ==
          static_cast<long>(monalg::totient(n)));
  // coefficients read the same in both directions for n > 1
  for (unsigned long n : {5ul, 7ul, 12ul, 15ul, 36ul, 105ul}) {
    IntPoly p = cyclotomic_poly(n);
    long d = p.degree();
    for (long i = 0; i <= d; ++i)
      CHECK(p.coeff(static_cast<std::size_t>(i)) ==
            p.coeff(static_cast<std::size_t>(d - i)));
  }
  // Phi_105 is the first index with a coefficient outside {-1, 0, 1}
  CHECK(cyclotomic_poly(105).coeff(7) == -2);
  for (unsigned long n = 1; n < 105; ++n) {
    const IntPoly p = cyclotomic_poly(n);
    for (const auto& c : p.coeffs()) CHECK((c >= -1 && c <= 1));
  }
}

TEST_CASE("product over divisors gives x^n - 1") {
  for (unsigned long n : {1ul, 2ul, 12ul, 36ul, 100ul, 210ul}) {
    IntPoly prod = IntPoly::constant(1);
    auto divs = monalg::xn_minus_one_factorization(n);
    CHECK(divs == monalg::divisors_of(n));
    for (unsigned long d : divs) prod = prod * cyclotomic_poly(d);
    CHECK(prod == xn1(n));
  }
}

TEST_CASE("composition index sets") {
  using V = std::vector<unsigned long>;
  CHECK(monalg::compose_indices(1, 3) == V{1, 3});
  CHECK(monalg::compose_indices(3, 3) == V{9});
  CHECK(monalg::compose_indices(2, 3) == V{2, 6});
  CHECK(monalg::compose_indices(6, 15) == V{18, 90});
  CHECK(monalg::compose_indices(4, 3) == V{4, 12});
  CHECK(monalg::compose_indices(9, 3) == V{27});
  CHECK(monalg::compose_indices(5, 35) == V{25, 175});

  bool threw = false;
  try {
    monalg::compose_indices(2, 9);  // 9 is not squarefree
  } catch (const monalg::error& e) {
    threw = e.kind() == monalg::errc::not_squarefree;
  }
  CHECK(threw);

  // the identity the indices encode
  for (auto [y, r] : std::vector<std::pair<unsigned long, unsigned long>>{
           {1, 3}, {2, 3}, {3, 3}, {4, 15}, {6, 15}, {10, 21}, {9, 5}}) {
    IntPoly lhs = monalg::compose_power(cyclotomic_poly(y), r);
    IntPoly rhs = IntPoly::constant(1);
    for (unsigned long idx : monalg::compose_indices(y, r))
      rhs = rhs * cyclotomic_poly(idx);
    CHECK(lhs == rhs);
    // degree check: phi is multiplicative along the index set
    CHECK(lhs.degree() == static_cast<long>(monalg::totient(y) * r));
  }
}

TEST_CASE("cache is consistent under concurrent access") {
  // Warm nothing; hammer the cache from the parallel loop and compare with
  // fresh serial values afterwards.
  std::vector<IntPoly> par(120);
  monalg::parallel_for(par.size(), [&](std::size_t i) {
    par[i] = cyclotomic_poly(static_cast<unsigned long>(i) + 1);
  });
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i] == cyclotomic_poly(static_cast<unsigned long>(i) + 1));
    CHECK(par[i].lc() == 1);
  }
}
