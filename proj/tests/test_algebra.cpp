#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "monalg/algebra.hpp"
#include "monalg/errors.hpp"
#include "monalg/intpoly.hpp"
#include "monalg/parallel.hpp"
#include "monalg/puiseux.hpp"

using namespace monalg;

#define CHECK_KIND(expr, k)                    \
  do {                                         \
    bool caught_ = false;                      \
    try {                                      \
      (void)(expr);                            \
    } catch (const monalg::error& e_) {        \
      caught_ = true;                          \
      CHECK(e_.kind() == monalg::errc::k);     \
    }                                          \
    CHECK(caught_);                            \
  } while (0)

namespace {

const PuiseuxParam kThird(1, 3);

MonAlgPoly cube_root_factor() {
  // x^(1/3) - 2
  return MonAlgPoly(kThird, {{mpq_class(1, 3), 1}, {mpq_class(0), -2}});
}

MonAlgPoly cube_root_cofactor() {
  // x^(2/3) + 2*x^(1/3) + 4
  return MonAlgPoly(kThird, {{mpq_class(2, 3), 1},
                             {mpq_class(1, 3), 2},
                             {mpq_class(0), 4}});
}

}  // namespace

TEST_CASE("term construction merges and drops zeros") {
  MonAlgPoly z(kThird, {{mpq_class(1), 1}, {mpq_class(1), -1}});
  CHECK(z.is_zero());
  MonAlgPoly f(kThird, {{mpq_class(1, 3), 2}, {mpq_class(1, 3), -1}});
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms().at(mpq_class(1, 3)) == 1);

  CHECK_KIND(MonAlgPoly(kThird, {{mpq_class(-1, 3), 1}}), incompatible_denominator);
  CHECK_KIND(MonAlgPoly(kThird, {{mpq_class(1, 2), 1}}), incompatible_denominator);
}

TEST_CASE("arithmetic and the cube root identity") {
  MonAlgPoly lhs = cube_root_factor() * cube_root_cofactor();
  MonAlgPoly rhs = MonAlgPoly::from_int_poly(IntPoly{-8, 1}, kThird);
  CHECK(lhs == rhs);
  CHECK(lhs.to_string() == "x - 8");

  MonAlgPoly sum = cube_root_factor() + cube_root_cofactor();
  CHECK(sum.terms().at(mpq_class(1, 3)) == 3);
  CHECK((sum - cube_root_cofactor()) == cube_root_factor());
  CHECK((cube_root_factor() * mpz_class(0)).is_zero());
  MonAlgPoly neg = -cube_root_factor();
  CHECK(neg.terms().at(mpq_class(0)) == 2);
  CHECK((cube_root_factor() * mpz_class(-2)) == neg * mpz_class(2));
}

TEST_CASE("printing") {
  CHECK(cube_root_factor().to_string() == "x^(1/3) - 2");
  CHECK(cube_root_cofactor().to_string() == "x^(2/3) + 2*x^(1/3) + 4");
  CHECK(MonAlgPoly().to_string() == "0");
  PuiseuxParam q59(5, 9);
  MonAlgPoly h(q59, {{mpq_class(5, 9), 1}, {mpq_class(0), 2}});
  CHECK(h.to_string() == "x^(5/9) + 2");
}

TEST_CASE("stats and levels") {
  PuiseuxParam q59(5, 9);
  MonAlgPoly h(q59, {{mpq_class(5, 9), 6}, {mpq_class(0), 2}});
  MonAlgStats s = stats(h);
  CHECK(s.support == std::vector<mpq_class>{0, mpq_class(5, 9)});
  CHECK(s.order == 0);
  CHECK(s.degree == mpq_class(5, 9));
  CHECK(s.content == 2);
  CHECK_KIND(stats(MonAlgPoly()), zero_polynomial);

  CHECK(level_of(MonAlgPoly::from_int_poly(IntPoly{-2, 1}, kThird), 3) == 0);
  CHECK(level_of(cube_root_factor(), 3) == 1);
  CHECK(level_of(h, 3) == 2);
  CHECK_KIND(level_of(h, 1), incompatible_denominator);
  PuiseuxParam half(1, 2);
  MonAlgPoly k(half, {{mpq_class(1, 2), 1}, {mpq_class(0), -1}});
  CHECK(level_of(k, 2) == 1);
  CHECK_KIND(level_of(k, 3), incompatible_denominator);
}

TEST_CASE("integer images") {
  CHECK(to_integer_poly(cube_root_factor(), 1) == IntPoly{-2, 1});
  CHECK(to_integer_poly(cube_root_factor(), 2) == IntPoly{-2, 0, 0, 1});
  CHECK_KIND(to_integer_poly(cube_root_factor(), 0), level_too_small);

  for (const IntPoly& g : {IntPoly{-8, 1}, IntPoly{1, 2, 3, 1}, IntPoly{5}}) {
    MonAlgPoly f = MonAlgPoly::from_int_poly(g, kThird);
    CHECK(to_integer_poly(f, 0) == g);
    CHECK(to_integer_poly(f, 1) == compose_power(g, 3));
  }
  CHECK(MonAlgPoly::from_int_poly(IntPoly::zero(), kThird).is_zero());
}

TEST_CASE("single level factorization") {
  MonAlgPoly f = MonAlgPoly::from_int_poly(IntPoly{6, -3}, kThird);  // -3x + 6
  MonAlgFactorization fac = factor_at_level(f, 0);
  CHECK(fac.sign == -1);
  CHECK(fac.content == 3);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == MonAlgPoly::from_int_poly(IntPoly{-2, 1}, kThird));
  CHECK(fac.factors[0].second == 1);
  CHECK(fac.reconstruct(kThird) == f);

  MonAlgFactorization fac1 = factor_at_level(f, 1);
  CHECK(fac1.sign == -1);
  CHECK(fac1.content == 3);
  REQUIRE(fac1.factors.size() == 1);
  CHECK(fac1.factors[0].first == MonAlgPoly::from_int_poly(IntPoly{-2, 1}, kThird));
  CHECK(fac1.reconstruct(kThird) == f);

  MonAlgPoly x8 = MonAlgPoly::from_int_poly(IntPoly{-8, 1}, kThird);
  MonAlgFactorization fac8 = factor_at_level(x8, 1);
  REQUIRE(fac8.factors.size() == 2);
  CHECK(fac8.reconstruct(kThird) == x8);
  std::vector<MonAlgPoly> got{fac8.factors[0].first, fac8.factors[1].first};
  CHECK(std::count(got.begin(), got.end(), cube_root_factor()) == 1);
  CHECK(std::count(got.begin(), got.end(), cube_root_cofactor()) == 1);
}

TEST_CASE("stabilization of x - 8") {
  MonAlgPoly x8 = MonAlgPoly::from_int_poly(IntPoly{-8, 1}, kThird);
  StabilizationReport rep = stable_factorization(x8, 3);
  CHECK(rep.base_level == 0);
  CHECK(rep.lambda_max == 3);
  CHECK(rep.sign == 1);
  CHECK(rep.content == 1);
  REQUIRE(rep.gamma.has_value());
  CHECK(*rep.gamma == 1);
  REQUIRE(rep.core_gamma.has_value());
  CHECK(*rep.core_gamma == 1);
  CHECK(!rep.not_stabilized);
  REQUIRE(rep.levels.size() == 4);
  CHECK(rep.levels[0].entries.size() == 1);
  for (std::size_t i = 1; i < 4; ++i) {
    const auto& es = rep.levels[i].entries;
    REQUIRE(es.size() == 2);
    for (const auto& ent : es) {
      CHECK(ent.multiplicity == 1);
      CHECK(!ent.monomial);
      CHECK(!ent.cyclotomic.has_value());
      CHECK((ent.factor == cube_root_factor() || ent.factor == cube_root_cofactor()));
    }
    CHECK(es[0].factor != es[1].factor);
  }
}

TEST_CASE("stabilization of x - 2 is constant") {
  MonAlgPoly x2 = MonAlgPoly::from_int_poly(IntPoly{-2, 1}, kThird);
  StabilizationReport rep = stable_factorization(x2, 2);
  REQUIRE(rep.gamma.has_value());
  CHECK(*rep.gamma == 0);
  for (const auto& lv : rep.levels) {
    REQUIRE(lv.entries.size() == 1);
    CHECK(lv.entries[0].factor == x2);
    CHECK(lv.entries[0].multiplicity == 1);
  }
}

TEST_CASE("cyclotomic inputs never stabilize in full") {
  MonAlgPoly sq = MonAlgPoly::from_int_poly(IntPoly{-1, 0, 1}, kThird);
  StabilizationReport rep = stable_factorization(sq, 2);
  CHECK(rep.not_stabilized);
  CHECK(!rep.gamma.has_value());
  REQUIRE(rep.core_gamma.has_value());
  CHECK(*rep.core_gamma == 0);
  REQUIRE(rep.levels.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& lv : rep.levels) sizes.push_back(lv.entries.size());
  CHECK(sizes == std::vector<std::size_t>{2, 4, 6});
  std::set<unsigned long> top;
  for (const auto& ent : rep.levels[2].entries) {
    REQUIRE(ent.cyclotomic.has_value());
    top.insert(*ent.cyclotomic);
  }
  CHECK(top == std::set<unsigned long>{1, 2, 3, 6, 9, 18});
}

TEST_CASE("monomial and unit factors are flagged") {
  MonAlgPoly f = MonAlgPoly::from_int_poly(IntPoly{0, -1, 1}, kThird);  // x^2 - x
  StabilizationReport rep = stable_factorization(f, 2);
  CHECK(rep.not_stabilized);
  REQUIRE(rep.core_gamma.has_value());
  CHECK(*rep.core_gamma == 0);
  bool saw_monomial = false, saw_phi1 = false;
  for (const auto& ent : rep.levels[0].entries) {
    if (ent.monomial) saw_monomial = true;
    if (ent.cyclotomic == 1ul) saw_phi1 = true;
  }
  CHECK(saw_monomial);
  CHECK(saw_phi1);
  // multiplicity of the monomial grows with the level
  for (const auto& ent : rep.levels[2].entries)
    if (ent.monomial) CHECK(ent.multiplicity == 9);
}

TEST_CASE("stabilization input validation") {
  CHECK_KIND(stable_factorization(MonAlgPoly(), 2), zero_polynomial);
  MonAlgPoly mono(kThird, {{mpq_class(1, 3), 3}});
  CHECK_KIND(stable_factorization(mono, 2), excluded_polynomial);
  MonAlgPoly c(kThird, {{mpq_class(0), 5}});
  CHECK_KIND(stable_factorization(c, 2), excluded_polynomial);
  CHECK_KIND(stable_factorization(cube_root_factor(), 0), level_too_small);
  // a single level cannot certify stability
  StabilizationReport rep = stable_factorization(
      MonAlgPoly::from_int_poly(IntPoly{-8, 1}, kThird), 0);
  CHECK(!rep.gamma.has_value());
  CHECK(rep.not_stabilized);
  CHECK(rep.levels.size() == 1);
}

TEST_CASE("divisor count bound") {
  IntPoly f{-3, 2};  // 2x - 3
  CHECK(divisor_count_bound(f, {3}, 0) == 3);
  CHECK(divisor_count_bound(f, {3}, 2) == 27);
  CHECK(divisor_count_bound(IntPoly{-2, 1}, {3}, 2) == 9);
  CHECK(divisor_count_bound(f, {3, 5}, 1) == 3375);

  CHECK_KIND(divisor_count_bound(IntPoly{-1, 0, 1}, {3}, 1), reducible_input);
  CHECK_KIND(divisor_count_bound(IntPoly::x(), {3}, 1), excluded_polynomial);
  CHECK_KIND(divisor_count_bound(IntPoly{1, 1}, {3}, 1), excluded_polynomial);
  CHECK_KIND(divisor_count_bound(f, {}, 1), wrong_exponent_set);
  CHECK_KIND(divisor_count_bound(f, {2}, 1), wrong_exponent_set);
  CHECK_KIND(divisor_count_bound(f, {9}, 1), wrong_exponent_set);
}

TEST_CASE("irreducible divisor counts") {
  CHECK(count_irreducible_divisors(IntPoly{-2, 1}, 3, 0) == 1);
  CHECK(count_irreducible_divisors(IntPoly{-2, 1}, 3, 1) == 1);
  CHECK(count_irreducible_divisors(IntPoly{-8, 1}, 3, 1) == 2);
  CHECK(count_irreducible_divisors(IntPoly{-512, 1}, 3, 1) == 2);
  CHECK(count_irreducible_divisors(IntPoly{-2, 1}, 3, 3) == 1);
  CHECK(count_irreducible_divisors(IntPoly{-8, 1}, 3, 3) == 2);
  CHECK(count_irreducible_divisors(IntPoly{-512, 1}, 3, 3) == 3);

  CHECK_KIND(count_irreducible_divisors(IntPoly{-1, 0, 1}, 3, 1), reducible_input);
  CHECK_KIND(count_irreducible_divisors(IntPoly{-2, 1}, 3, 20), degree_limit);
  CHECK_KIND(count_irreducible_divisors(IntPoly{-2, 1}, 1, 1), wrong_exponent_set);
}

TEST_CASE("chain condition support of the exponents") {
  PuiseuxParam q34(3, 4);
  MonAlgPoly yes(q34, {{mpq_class(9, 16), 1}, {mpq_class(3), 1}});
  CHECK(is_accp_supported(yes, 8) == AccpSupport::yes);
  MonAlgPoly no(q34, {{mpq_class(3), 2}});
  CHECK(is_accp_supported(no, 8) == AccpSupport::no);
  MonAlgPoly unk(q34, {{mpq_class(5), 1}, {mpq_class(3), 1}});
  CHECK(is_accp_supported(unk, 4) == AccpSupport::unknown);
  CHECK_KIND(is_accp_supported(MonAlgPoly(), 4), zero_polynomial);
}

TEST_CASE("serial and parallel stabilization agree") {
  MonAlgPoly x8 = MonAlgPoly::from_int_poly(IntPoly{-8, 1}, kThird);
  set_execution_mode(exec_mode::serial);
  StabilizationReport a = stable_factorization(x8, 3);
  set_execution_mode(exec_mode::parallel);
  StabilizationReport b = stable_factorization(x8, 3);
  CHECK(a.gamma == b.gamma);
  CHECK(a.core_gamma == b.core_gamma);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    REQUIRE(a.levels[i].entries.size() == b.levels[i].entries.size());
    for (std::size_t j = 0; j < a.levels[i].entries.size(); ++j) {
      CHECK(a.levels[i].entries[j].factor == b.levels[i].entries[j].factor);
      CHECK(a.levels[i].entries[j].multiplicity == b.levels[i].entries[j].multiplicity);
    }
  }
}
