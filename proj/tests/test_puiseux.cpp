#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <vector>

#include "doctest.h"
#include "monalg/errors.hpp"
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

TEST_CASE("parameter normalization and classes") {
  PuiseuxParam p(6, 4);
  CHECK(p.num == 3);
  CHECK(p.den == 2);
  CHECK(p.r == 2);
  CHECK(p.cls == MonoidClass::at_least_one);
  CHECK(p.q() == mpq_class(3, 2));
  CHECK(p.q_pow(3) == mpq_class(27, 8));
  CHECK(p.q_pow(0) == 1);

  CHECK(PuiseuxParam(2, 1).cls == MonoidClass::natural);
  CHECK(PuiseuxParam(1, 1).cls == MonoidClass::natural);
  CHECK(PuiseuxParam(1, 2).cls == MonoidClass::antimatter);
  CHECK(PuiseuxParam(3, 4).cls == MonoidClass::atomic_non_accp);
  CHECK(PuiseuxParam(5, 9).cls == MonoidClass::atomic_non_accp);
  CHECK(PuiseuxParam(5, 9).r == 3);
  CHECK(PuiseuxParam(3, 4).r == 2);
  CHECK(PuiseuxParam(12, 8).num == 3);  // reduces to 3/2

  CHECK(atoms_of(PuiseuxParam(2, 1)) == AtomSet::single_unit);
  CHECK(atoms_of(PuiseuxParam(1, 2)) == AtomSet::antimatter);
  CHECK(atoms_of(PuiseuxParam(3, 4)) == AtomSet::powers_of_q);
  CHECK(atoms_of(PuiseuxParam(7, 2)) == AtomSet::powers_of_q);
}

TEST_CASE("canonical digit forms") {
  PuiseuxParam q34(3, 4);
  auto c = canonical_form(mpq_class(21, 16), q34);
  REQUIRE(c.has_value());
  CHECK(c->a0 == 0);
  CHECK(c->digits == std::vector<unsigned long>{1, 1});  // q + q^2
  CHECK(c->value(q34) == mpq_class(21, 16));

  auto c2 = canonical_form(7, q34);
  REQUIRE(c2.has_value());
  CHECK(c2->a0 == 7);
  CHECK(c2->digits.empty());

  auto c3 = canonical_form(mpq_class(3, 4), q34);
  REQUIRE(c3.has_value());
  CHECK(c3->a0 == 0);
  CHECK(c3->digits == std::vector<unsigned long>{1});

  PuiseuxParam q59(5, 9);
  auto c4 = canonical_form(mpq_class(5, 9), q59);
  REQUIRE(c4.has_value());
  CHECK(c4->a0 == 0);
  CHECK(c4->digits == std::vector<unsigned long>{1});

  PuiseuxParam q32(3, 2);
  auto c5 = canonical_form(mpq_class(7, 2), q32);
  REQUIRE(c5.has_value());
  CHECK(c5->a0 == 2);
  CHECK(c5->digits == std::vector<unsigned long>{1});
  CHECK(c5->value(q32) == mpq_class(7, 2));

  // non-members and out-of-lattice values
  CHECK(!canonical_form(mpq_class(1, 4), q34).has_value());
  CHECK(!canonical_form(mpq_class(5, 4), q34).has_value());
  CHECK(!canonical_form(mpq_class(-3, 4), q34).has_value());
  CHECK(!canonical_form(mpq_class(1, 3), q34).has_value());  // denominator 3
  CHECK(!canonical_form(mpq_class(1, 2), q34).has_value());  // 1/2 not reachable
}

TEST_CASE("membership matches the canonical form") {
  PuiseuxParam q34(3, 4);
  CHECK(is_member(0, q34));
  CHECK(is_member(1, q34));
  CHECK(is_member(mpq_class(3, 4), q34));
  CHECK(is_member(mpq_class(21, 16), q34));
  CHECK(is_member(mpq_class(9, 16), q34));
  CHECK(!is_member(mpq_class(1, 4), q34));
  CHECK(!is_member(mpq_class(-1, 1), q34));
  // natural monoid contains exactly the nonnegative integers
  PuiseuxParam nat(2, 1);
  CHECK(is_member(5, nat));
  CHECK(!is_member(mpq_class(1, 2), nat));
}

TEST_CASE("divisibility inside the monoid") {
  PuiseuxParam p(3, 4);
  using Q = mpq_class;
  CHECK(divides(Q(3, 4), Q(3, 2), p));
  CHECK(divides(Q(3, 2), Q(9, 4), p));
  CHECK(divides(Q(3, 4), Q(9, 4), p));
  CHECK(divides(1, 2, p));
  CHECK(!divides(Q(3, 4), 1, p));   // 1/4 is not a member
  CHECK(divides(0, Q(21, 16), p));
  CHECK(divides(Q(21, 16), Q(21, 16), p));
  CHECK_KIND(divides(Q(1, 4), 1, p), not_member_input);
  CHECK_KIND(divides(1, Q(5, 4), p), not_member_input);
}

TEST_CASE("atomic representations") {
  PuiseuxParam q34(3, 4);
  auto reps = atomic_factorizations(3, q34, 5);
  REQUIRE(reps.size() == 5);
  CHECK(reps[0] == ExponentMultiset{{0, 3}});
  CHECK(reps[1] == ExponentMultiset{{1, 4}});
  for (const auto& rep : reps) {
    mpq_class sum = 0;
    for (const auto& [e, c] : rep) {
      CHECK(c > 0);
      sum += mpq_class(c) * q34.q_pow(e);
    }
    CHECK(sum == 3);
  }

  // natural monoids have exactly the flat representation
  auto nat = atomic_factorizations(5, PuiseuxParam(2, 1), 10);
  REQUIRE(nat.size() == 1);
  CHECK(nat[0] == ExponentMultiset{{0, 5}});

  CHECK_KIND(atomic_factorizations(1, PuiseuxParam(1, 2), 3), antimatter_monoid);
  CHECK_KIND(atomic_factorizations(mpq_class(5, 4), q34, 3), not_member_input);
}

TEST_CASE("chain condition verdicts") {
  PuiseuxParam q34(3, 4);
  auto r = accp_status(3, q34, 10);
  CHECK(r.status == AccpStatus::fails);
  REQUIRE(r.witness_chain.size() == 3);
  CHECK(r.witness_chain[0] == 3);
  CHECK(r.witness_chain[1] == mpq_class(9, 4));
  CHECK(r.witness_chain[2] == mpq_class(27, 16));
  // each step of the witness divides the previous one
  CHECK(divides(r.witness_chain[1], r.witness_chain[0], q34));
  CHECK(divides(r.witness_chain[2], r.witness_chain[1], q34));

  CHECK(accp_status(0, q34, 5).status == AccpStatus::satisfies);
  CHECK(accp_status(mpq_class(9, 16), q34, 5).status == AccpStatus::satisfies);
  CHECK(accp_status(5, q34, 4).status == AccpStatus::unknown);

  // q >= 1: every member satisfies the chain condition
  CHECK(accp_status(7, PuiseuxParam(7, 2), 3).status == AccpStatus::satisfies);
  CHECK(accp_status(4, PuiseuxParam(2, 1), 3).status == AccpStatus::satisfies);

  // antimatter monoids fail instantly away from zero
  auto ra = accp_status(1, PuiseuxParam(1, 2), 5);
  CHECK(ra.status == AccpStatus::fails);
  CHECK(ra.witness_chain ==
        std::vector<mpq_class>{1, mpq_class(1, 2), mpq_class(1, 4)});

  CHECK_KIND(accp_status(mpq_class(5, 4), q34, 5), not_member_input);
}
