#include "monalg/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monalg/algebra.hpp"
#include "monalg/cyclotomic.hpp"
#include "monalg/errors.hpp"
#include "monalg/factor.hpp"
#include "monalg/lambda_star.hpp"
#include "monalg/numtheory.hpp"
#include "monalg/parallel.hpp"
#include "monalg/puiseux.hpp"
#include "monalg/splitting.hpp"

namespace monalg {
namespace {

void add_check(Report& rep, std::string id, std::string anchor, bool ok,
               std::string details) {
  rep.checks.push_back(CheckRecord{std::move(id), std::move(anchor),
                                   ok ? CheckStatus::pass : CheckStatus::fail,
                                   std::move(details)});
}

IntPoly xn_minus_1(unsigned long n) {
  std::vector<mpz_class> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

IntPoly linear_minus(const mpz_class& a) {  // x - a
  return IntPoly(std::vector<mpz_class>{-a, 1});
}

mpz_class zpow(const mpz_class& b, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

unsigned long ipow(unsigned long b, unsigned e) {
  unsigned long out = 1;
  while (e--) out *= b;
  return out;
}

// Not uniform_int_distribution: its output is implementation-defined, and the
// corpus must be the same bytes on every toolchain.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::size_t count_bad(const std::vector<char>& ok) {
  return static_cast<std::size_t>(std::count(ok.begin(), ok.end(), char(0)));
}

// ---------------------------------------------------------------------------
// cyclotomic

void suite_cyclotomic(Report& rep, const VerifyConfig&) {
  {
    const std::size_t nmax = 300;
    std::vector<char> ok(nmax, 1);
    parallel_for(nmax, [&](std::size_t i) {
      unsigned long n = static_cast<unsigned long>(i) + 1;
      IntPoly prod = IntPoly::constant(1);
      for (unsigned long d : xn_minus_one_factorization(n))
        prod = prod * cyclotomic_poly(d);
      ok[i] = prod == xn_minus_1(n) ? 1 : 0;
    });
    std::size_t bad = count_bad(ok);
    std::ostringstream d;
    d << nmax - bad << " of " << nmax << " products match for n = 1.." << nmax;
    add_check(rep, "cyclotomic/product-identity",
              "prod over d | n of Phi_d(x) = x^n - 1", bad == 0, d.str());
  }
  {
    const std::vector<unsigned long> rs{3, 5, 7, 15, 21, 35, 105};
    std::vector<std::pair<unsigned long, unsigned long>> jobs;
    for (unsigned long y = 1; y <= 50; ++y)
      for (unsigned long r : rs) jobs.emplace_back(y, r);
    std::vector<char> ok(jobs.size(), 1);
    parallel_for(jobs.size(), [&](std::size_t i) {
      auto [y, r] = jobs[i];
      IntPoly lhs = compose_power(cyclotomic_poly(y), r);
      IntPoly rhs = IntPoly::constant(1);
      for (unsigned long idx : compose_indices(y, r))
        rhs = rhs * cyclotomic_poly(idx);
      ok[i] = lhs == rhs ? 1 : 0;
    });
    std::size_t bad = count_bad(ok);
    std::ostringstream d;
    d << jobs.size() - bad << " of " << jobs.size()
      << " identities match for y = 1..50, r in {3, 5, 7, 15, 21, 35, 105}";
    add_check(rep, "cyclotomic/compose-identity",
              "Phi_y(x^r) = prod over d | r/g of Phi_{y*d*g}(x), g = gcd(y, r)",
              bad == 0, d.str());
  }
}

// ---------------------------------------------------------------------------
// composed

void suite_composed(Report& rep, const VerifyConfig& cfg) {
  auto corpus = irreducible_corpus(cfg.seed, 220);
  const std::vector<unsigned long> rs{3, 5, 15};
  {
    std::vector<std::size_t> counts(corpus.size() * rs.size(), 0);
    std::vector<char> ok(counts.size(), 1);
    parallel_for(counts.size(), [&](std::size_t i) {
      const IntPoly& f = corpus[i / rs.size()];
      unsigned long r = rs[i % rs.size()];
      counts[i] = factor_over_integers(compose_power(f, r)).distinct_count();
      ok[i] = counts[i] <= r ? 1 : 0;
    });
    std::size_t bad = count_bad(ok);
    std::size_t maxc = *std::max_element(counts.begin(), counts.end());
    std::ostringstream d;
    d << corpus.size() << " irreducibles x r in {3, 5, 15}, "
      << counts.size() - bad << " of " << counts.size()
      << " within bound; max distinct divisor count " << maxc;
    add_check(rep, "composed/divisor-count",
              "f irreducible, r odd squarefree: f(x^r) has at most r distinct "
              "irreducible divisors",
              bad == 0, d.str());
  }
  {
    struct Job {
      IntPoly f;
      unsigned long r;
    };
    std::vector<Job> jobs;
    // b^k x^j - a^k splits under x -> x^k, so these compositions are reducible
    // with |lc| >= 2 and exercise the bound non-vacuously (equality for the
    // large cofactor).
    const std::vector<std::pair<long, long>> ab{{1, 2}, {3, 2}, {2, 3}, {5, 2},
                                                {3, 4}, {7, 2}, {5, 3}, {4, 5},
                                                {7, 3}, {8, 3}};
    for (auto [a, b] : ab) {
      mpz_class a3 = mpz_class(a) * a * a, b3 = mpz_class(b) * b * b;
      mpz_class a5 = a3 * a * a, b5 = b3 * b * b;
      jobs.push_back({IntPoly(std::vector<mpz_class>{-a3, b3}), 3});
      jobs.push_back({IntPoly(std::vector<mpz_class>{-a3, 0, b3}), 3});
      jobs.push_back({IntPoly(std::vector<mpz_class>{-a5, b5}), 5});
    }
    const std::size_t designed = jobs.size();
    for (const IntPoly& f : corpus)
      if (f.lc() >= 2)
        for (unsigned long r : rs) jobs.push_back({f, r});
    std::vector<char> ok(jobs.size(), 1);
    std::vector<char> reducible(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t i) {
      const auto& [f, r] = jobs[i];
      auto fac = factor_over_integers(compose_power(f, r));
      if (fac.factors.size() == 1 && fac.factors[0].second == 1) return;
      reducible[i] = 1;
      unsigned long pmax = factor_integer(r).back().first;
      mpz_class rhs = zpow(f.lc(), pmax - 1);
      for (const auto& [g, mult] : fac.factors) {
        (void)mult;
        if (zpow(g.lc(), pmax) > rhs) {
          ok[i] = 0;
          break;
        }
      }
    });
    std::size_t bad = count_bad(ok);
    std::size_t red = 0;
    for (char c : reducible) red += c != 0;
    std::ostringstream d;
    d << jobs.size() << " compositions with lc(f) >= 2, " << red
      << " reducible (" << designed << " by construction), all factor bounds hold: "
      << (bad == 0 ? "yes" : "no");
    add_check(rep, "composed/lc-bound",
              "f(x^r) reducible: every irreducible divisor g satisfies "
              "|lc(g)|^p <= |lc(f)|^(p-1) with p the largest prime of r",
              bad == 0 && red >= designed, d.str());
  }
}

// ---------------------------------------------------------------------------
// splitting

void suite_splitting(Report& rep, const VerifyConfig& cfg) {
  const IntPoly f_ex{1, 2, 3, 1};            // x^3 + 3x^2 + 2x + 1
  const IntPoly g1{1, -1, 0, 1};             // x^3 - x + 1
  const IntPoly g2{1, 1, 1, 2, 1, 0, 1};     // x^6 + x^4 + 2x^3 + x^2 + x + 1
  {
    auto fac = factor_over_integers(compose_power(f_ex, 3));
    bool ok = fac.sign == 1 && fac.content == 1 && fac.factors.size() == 2 &&
              fac.factors[0].first == g1 && fac.factors[0].second == 1 &&
              fac.factors[1].first == g2 && fac.factors[1].second == 1;
    add_check(rep, "splitting/example-factorization",
              "x^9 + 3x^6 + 2x^3 + 1 = (x^3 - x + 1)"
              "(x^6 + x^4 + 2x^3 + x^2 + x + 1)",
              ok, ok ? "both factors verified irreducible" : "mismatch");
  }
  {
    SplitTree tree = enumerate_tree(f_ex, {3}, 3, cfg.node_budget);
    auto paths = tree.all_paths();
    bool found_sll = false, nspl_ok = false, g2_start = false;
    for (const auto& p : paths) {
      if (p.polys.size() >= 2 && p.polys[1] == g2 && !p.digits.empty() &&
          p.digits[0] == Digit::S)
        g2_start = true;
      if (p.polys.size() == 4 && p.polys[1] == g1 &&
          p.digits ==
              std::vector<Digit>{Digit::S, Digit::L, Digit::L}) {
        found_sll = true;
        auto n = n_spl(p);
        nspl_ok = n.has_value() && *n == 1;
      }
    }
    std::ostringstream d;
    d << paths.size() << " maximal chains, " << tree.node_count << " nodes";
    add_check(rep, "splitting/example-digit-path",
              "the depth-3 tree of x^3 + 3x^2 + 2x + 1 over {3} contains the "
              "chain through x^3 - x + 1 with digits S, L, L",
              found_sll && nspl_ok && g2_start, d.str());
  }
  {
    std::vector<char> ok(3, 0);
    parallel_for(3, [&](std::size_t k) {
      ok[k] = is_irreducible(compose_power(g1, ipow(3, static_cast<unsigned>(k) + 1)))
                  ? 1
                  : 0;
    });
    bool all = count_bad(ok) == 0;
    add_check(rep, "splitting/example-towers",
              "g = x^3 - x + 1: g(x^(3^k)) is irreducible for k = 1, 2, 3", all,
              "degrees 9, 27, 81");
  }
  {
    std::vector<IntPoly> roots;
    for (long a = 2; a <= 12; ++a) {
      roots.push_back(linear_minus(a));
      roots.push_back(linear_minus(-a));
    }
    roots.push_back(f_ex);
    std::vector<char> ok(roots.size(), 1);
    parallel_for(roots.size(), [&](std::size_t i) {
      SplitTree t = enumerate_tree(roots[i], {3}, 3, cfg.node_budget);
      ok[i] = constant_exponent_shape_check(t, 3) ? 1 : 0;
    });
    std::size_t bad = count_bad(ok);
    std::ostringstream d;
    d << roots.size() << " depth-3 trees over {3}";
    add_check(rep, "splitting/no-S-after-L",
              "constant exponent r: no chain has an S digit after an L digit",
              bad == 0, d.str());
  }
  {
    auto le2 = lambda_empirical(linear_minus(2), {3}, 4);
    auto le8 = lambda_empirical(linear_minus(8), {3}, 4);
    auto le512 = lambda_empirical(linear_minus(512), {3}, 4);
    bool ok = le2.lower_bound == 0 && le2.saturated && le8.lower_bound == 1 &&
              le8.saturated && le512.lower_bound == 2 && le512.saturated;
    std::ostringstream d;
    d << "got " << le2.lower_bound << ", " << le8.lower_bound << ", "
      << le512.lower_bound;
    add_check(rep, "splitting/lambda-traces",
              "leading-S counts over {3} at depth 4: x - 2 -> 0, x - 8 -> 1, "
              "x - 512 -> 2, all saturated",
              ok, d.str());
  }
  {
    auto p1 = realize_divisor_path(linear_minus(8), linear_minus(2), {3});
    bool ok1 = p1.polys == std::vector<IntPoly>{linear_minus(8), linear_minus(2)} &&
               p1.digits == std::vector<Digit>{Digit::S};
    auto p2 = realize_divisor_path(linear_minus(512), linear_minus(2), {3, 3});
    bool ok2 =
        p2.polys == std::vector<IntPoly>{linear_minus(512), linear_minus(8),
                                         linear_minus(2)} &&
        p2.digits == std::vector<Digit>{Digit::S, Digit::S};
    add_check(rep, "splitting/realize-path",
              "x - 2 reaches x - 8 via x^3 and x - 512 via x^3, x^3, with an S "
              "digit at every stage",
              ok1 && ok2, "two realized chains");
  }
  {
    auto s1 = composed_divisor_set(linear_minus(8), {3}, 1, 1);
    std::vector<IntPoly> e1{linear_minus(8), linear_minus(2), IntPoly{4, 2, 1}};
    std::sort(e1.begin(), e1.end(), poly_less);
    std::sort(s1.begin(), s1.end(), poly_less);
    auto s2 = composed_divisor_set(linear_minus(2), {3}, 1, 2);
    std::vector<IntPoly> e2{linear_minus(2), IntPoly{-2, 0, 0, 1},
                            IntPoly(std::vector<mpz_class>{-2, 0, 0, 0, 0, 0, 0,
                                                           0, 0, 1})};
    std::sort(e2.begin(), e2.end(), poly_less);
    std::sort(s2.begin(), s2.end(), poly_less);
    bool ok = s1 == e1 && s2 == e2;
    add_check(rep, "splitting/composed-divisor-set",
              "divisors over 3-power exponents: x - 8 with Omega <= 1 gives "
              "{x - 8, x - 2, x^2 + 2x + 4}; x - 2 with Omega <= 2 gives "
              "{x - 2, x^3 - 2, x^9 - 2}",
              ok, ok ? "both sets match" : "set mismatch");
  }
}

// ---------------------------------------------------------------------------
// bounds

void suite_bounds(Report& rep, const VerifyConfig& cfg) {
  {
    std::vector<long> as;
    for (long a = 2; a <= 64; ++a) {
      as.push_back(a);
      as.push_back(-a);
    }
    const std::vector<std::set<unsigned long>> Ps{{3}, {5}, {3, 5}};
    std::vector<char> ok(as.size() * Ps.size(), 1);
    std::vector<char> sat(ok.size(), 0);
    parallel_for(ok.size(), [&](std::size_t i) {
      long a = as[i / Ps.size()];
      const auto& P = Ps[i % Ps.size()];
      auto le = lambda_empirical(linear_minus(a), P, cfg.depth);
      mpz_class ls = lambda_star_linear(a, P);
      ok[i] = mpz_class(le.lower_bound) <= ls ? 1 : 0;
      sat[i] = le.saturated ? 1 : 0;
    });
    std::size_t bad = count_bad(ok);
    std::size_t nsat = 0;
    for (char c : sat) nsat += c != 0;
    std::ostringstream d;
    d << ok.size() << " pairs (2 <= |a| <= 64, P in {{3}, {5}, {3, 5}}), depth "
      << cfg.depth << ", " << nsat << " saturated";
    add_check(rep, "bounds/lambda-le-lambda-star",
              "the empirical leading-S count of x - a never exceeds "
              "Lambda*(a, P)",
              bad == 0, d.str());
  }
  {
    bool ok = lambda_star_linear(2, {3}) == 1 && lambda_star_linear(8, {3}) == 3 &&
              lambda_star_linear(3, {3}) == 2 && lambda_star_linear(6, {5}) == 2;
    add_check(rep, "bounds/lambda-star-values",
              "Lambda*(2, {3}) = 1, Lambda*(8, {3}) = 3, Lambda*(3, {3}) = 2, "
              "Lambda*(6, {5}) = 2",
              ok, "four closed-form values");
  }
  {
    const std::vector<unsigned long> qs{2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47};
    std::vector<std::pair<unsigned long, unsigned long>> jobs;
    for (unsigned long q : qs)
      for (unsigned long N = 3; N < 120; ++N)
        if (is_squarefree(N)) jobs.emplace_back(q, N);
    std::vector<char> ok(jobs.size(), 1);
    parallel_for(jobs.size(), [&](std::size_t i) {
      auto [q, N] = jobs[i];
      auto s = prime_splitting_in_cyclotomic(q, N);
      bool good = s.e * s.f_res * s.g == totient(N);
      good = good && ((N % q == 0) == (s.e > 1) || q == 2);
      // q^f = 1 modulo the prime-to-q part of N
      unsigned long M = N % q == 0 ? N / q : N;
      if (M >= 3) {
        unsigned long pw = 1;
        for (unsigned long k = 0; k < s.f_res; ++k) pw = pw * (q % M) % M;
        good = good && pw == 1;
      }
      ok[i] = good ? 1 : 0;
    });
    std::size_t bad = count_bad(ok);
    std::ostringstream d;
    d << jobs.size() << " (q, N) pairs, q < 50 prime, N < 120 squarefree";
    add_check(rep, "bounds/field-splitting-identity",
              "in Q(zeta_N): e * f * g = phi(N), e > 1 only at ramified q, and "
              "q^f = 1 mod N/q^v",
              bad == 0, d.str());
  }
  {
    const std::vector<mpz_class> avals{2, 8, 512};
    std::array<std::array<std::size_t, 4>, 3> counts{};
    parallel_for(12, [&](std::size_t i) {
      std::size_t ai = i / 4;
      unsigned long lam = static_cast<unsigned long>(i % 4);
      counts[ai][lam] =
          count_irreducible_divisors(linear_minus(avals[ai]), 3, lam);
    });
    bool ok = true;
    for (std::size_t ai = 0; ai < avals.size(); ++ai) {
      mpz_class cap = zpow(3, lambda_star_linear(avals[ai], {3}).get_ui());
      for (unsigned long lam = 0; lam <= 3; ++lam) {
        mpz_class c(static_cast<unsigned long>(counts[ai][lam]));
        ok = ok && c <= divisor_count_bound(linear_minus(avals[ai]), {3}, lam);
        ok = ok && c <= cap;
        if (lam > 0) ok = ok && counts[ai][lam - 1] <= counts[ai][lam];
      }
    }
    ok = ok && counts[0][1] == 1 && counts[1][1] == 2 && counts[2][1] == 2;
    ok = ok && counts[0][3] == 1 && counts[1][3] == 2 && counts[2][3] == 3;
    std::ostringstream d;
    for (std::size_t ai = 0; ai < avals.size(); ++ai) {
      d << (ai ? "; " : "") << "a = " << avals[ai] << ": ";
      for (unsigned long lam = 0; lam <= 3; ++lam)
        d << (lam ? ", " : "") << counts[ai][lam];
    }
    add_check(rep, "bounds/divisor-count-vs-bound",
              "#irreducible divisors of (x - a)(x^(3^lambda)) is nondecreasing "
              "in lambda and bounded by 3^lambda and 3^Lambda*(a, {3})",
              ok, d.str());
  }
  {
    IntPoly f{-3, 2};  // 2x - 3
    bool ok = divisor_count_bound(f, {3}, 0) == 3 &&
              divisor_count_bound(f, {3}, 2) == 27 &&
              divisor_count_bound(linear_minus(2), {3}, 2) == 9 &&
              divisor_count_bound(f, {3, 5}, 1) == 3375;
    add_check(rep, "bounds/bound-base-example",
              "bound(2x - 3, {3}, 0) = 3, bound(2x - 3, {3}, 2) = 27, "
              "bound(x - 2, {3}, 2) = 9, bound(2x - 3, {3, 5}, 1) = 15^3",
              ok, "exact power comparison for the height exponent");
  }
  {
    const std::vector<long> bases{2, 3, 5, 7, 10};
    const std::vector<std::set<unsigned long>> Ps{{3}, {5}, {3, 5}};
    std::vector<char> ok(bases.size() * 4 * Ps.size(), 1);
    parallel_for(ok.size(), [&](std::size_t i) {
      long a = bases[i / (4 * Ps.size())];
      unsigned long k = i / Ps.size() % 4 + 1;
      const auto& P = Ps[i % Ps.size()];
      ok[i] = lambda_star_linear(zpow(a, k), P) ==
                      mpz_class(k) * lambda_star_linear(a, P)
                  ? 1
                  : 0;
    });
    std::size_t bad = count_bad(ok);
    std::ostringstream d;
    d << ok.size() << " triples, a in {2, 3, 5, 7, 10}, k <= 4";
    add_check(rep, "bounds/power-scaling",
              "Lambda*(a^k, P) = k * Lambda*(a, P)", bad == 0, d.str());
  }
}

// ---------------------------------------------------------------------------
// monoid

void suite_monoid(Report& rep, const VerifyConfig&) {
  struct QCase {
    unsigned long n, d;
  };
  const std::vector<QCase> qs{{3, 4}, {3, 5}, {5, 9}, {2, 7}};
  {
    std::vector<unsigned long> mismatch(qs.size(), 0);
    std::vector<unsigned long> members(qs.size(), 0);
    std::vector<unsigned long> bad_rt(qs.size(), 0);
    parallel_for(qs.size(), [&](std::size_t ci) {
      unsigned long n = qs[ci].n, d = qs[ci].d;
      PuiseuxParam p(n, d);
      unsigned long d2 = d * d, d4 = d2 * d2, d6 = d4 * d2;
      std::vector<unsigned long> steps;
      for (unsigned e = 0; e <= 6; ++e)
        steps.push_back(ipow(n, e) * ipow(d, 6 - e));
      const unsigned long cap = 4 * d6;
      std::vector<char> reach(cap + 1, 0);
      reach[0] = 1;
      for (unsigned long s : steps)
        for (unsigned long v = s; v <= cap; ++v)
          if (reach[v - s]) reach[v] = 1;
      for (unsigned long u = 0; u <= 4 * d4; ++u) {
        mpq_class x(u, d4);
        x.canonicalize();
        bool mem = is_member(x, p);
        if (mem != (reach[u * d2] != 0)) ++mismatch[ci];
        if (!mem) continue;
        ++members[ci];
        auto cf = canonical_form(x, p);
        bool good = cf.has_value() && cf->value(p) == x && cf->a0 >= 0;
        if (good && !cf->digits.empty() && cf->digits.back() == 0) good = false;
        if (good)
          for (unsigned long dig : cf->digits)
            if (dig >= d) good = false;
        if (!good) ++bad_rt[ci];
      }
    });
    unsigned long mis = 0, mem = 0, rtb = 0;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      mis += mismatch[i];
      mem += members[i];
      rtb += bad_rt[i];
    }
    std::ostringstream d;
    d << "q in {3/4, 3/5, 5/9, 2/7}, grid x = u/d^4 <= 4: " << mem
      << " members, " << mis << " oracle disagreements";
    add_check(rep, "monoid/membership-oracle",
              "x in M_q iff x*d^6 is an N-combination of n^i * d^(6-i), "
              "i <= 6, on the grid x = u/d^4 <= 4",
              mis == 0, d.str());
    std::ostringstream d2s;
    d2s << mem << " members re-evaluated, " << rtb << " defects";
    add_check(rep, "monoid/canonical-roundtrip",
              "the canonical digit form sums back to x with digits in "
              "[0, d-1] and nonzero top digit",
              rtb == 0, d2s.str());
  }
  {
    auto r34 = accp_status(3, PuiseuxParam(3, 4), 10);
    bool ok = r34.status == AccpStatus::fails &&
              r34.witness_chain ==
                  std::vector<mpq_class>{3, mpq_class(9, 4), mpq_class(27, 16)};
    auto ranti = accp_status(1, PuiseuxParam(1, 2), 5);
    ok = ok && ranti.status == AccpStatus::fails &&
         ranti.witness_chain ==
             std::vector<mpq_class>{1, mpq_class(1, 2), mpq_class(1, 4)};
    add_check(rep, "monoid/accp-witness",
              "q = 3/4: 3 > 9/4 > 27/16 is a strictly descending divisor "
              "chain; q = 1/2: 1 > 1/2 > 1/4",
              ok, "witness chains compared element-wise");
  }
  {
    PuiseuxParam nat(2, 1), anti(1, 2), a34(3, 4), a59(5, 9), big(7, 2);
    bool ok = nat.cls == MonoidClass::natural &&
              atoms_of(nat) == AtomSet::single_unit &&
              anti.cls == MonoidClass::antimatter &&
              atoms_of(anti) == AtomSet::antimatter &&
              a34.cls == MonoidClass::atomic_non_accp &&
              atoms_of(a34) == AtomSet::powers_of_q &&
              a59.cls == MonoidClass::atomic_non_accp &&
              big.cls == MonoidClass::at_least_one &&
              atoms_of(big) == AtomSet::powers_of_q;
    ok = ok && accp_status(mpq_class(9, 16), a34, 5).status == AccpStatus::satisfies;
    ok = ok && accp_status(0, a34, 5).status == AccpStatus::satisfies;
    ok = ok && accp_status(7, big, 3).status == AccpStatus::satisfies;
    add_check(rep, "monoid/atom-classes",
              "q integer: unit atom only; 1/d: antimatter; otherwise the "
              "powers of q are atoms, and powers of q / 0 / q >= 1 all "
              "satisfy the chain condition",
              ok, "five parameter classes");
  }
  {
    PuiseuxParam p(3, 4);
    using Q = mpq_class;
    bool ok = divides(Q(3, 4), Q(3, 2), p) && divides(Q(3, 2), Q(9, 4), p) &&
              divides(Q(3, 4), Q(9, 4), p) && divides(1, 2, p) &&
              !divides(Q(3, 4), 1, p) && divides(0, Q(21, 16), p) &&
              divides(Q(21, 16), Q(21, 16), p);
    bool threw = false;
    try {
      divides(Q(1, 4), 1, p);
    } catch (const error& e) {
      threw = e.kind() == errc::not_member_input;
    }
    add_check(rep, "monoid/divisibility",
              "a | b iff b - a is a member; reflexive, transitive on the "
              "sample, 1/4 rejected as a non-member",
              ok && threw, "seven relations and one rejection");
  }
  {
    PuiseuxParam a34(3, 4), nat(2, 1);
    auto reps = atomic_factorizations(3, a34, 16);
    bool ok = reps.size() == 16;
    ExponentMultiset flat{{0, 3}};
    ExponentMultiset carried{{1, 4}};
    bool has_flat = false, has_carried = false;
    for (const auto& m : reps) {
      has_flat = has_flat || m == flat;
      has_carried = has_carried || m == carried;
      mpq_class sum = 0;
      for (const auto& [e, c] : m) sum += mpq_class(c) * a34.q_pow(e);
      ok = ok && sum == 3;
    }
    ok = ok && has_flat && has_carried;
    auto nat_reps = atomic_factorizations(5, nat, 16);
    ok = ok && nat_reps.size() == 1 && nat_reps[0] == ExponentMultiset{{0, 5}};
    bool threw = false;
    try {
      atomic_factorizations(1, PuiseuxParam(1, 2), 4);
    } catch (const error& e) {
      threw = e.kind() == errc::antimatter_monoid;
    }
    std::ostringstream d;
    d << reps.size() << " representations of 3 in M_{3/4}, all sum to 3";
    add_check(rep, "monoid/factorization-sums",
              "every enumerated atomic representation of x sums to x; the "
              "carry move 3*q^e = 4*q^(e+1) links them",
              ok && threw, d.str());
  }
}

// ---------------------------------------------------------------------------
// stabilization

MonAlgPoly build_poly(const PuiseuxParam& ctx,
                      std::vector<std::pair<mpq_class, mpz_class>> terms) {
  return MonAlgPoly(ctx, terms);
}

void suite_stabilization(Report& rep, const VerifyConfig&) {
  PuiseuxParam third(1, 3);  // exponent lattice refined by powers of 3
  MonAlgPoly xm8 = build_poly(third, {{1, 1}, {0, -8}});
  MonAlgPoly xm2 = build_poly(third, {{1, 1}, {0, -2}});
  MonAlgPoly sq = build_poly(third, {{2, 1}, {0, -1}});  // x^2 - 1
  {
    auto r8 = stable_factorization(xm8, 4);
    MonAlgPoly cube = build_poly(third, {{mpq_class(1, 3), 1}, {0, -2}});
    MonAlgPoly cofac = build_poly(
        third, {{mpq_class(2, 3), 1}, {mpq_class(1, 3), 2}, {0, 4}});
    bool ok = r8.gamma.has_value() && *r8.gamma == 1 && !r8.not_stabilized &&
              r8.sign == 1 && r8.content == 1;
    for (const auto& lv : r8.levels) {
      if (lv.level == 0) continue;
      bool has_cube = false, has_cofac = false;
      for (const auto& en : lv.entries) {
        has_cube = has_cube || (en.factor == cube && en.multiplicity == 1);
        has_cofac = has_cofac || (en.factor == cofac && en.multiplicity == 1);
      }
      ok = ok && lv.entries.size() == 2 && has_cube && has_cofac;
    }
    std::ostringstream d;
    d << "gamma = " << (r8.gamma ? std::to_string(*r8.gamma) : "none")
      << ", levels 0..4";
    add_check(rep, "stabilization/x-minus-8",
              "x - 8 stabilizes at level 1 as "
              "(x^(1/3) - 2)(x^(2/3) + 2x^(1/3) + 4)",
              ok, d.str());
  }
  {
    auto r2 = stable_factorization(xm2, 4);
    bool ok = r2.gamma.has_value() && *r2.gamma == 0 && !r2.not_stabilized;
    for (const auto& lv : r2.levels)
      ok = ok && lv.entries.size() == 1 && lv.entries[0].multiplicity == 1 &&
           lv.entries[0].factor == xm2;
    add_check(rep, "stabilization/x-minus-2",
              "x - 2 is already stable at level 0: x^(1/3^k) - 2 stays "
              "irreducible",
              ok, "five levels, one factor each");
  }
  {
    auto rs = stable_factorization(sq, 3);
    bool ok = !rs.gamma.has_value() && rs.not_stabilized &&
              rs.core_gamma.has_value() && *rs.core_gamma == 0;
    for (const auto& lv : rs.levels) {
      auto divs = divisors_of(2 * ipow(3, static_cast<unsigned>(lv.level)));
      ok = ok && lv.entries.size() == divs.size();
      std::set<unsigned long> seen;
      for (const auto& en : lv.entries) {
        ok = ok && en.cyclotomic.has_value();
        if (en.cyclotomic) seen.insert(*en.cyclotomic);
      }
      ok = ok &&
           seen == std::set<unsigned long>(divs.begin(), divs.end());
    }
    add_check(rep, "stabilization/cyclotomic-growth",
              "x^2 - 1 never stabilizes: level lambda splits into Phi_d for "
              "every d | 2*3^lambda; ignoring cyclotomic factors it is stable "
              "at level 0",
              ok, "levels 0..3 checked against divisor lists");
  }
  {
    bool ok = true;
    const std::vector<const MonAlgPoly*> inputs{&xm8, &xm2, &sq};
    for (const MonAlgPoly* f : inputs)
      for (unsigned long lam = 0; lam <= 3; ++lam) {
        auto fac = factor_at_level(*f, lam);
        ok = ok && fac.reconstruct(third) == *f;
      }
    add_check(rep, "stabilization/reconstruction",
              "sign * content * prod factors = f at every level",
              ok, "three inputs, levels 0..3");
  }
  {
    bool ok = true;
    const std::vector<const MonAlgPoly*> inputs{&xm8, &sq};
    for (const MonAlgPoly* f : inputs) {
      auto rep_f = stable_factorization(*f, 3);
      for (std::size_t li = 0; li + 1 < rep_f.levels.size(); ++li) {
        std::vector<MonAlgPoly> next;
        for (const auto& en : rep_f.levels[li + 1].entries)
          for (unsigned m = 0; m < en.multiplicity; ++m)
            next.push_back(en.factor);
        for (const auto& en : rep_f.levels[li].entries) {
          bool refined = false;
          for (std::size_t mask = 1; mask < (std::size_t(1) << next.size());
               ++mask) {
            MonAlgPoly prod = build_poly(third, {{0, 1}});
            for (std::size_t b = 0; b < next.size(); ++b)
              if (mask >> b & 1) prod = prod * next[b];
            if (prod == en.factor) {
              refined = true;
              break;
            }
          }
          ok = ok && refined;
        }
      }
    }
    add_check(rep, "stabilization/level-refinement",
              "every level-lambda factor is a product of level-(lambda+1) "
              "factors",
              ok, "x - 8 and x^2 - 1, levels 0..3");
  }
  {
    PuiseuxParam a34(3, 4);
    MonAlgPoly f3 = build_poly(a34, {{3, 1}});
    MonAlgPoly f5 = build_poly(a34, {{5, 1}});
    bool ok = is_accp_supported(xm8, 6) == AccpSupport::yes &&
              is_accp_supported(f3, 6) == AccpSupport::no &&
              is_accp_supported(f5, 6) == AccpSupport::unknown;
    add_check(rep, "stabilization/accp-support",
              "support exponents decide the chain condition: x - 8 yes, x^3 "
              "over q = 3/4 no, x^5 over q = 3/4 undecided at horizon 6",
              ok, "three supports classified");
  }
}

}  // namespace

std::vector<IntPoly> irreducible_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<IntPoly> out;
  std::set<std::vector<mpz_class>> seen;
  while (out.size() < count) {
    long deg = draw(rng, 1, 5);
    std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = draw(rng, -20, 20);
    if (c.back() == 0) continue;
    IntPoly f(std::move(c));
    if (f.lc() < 0) f = -f;
    if (content_primitive(f).content != 1) continue;
    if (!is_irreducible(f)) continue;
    if (!seen.insert(f.coeffs()).second) continue;
    out.push_back(std::move(f));
  }
  return out;
}

Report verify_suite(const std::string& selection, const VerifyConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = selection;
  rep.seed = config.seed;
  bool all = selection == "all";
  bool hit = false;
  if (all || selection == "cyclotomic") hit = true, suite_cyclotomic(rep, config);
  if (all || selection == "composed") hit = true, suite_composed(rep, config);
  if (all || selection == "splitting") hit = true, suite_splitting(rep, config);
  if (all || selection == "bounds") hit = true, suite_bounds(rep, config);
  if (all || selection == "monoid") hit = true, suite_monoid(rep, config);
  if (all || selection == "stabilization")
    hit = true, suite_stabilization(rep, config);
  if (!hit) throw std::invalid_argument("unknown suite: " + selection);
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace monalg
