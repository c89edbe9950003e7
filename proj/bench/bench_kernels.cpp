// Compares the serial reference path against the OpenMP path for the
// kernels that fan out over independent subproblems. With a single hardware
// thread the ratio hovers around 1; the point is that both modes produce the
// same answers while the parallel path scales when threads are available.
//
// Factorization results are cached globally, so the factoring kernels take a
// salt and use fresh inputs of the same shape for every timed run; the fixed
// verify suites are warmed once and timed cache-hot in both modes.
#include <gmpxx.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "monalg/algebra.hpp"
#include "monalg/factor.hpp"
#include "monalg/intpoly.hpp"
#include "monalg/parallel.hpp"
#include "monalg/puiseux.hpp"
#include "monalg/splitting.hpp"
#include "monalg/verify.hpp"

using namespace monalg;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

IntPoly lin(long a) { return IntPoly(std::vector<mpz_class>{mpz_class(-a), 1}); }

void row(const std::string& name, const std::function<void(int)>& fn) {
  fn(0);  // warm the cyclotomic cache and one-time tables
  set_execution_mode(exec_mode::serial);
  double serial = time_ms([&] { fn(1); });
  set_execution_mode(exec_mode::parallel);
  double parallel = time_ms([&] { fn(2); });
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial << std::setw(10)
            << parallel << std::setw(9) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "\n";
}

}  // namespace

int main() {
  std::cout << std::left << std::setw(34) << "kernel" << std::right
            << std::setw(10) << "serial" << std::setw(10) << "openmp"
            << std::setw(9) << "ratio" << "\n";
  std::cout << std::string(63, '-') << "\n";

  row("splitting trees {3,5} depth 3", [](int salt) {
    for (long a : {2, 8, 12, 18, 32, 50, 64})
      enumerate_tree(lin(a + 200 * salt), {3, 5}, 3);
  });

  row("lambda sweep {3} depth 4", [](int salt) {
    for (long a = 2; a <= 40; ++a) lambda_empirical(lin(a + 100 * salt), {3}, 4);
  });

  row("stabilization levels 0..5", [](int salt) {
    PuiseuxParam third(1, 3);
    stable_factorization(MonAlgPoly::from_int_poly(lin(512 + salt), third), 5);
  });

  row("corpus compositions x r in {3,5}", [](int salt) {
    auto corpus = irreducible_corpus(static_cast<std::uint64_t>(salt + 1), 40);
    std::vector<std::size_t> counts(corpus.size() * 2, 0);
    parallel_for(counts.size(), [&](std::size_t i) {
      unsigned long r = i % 2 ? 5 : 3;
      counts[i] =
          factor_over_integers(compose_power(corpus[i / 2], r)).distinct_count();
    });
  });

  row("verify suite: cyclotomic", [](int) {
    VerifyConfig cfg;
    verify_suite("cyclotomic", cfg);
  });

  row("verify suite: monoid", [](int) {
    VerifyConfig cfg;
    verify_suite("monoid", cfg);
  });

  set_execution_mode(exec_mode::parallel);
  return 0;
}
