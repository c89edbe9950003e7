#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monalg/intpoly.hpp"
#include "monalg/report.hpp"

namespace monalg {

struct VerifyConfig {
  std::uint64_t seed = 1;
  unsigned depth = 4;                 // splitting sweep depth
  std::size_t node_budget = 100000;   // per enumerated tree
};

// Deterministic corpus of distinct primitive irreducibles, positive lc,
// 1 <= deg <= 5, |coeff| <= 20.
std::vector<IntPoly> irreducible_corpus(std::uint64_t seed, std::size_t count);

// Runs one of the check suites: "all", "cyclotomic", "composed", "splitting",
// "bounds", "monoid", "stabilization". Throws std::invalid_argument for
// anything else. Every check in the resulting report is deterministic for a
// fixed config.
Report verify_suite(const std::string& selection, const VerifyConfig& config);

}  // namespace monalg
