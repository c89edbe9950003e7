#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "monalg/factor.hpp"
#include "monalg/intpoly.hpp"

namespace monalg {

enum class Digit { L, S };

// One chain f_0, f_1, ..., f_k where each f_i is an irreducible divisor of
// f_{i-1}(x^{e_i}); digits record whether the step stayed irreducible (L) or
// split (S).
struct SplitPath {
  std::vector<IntPoly> polys;
  std::vector<unsigned long> exponents;  // e_1 .. e_k
  std::vector<Digit> digits;
};

struct SplitNode {
  IntPoly poly;
  // children grouped by the exponent that produced them
  std::vector<std::pair<unsigned long, std::vector<std::unique_ptr<SplitNode>>>>
      children;
  std::vector<Digit> digit_per_exponent;  // digit of each exponent group
};

struct SplitTree {
  IntPoly root;
  std::set<unsigned long> exponent_set;
  unsigned depth = 0;
  std::unique_ptr<SplitNode> root_node;
  std::size_t node_count = 0;

  std::vector<SplitPath> all_paths() const;  // maximal root-to-leaf paths
};

inline constexpr std::size_t kDefaultNodeBudget = 100000;

// Distinct irreducible factors of f(x^e), each tagged L when f(x^e) itself is
// irreducible, S otherwise. f must be irreducible, primitive, positive lc.
std::vector<std::pair<IntPoly, Digit>> split_children(const IntPoly& f,
                                                      unsigned long e);

// Breadth-first tree of all splitting chains of length <= depth with exponents
// from T. Throws ReducibleInput and DepthLimit (node budget).
SplitTree enumerate_tree(const IntPoly& f, const std::set<unsigned long>& T,
                         unsigned depth,
                         std::size_t node_budget = kDefaultNodeBudget);

// Leading-S count once an L has been seen; empty while the path is all S.
std::optional<unsigned> n_spl(const SplitPath& path);

struct LambdaEmpirical {
  unsigned lower_bound = 0;
  // True when every chain has produced an L by the depth limit, so the bound
  // is exact for this exponent set at this depth.
  bool saturated = false;
};

// Max determined n_spl over all chains with exponents in T, explored to depth.
// Only all-S prefixes are expanded: once an L appears the count is fixed, so
// chains past their first L cannot change the supremum.
LambdaEmpirical lambda_empirical(const IntPoly& f, const std::set<unsigned long>& T,
                                 unsigned depth);

// Chain from f to +-b with the given exponent sequence; b must divide
// f(x^{prod sigma}). Throws NotADivisor.
SplitPath realize_divisor_path(const IntPoly& f, const IntPoly& b,
                               const std::vector<unsigned long>& sigma);

// Irreducible divisors of f(x^r) over all r with prime support in P,
// omega(r) <= max_omega, big_omega(r) <= max_Omega (r = 1 included).
std::vector<IntPoly> composed_divisor_set(const IntPoly& f,
                                          const std::set<unsigned long>& P,
                                          unsigned max_omega, unsigned max_Omega);

// True iff no S digit follows an L digit on any path. Tree must have been
// built with T = {r}, r odd >= 3; throws WrongExponentSet otherwise.
bool constant_exponent_shape_check(const SplitTree& tree, unsigned long r);

}  // namespace monalg
