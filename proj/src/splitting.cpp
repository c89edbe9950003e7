#include "monalg/splitting.hpp"

#include <algorithm>
#include <atomic>

#include "monalg/parallel.hpp"

namespace monalg {

namespace {

void require_irreducible(const IntPoly& f) {
  if (f.is_zero() || f.degree() < 1 || !is_irreducible(f) || f.lc() < 0 ||
      content_primitive(f).content != 1)
    throw error(errc::reducible_input,
                "expected an irreducible primitive polynomial with positive lc");
}

void collect_paths(const SplitNode& node, SplitPath& prefix,
                   std::vector<SplitPath>& out) {
  bool leaf = true;
  for (std::size_t gi = 0; gi < node.children.size(); ++gi) {
    const auto& [e, kids] = node.children[gi];
    Digit digit = node.digit_per_exponent[gi];
    for (const auto& kid : kids) {
      leaf = false;
      prefix.polys.push_back(kid->poly);
      prefix.exponents.push_back(e);
      prefix.digits.push_back(digit);
      collect_paths(*kid, prefix, out);
      prefix.polys.pop_back();
      prefix.exponents.pop_back();
      prefix.digits.pop_back();
    }
  }
  if (leaf) out.push_back(prefix);
}

}  // namespace

std::vector<SplitPath> SplitTree::all_paths() const {
  std::vector<SplitPath> out;
  if (!root_node) return out;
  SplitPath prefix;
  prefix.polys.push_back(root_node->poly);
  collect_paths(*root_node, prefix, out);
  return out;
}

std::vector<std::pair<IntPoly, Digit>> split_children(const IntPoly& f,
                                                      unsigned long e) {
  if (e < 2) throw error(errc::wrong_exponent_set, "exponent must be >= 2");
  require_irreducible(f);
  IntPoly composed = compose_power(f, e);
  Factorization fac = factor_over_integers(composed);
  std::vector<std::pair<IntPoly, Digit>> out;
  bool lifted = fac.factors.size() == 1 && fac.factors[0].second == 1;
  for (const auto& [g, mult] : fac.factors) {
    (void)mult;  // x -> x^e collapses to x with multiplicity e; set semantics
    out.emplace_back(g, lifted ? Digit::L : Digit::S);
  }
  return out;
}

SplitTree enumerate_tree(const IntPoly& f, const std::set<unsigned long>& T,
                         unsigned depth, std::size_t node_budget) {
  require_irreducible(f);
  for (unsigned long e : T)
    if (e < 2) throw error(errc::wrong_exponent_set, "exponents must be >= 2");

  SplitTree tree;
  tree.root = f;
  tree.exponent_set = T;
  tree.depth = depth;
  tree.root_node = std::make_unique<SplitNode>();
  tree.root_node->poly = f;
  std::atomic<std::size_t> nodes{1};

  std::vector<SplitNode*> frontier{tree.root_node.get()};
  std::vector<unsigned long> exps(T.begin(), T.end());
  for (unsigned level = 0; level < depth && !frontier.empty(); ++level) {
    // Expand one level at a time; nodes within a level are independent.
    std::vector<std::vector<std::pair<unsigned long, std::vector<std::pair<IntPoly, Digit>>>>>
        expansions(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t i) {
      auto& groups = expansions[i];
      for (unsigned long e : exps) {
        auto kids = split_children(frontier[i]->poly, e);
        nodes.fetch_add(kids.size(), std::memory_order_relaxed);
        groups.emplace_back(e, std::move(kids));
      }
    });
    if (nodes.load() > node_budget)
      throw error(errc::depth_limit, "node budget exceeded");
    std::vector<SplitNode*> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      SplitNode* parent = frontier[i];
      for (auto& [e, kids] : expansions[i]) {
        std::vector<std::unique_ptr<SplitNode>> made;
        Digit digit = Digit::L;
        for (auto& [poly, dig] : kids) {
          digit = dig;
          auto node = std::make_unique<SplitNode>();
          node->poly = poly;
          next.push_back(node.get());
          made.push_back(std::move(node));
        }
        parent->children.emplace_back(e, std::move(made));
        parent->digit_per_exponent.push_back(digit);
      }
    }
    frontier = std::move(next);
    tree.node_count = nodes.load();
  }
  tree.node_count = nodes.load();
  return tree;
}

std::optional<unsigned> n_spl(const SplitPath& path) {
  unsigned count = 0;
  for (Digit d : path.digits) {
    if (d == Digit::L) return count;
    ++count;
  }
  return std::nullopt;
}

LambdaEmpirical lambda_empirical(const IntPoly& f, const std::set<unsigned long>& T,
                                 unsigned depth) {
  require_irreducible(f);
  if (f.degree() == 1 && f.coeff(0) == 0)
    throw error(errc::excluded_polynomial, "x splits forever; its bound is known");

  LambdaEmpirical result;
  result.saturated = true;
  // Frontier of all-S prefixes. An L step fixes the chain's leading-S count,
  // so only reducible compositions spawn deeper work.
  std::vector<IntPoly> frontier{f};
  std::vector<IntPoly> next;
  for (unsigned level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::vector<IntPoly>> child_lists(frontier.size());
    std::vector<char> saw_l(frontier.size(), 0);
    parallel_for(frontier.size(), [&](std::size_t i) {
      for (unsigned long e : T) {
        auto kids = split_children(frontier[i], e);
        if (kids.size() == 1 && kids[0].second == Digit::L) {
          saw_l[i] = 1;
        } else {
          for (auto& [poly, dig] : kids) {
            (void)dig;
            child_lists[i].push_back(poly);
          }
        }
      }
    });
    next.clear();
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (saw_l[i])
        result.lower_bound = std::max(result.lower_bound, level);
      for (auto& c : child_lists[i]) next.push_back(c);
    }
    std::sort(next.begin(), next.end(),
              [](const IntPoly& a, const IntPoly& b) { return poly_less(a, b); });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = next;
  }
  if (!frontier.empty()) result.saturated = false;
  return result;
}

SplitPath realize_divisor_path(const IntPoly& f, const IntPoly& b,
                               const std::vector<unsigned long>& sigma) {
  require_irreducible(f);
  IntPoly target = b.lc() < 0 ? -b : b;
  require_irreducible(target);
  unsigned long total = 1;
  for (unsigned long e : sigma) {
    if (e < 2) throw error(errc::wrong_exponent_set, "exponents must be >= 2");
    total *= e;
  }
  if (!divides_exactly(target, compose_power(f, total)))
    throw error(errc::not_a_divisor, "target does not divide the composition");

  SplitPath path;
  path.polys.push_back(f);
  IntPoly current = f;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    unsigned long suffix = 1;
    for (std::size_t j = i + 1; j < sigma.size(); ++j) suffix *= sigma[j];
    auto kids = split_children(current, sigma[i]);
    const IntPoly* chosen = nullptr;
    Digit digit = Digit::S;
    for (const auto& [cand, dig] : kids) {
      if (divides_exactly(target, compose_power(cand, suffix))) {
        chosen = &cand;
        digit = dig;
        break;
      }
    }
    if (!chosen)
      throw error(errc::not_a_divisor, "no stage divisor matches the target");
    path.polys.push_back(*chosen);
    path.exponents.push_back(sigma[i]);
    path.digits.push_back(digit);
    current = *chosen;
  }
  return path;
}

std::vector<IntPoly> composed_divisor_set(const IntPoly& f,
                                          const std::set<unsigned long>& P,
                                          unsigned max_omega, unsigned max_Omega) {
  require_irreducible(f);
  // All r = products over P with omega(r) <= max_omega, Omega(r) <= max_Omega.
  std::vector<unsigned long> primes(P.begin(), P.end());
  std::vector<unsigned long> todo;
  {
    // Depth-first over prime choices; small sets only.
    struct Item {
      unsigned long r;
      std::size_t next_prime;
      unsigned used_omega, used_Omega;
    };
    std::vector<Item> work{{1, 0, 0, 0}};
    while (!work.empty()) {
      Item it = work.back();
      work.pop_back();
      todo.push_back(it.r);
      for (std::size_t pi = it.next_prime; pi < primes.size(); ++pi) {
        if (it.used_omega + 1 > max_omega) break;
        unsigned long r = it.r;
        unsigned extra = 0;
        while (it.used_Omega + extra + 1 <= max_Omega) {
          r *= primes[pi];
          ++extra;
          work.push_back({r, pi + 1, it.used_omega + 1, it.used_Omega + extra});
        }
      }
    }
  }
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());

  std::vector<IntPoly> out;
  for (unsigned long r : todo) {
    if (r == 1) {
      out.push_back(f);
      continue;
    }
    Factorization fac = factor_over_integers(compose_power(f, r));
    for (const auto& [g, mult] : fac.factors) {
      (void)mult;
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntPoly& a, const IntPoly& b) { return poly_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool constant_exponent_shape_check(const SplitTree& tree, unsigned long r) {
  if (tree.exponent_set.size() != 1 || *tree.exponent_set.begin() != r ||
      r < 3 || r % 2 == 0)
    throw error(errc::wrong_exponent_set,
                "shape check needs a tree built with T = {r}, r odd >= 3");
  for (const SplitPath& path : tree.all_paths()) {
    bool seen_l = false;
    for (Digit d : path.digits) {
      if (d == Digit::L) seen_l = true;
      else if (seen_l)
        return false;
    }
  }
  return true;
}

}  // namespace monalg
