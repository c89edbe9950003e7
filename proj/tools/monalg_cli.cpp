#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monalg/algebra.hpp"
#include "monalg/errors.hpp"
#include "monalg/factor.hpp"
#include "monalg/intpoly.hpp"
#include "monalg/lambda_star.hpp"
#include "monalg/numtheory.hpp"
#include "monalg/parse.hpp"
#include "monalg/puiseux.hpp"
#include "monalg/report.hpp"
#include "monalg/splitting.hpp"
#include "monalg/verify.hpp"

namespace {

using monalg::Digit;
using monalg::IntPoly;
using monalg::MonAlgPoly;
using monalg::PuiseuxParam;
using nlohmann::ordered_json;

std::string exp_string(const mpq_class& e) {
  if (e.get_den() == 1) return e.get_num().get_str();
  return e.get_num().get_str() + "/" + e.get_den().get_str();
}

// Exact coefficient/exponent pairs, ascending exponents, zeros omitted.
ordered_json poly_json(const IntPoly& f) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeff(i) == 0) continue;
    arr.push_back({f.coeff(i).get_str(), std::to_string(i)});
  }
  return arr;
}

ordered_json poly_json(const MonAlgPoly& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : f.terms()) arr.push_back({c.get_str(), exp_string(e)});
  return arr;
}

std::string set_string(const std::set<unsigned long>& s) {
  std::string out = "{";
  for (unsigned long v : s) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(v);
  }
  return out + "}";
}

std::set<unsigned long> prime_set(const std::vector<unsigned long>& v) {
  if (v.empty())
    throw monalg::error(monalg::errc::wrong_exponent_set,
                        "--primes needs at least one odd prime");
  std::set<unsigned long> out;
  for (unsigned long p : v) {
    if (p < 3 || p % 2 == 0 || !monalg::is_prime(p))
      throw monalg::error(monalg::errc::wrong_exponent_set,
                          std::to_string(p) + " is not an odd prime");
    out.insert(p);
  }
  return out;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class v;
  try {
    v = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw monalg::error(monalg::errc::syntax_error, "not a rational: " + text);
  }
  if (v.get_den() == 0)
    throw monalg::error(monalg::errc::syntax_error, "zero denominator: " + text);
  v.canonicalize();
  return v;
}

PuiseuxParam context_from(const std::string& qtext) {
  mpq_class q = parse_rational(qtext);
  if (q <= 0)
    throw monalg::error(monalg::errc::exponent_domain_error, "q must be positive");
  if (!q.get_num().fits_ulong_p() || !q.get_den().fits_ulong_p())
    throw monalg::error(monalg::errc::exponent_domain_error, "q out of range");
  return PuiseuxParam(q.get_num().get_ui(), q.get_den().get_ui());
}

const char* class_name(monalg::MonoidClass c) {
  switch (c) {
    case monalg::MonoidClass::natural: return "natural";
    case monalg::MonoidClass::antimatter: return "antimatter";
    case monalg::MonoidClass::atomic_non_accp: return "atomic-non-accp";
    case monalg::MonoidClass::at_least_one: return "at-least-one-atom";
  }
  return "?";
}

const char* atoms_name(monalg::AtomSet a) {
  switch (a) {
    case monalg::AtomSet::single_unit: return "single-unit";
    case monalg::AtomSet::antimatter: return "none";
    case monalg::AtomSet::powers_of_q: return "powers-of-q";
  }
  return "?";
}

const char* accp_name(monalg::AccpStatus s) {
  switch (s) {
    case monalg::AccpStatus::satisfies: return "satisfies";
    case monalg::AccpStatus::fails: return "fails";
    case monalg::AccpStatus::unknown: return "unknown";
  }
  return "?";
}

int run_factor(const std::string& expr, bool json) {
  IntPoly f = monalg::parse_int_poly(expr);
  monalg::Factorization fac = monalg::factor_over_integers(f);
  if (json) {
    ordered_json out;
    out["command"] = "factor";
    out["input"] = poly_json(f);
    out["sign"] = fac.sign;
    out["content"] = fac.content.get_str();
    ordered_json fs = ordered_json::array();
    for (const auto& [g, m] : fac.factors)
      fs.push_back(ordered_json{{"poly", poly_json(g)}, {"multiplicity", m}});
    out["factors"] = fs;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::string rhs;
  if (fac.sign < 0) rhs += "-";
  bool need_star = false;
  if (fac.content != 1 || fac.factors.empty()) {
    rhs += fac.content.get_str();
    need_star = true;
  }
  for (const auto& [g, m] : fac.factors) {
    if (need_star) rhs += " * ";
    rhs += "(" + g.to_string() + ")";
    if (m > 1) rhs += "^" + std::to_string(m);
    need_star = true;
  }
  std::cout << f.to_string() << " = " << rhs << "\n";
  std::cout << "distinct irreducible factors: " << fac.factors.size() << "\n";
  return 0;
}

int run_split(const std::string& expr, const std::vector<unsigned long>& primes,
              unsigned depth, std::size_t budget, bool json) {
  IntPoly f = monalg::parse_int_poly(expr);
  auto T = prime_set(primes);
  monalg::SplitTree tree = monalg::enumerate_tree(f, T, depth, budget);
  auto paths = tree.all_paths();
  if (json) {
    ordered_json out;
    out["command"] = "split";
    out["root"] = poly_json(f);
    out["primes"] = T;
    out["depth"] = depth;
    out["nodes"] = tree.node_count;
    ordered_json chains = ordered_json::array();
    for (const auto& p : paths) {
      ordered_json ch;
      ordered_json digs = ordered_json::array();
      for (Digit d : p.digits) digs.push_back(d == Digit::S ? "S" : "L");
      ch["digits"] = digs;
      ch["exponents"] = p.exponents;
      ordered_json polys = ordered_json::array();
      for (const auto& g : p.polys) polys.push_back(poly_json(g));
      ch["polys"] = polys;
      auto n = monalg::n_spl(p);
      if (n)
        ch["n_spl"] = *n;
      else
        ch["n_spl"] = nullptr;
      chains.push_back(ch);
    }
    out["chains"] = chains;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "root: " << f.to_string() << "\n";
  std::cout << "exponents: " << set_string(T) << "  depth: " << depth
            << "  nodes: " << tree.node_count << "  chains: " << paths.size()
            << "\n";
  for (const auto& p : paths) {
    std::string digs;
    for (Digit d : p.digits) {
      if (!digs.empty()) digs += ' ';
      digs += d == Digit::S ? 'S' : 'L';
    }
    std::cout << "[" << digs << "] ";
    for (std::size_t i = 0; i < p.polys.size(); ++i)
      std::cout << (i ? " -> " : "") << p.polys[i].to_string();
    auto n = monalg::n_spl(p);
    std::cout << "  (n_spl: " << (n ? std::to_string(*n) : "undetermined")
              << ")\n";
  }
  return 0;
}

int run_lambda(const std::string& expr, const std::vector<unsigned long>& primes,
               unsigned depth, bool json) {
  IntPoly f = monalg::parse_int_poly(expr);
  auto T = prime_set(primes);
  auto le = monalg::lambda_empirical(f, T, depth);
  if (json) {
    ordered_json out;
    out["command"] = "lambda";
    out["poly"] = poly_json(f);
    out["primes"] = T;
    out["depth"] = depth;
    out["lower_bound"] = le.lower_bound;
    out["saturated"] = le.saturated;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "lambda_emp(" << f.to_string() << ", " << set_string(T)
            << ", depth " << depth << ") = " << le.lower_bound
            << (le.saturated ? " (saturated: exact)"
                             : " (lower bound: depth limit reached)")
            << "\n";
  return 0;
}

int run_lambda_star(const std::string& atext,
                    const std::vector<unsigned long>& primes, bool json) {
  mpz_class a;
  try {
    a = mpz_class(atext);
  } catch (const std::invalid_argument&) {
    throw monalg::error(monalg::errc::syntax_error, "not an integer: " + atext);
  }
  auto P = prime_set(primes);
  mpz_class v = monalg::lambda_star_linear(a, P);
  if (json) {
    ordered_json out;
    out["command"] = "lambda-star";
    out["a"] = a.get_str();
    out["primes"] = P;
    out["value"] = v.get_str();
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "Lambda*(" << a.get_str() << ", " << set_string(P) << ") = "
            << v.get_str() << "\n";
  return 0;
}

int run_monoid(const std::string& xtext, const std::string& qtext,
               unsigned horizon, bool json) {
  PuiseuxParam ctx = context_from(qtext);
  mpq_class x = parse_rational(xtext);
  bool member = monalg::is_member(x, ctx);
  auto canon = monalg::canonical_form(x, ctx);
  std::optional<monalg::AccpResult> accp;
  if (member) accp = monalg::accp_status(x, ctx, horizon);
  std::vector<monalg::ExponentMultiset> reps;
  if (member && ctx.cls != monalg::MonoidClass::antimatter)
    reps = monalg::atomic_factorizations(x, ctx, 8);
  if (json) {
    ordered_json out;
    out["command"] = "monoid";
    out["x"] = exp_string(x);
    out["q"] = exp_string(ctx.q());
    out["class"] = class_name(ctx.cls);
    out["atoms"] = atoms_name(monalg::atoms_of(ctx));
    out["member"] = member;
    if (canon) {
      ordered_json c;
      c["a0"] = canon->a0.get_str();
      ordered_json digs = ordered_json::array();
      for (unsigned long d : canon->digits) digs.push_back(std::to_string(d));
      c["digits"] = digs;
      out["canonical"] = c;
    } else {
      out["canonical"] = nullptr;
    }
    if (accp) {
      ordered_json a;
      a["status"] = accp_name(accp->status);
      ordered_json w = ordered_json::array();
      for (const auto& v : accp->witness_chain) w.push_back(exp_string(v));
      a["witness"] = w;
      out["accp"] = a;
    } else {
      out["accp"] = nullptr;
    }
    ordered_json fs = ordered_json::array();
    for (const auto& rep : reps) {
      ordered_json one = ordered_json::array();
      for (const auto& [e, c] : rep)
        one.push_back({std::to_string(e), c.get_str()});
      fs.push_back(one);
    }
    out["factorizations"] = fs;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "q = " << exp_string(ctx.q()) << " (" << class_name(ctx.cls)
            << "; atoms: " << atoms_name(monalg::atoms_of(ctx)) << ")\n";
  std::cout << "x = " << exp_string(x) << ": "
            << (member ? "member" : "not a member") << "\n";
  if (canon) {
    std::cout << "canonical: a0 = " << canon->a0.get_str();
    if (!canon->digits.empty()) {
      std::cout << ", digits of q^1..q^" << canon->digits.size() << ":";
      for (unsigned long d : canon->digits) std::cout << " " << d;
    }
    std::cout << "\n";
  }
  if (accp) {
    std::cout << "accp: " << accp_name(accp->status);
    if (!accp->witness_chain.empty()) {
      std::cout << "; descending chain:";
      for (std::size_t i = 0; i < accp->witness_chain.size(); ++i)
        std::cout << (i ? " > " : " ") << exp_string(accp->witness_chain[i]);
    }
    std::cout << "\n";
  }
  if (!reps.empty()) {
    std::cout << "atomic representations (up to 8):\n";
    for (const auto& rep : reps) {
      std::string line;
      for (const auto& [e, c] : rep) {
        if (!line.empty()) line += " + ";
        line += c.get_str() + "*q^" + std::to_string(e);
      }
      std::cout << "  " << line << "\n";
    }
  }
  return 0;
}

int run_algebra(const std::string& expr, const std::string& qtext,
                std::optional<unsigned long> level, bool json) {
  PuiseuxParam ctx = context_from(qtext);
  MonAlgPoly f = monalg::parse_monalg_poly(expr, ctx);
  monalg::MonAlgStats st = monalg::stats(f);
  unsigned long r_eff =
      ctx.r >= 2 ? ctx.r : std::max<unsigned long>(ctx.den, 2);
  unsigned long base = monalg::level_of(f, r_eff);
  unsigned long lam_max = level ? *level : base + 3;
  auto rep = monalg::stable_factorization(f, lam_max);
  auto accp = monalg::is_accp_supported(f, 8);
  const char* accp_str = accp == monalg::AccpSupport::yes      ? "yes"
                         : accp == monalg::AccpSupport::no     ? "no"
                                                               : "unknown";
  if (json) {
    ordered_json out;
    out["command"] = "algebra";
    out["q"] = exp_string(ctx.q());
    out["poly"] = poly_json(f);
    ordered_json stj;
    ordered_json sup = ordered_json::array();
    for (const auto& e : st.support) sup.push_back(exp_string(e));
    stj["support"] = sup;
    stj["order"] = exp_string(st.order);
    stj["degree"] = exp_string(st.degree);
    stj["content"] = st.content.get_str();
    out["stats"] = stj;
    out["base_level"] = rep.base_level;
    out["lambda_max"] = rep.lambda_max;
    out["sign"] = rep.sign;
    out["content"] = rep.content.get_str();
    ordered_json levels = ordered_json::array();
    for (const auto& lv : rep.levels) {
      ordered_json lj;
      lj["level"] = lv.level;
      ordered_json fs = ordered_json::array();
      for (const auto& en : lv.entries) {
        ordered_json ej;
        ej["poly"] = poly_json(en.factor);
        ej["multiplicity"] = en.multiplicity;
        ej["monomial"] = en.monomial;
        if (en.cyclotomic)
          ej["cyclotomic"] = *en.cyclotomic;
        else
          ej["cyclotomic"] = nullptr;
        fs.push_back(ej);
      }
      lj["factors"] = fs;
      levels.push_back(lj);
    }
    out["levels"] = levels;
    if (rep.gamma)
      out["gamma"] = *rep.gamma;
    else
      out["gamma"] = nullptr;
    if (rep.core_gamma)
      out["core_gamma"] = *rep.core_gamma;
    else
      out["core_gamma"] = nullptr;
    out["not_stabilized"] = rep.not_stabilized;
    out["accp_support"] = accp_str;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "f = " << f.to_string() << "\n";
  std::cout << "q = " << exp_string(ctx.q()) << "  order: "
            << exp_string(st.order) << "  degree: " << exp_string(st.degree)
            << "  content: " << st.content.get_str() << "\n";
  std::cout << "base level: " << rep.base_level
            << "  lambda_max: " << rep.lambda_max << "\n";
  for (const auto& lv : rep.levels) {
    std::cout << "level " << lv.level << ":";
    if (rep.sign < 0) std::cout << " -";
    if (rep.content != 1) std::cout << " " << rep.content.get_str() << " *";
    for (const auto& en : lv.entries) {
      std::cout << " (" << en.factor.to_string() << ")";
      if (en.multiplicity > 1) std::cout << "^" << en.multiplicity;
      if (en.monomial) std::cout << " [monomial]";
      if (en.cyclotomic) std::cout << " [Phi_" << *en.cyclotomic << "]";
    }
    std::cout << "\n";
  }
  if (rep.gamma)
    std::cout << "gamma: " << *rep.gamma;
  else
    std::cout << "gamma: not stabilized through lambda_max";
  if (rep.core_gamma)
    std::cout << " (ignoring monomial/cyclotomic factors: " << *rep.core_gamma
              << ")";
  std::cout << "\n";
  std::cout << "accp support: " << accp_str << "\n";
  return 0;
}

int run_verify(const std::string& selection, std::uint64_t seed, unsigned depth,
               std::size_t budget, bool json) {
  monalg::VerifyConfig cfg;
  cfg.seed = seed;
  cfg.depth = depth;
  cfg.node_budget = budget;
  monalg::Report rep = monalg::verify_suite(selection, cfg);
  std::cout << monalg::emit_report(
      rep, json ? monalg::ReportFormat::json : monalg::ReportFormat::human);
  return rep.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact factorization tools for one-dimensional monoid algebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::string factor_expr;
  auto* cmd_factor =
      app.add_subcommand("factor", "factor an integer polynomial over Z");
  cmd_factor->fallthrough();
  cmd_factor->add_option("expr", factor_expr, "polynomial expression")
      ->required();

  std::string split_expr;
  std::vector<unsigned long> split_primes;
  unsigned split_depth = 3;
  std::size_t split_budget = monalg::kDefaultNodeBudget;
  auto* cmd_split = app.add_subcommand(
      "split", "enumerate the splitting tree of an irreducible polynomial");
  cmd_split->fallthrough();
  cmd_split->add_option("expr", split_expr, "irreducible polynomial")
      ->required();
  cmd_split->add_option("--primes", split_primes, "composition exponents")
      ->required()
      ->delimiter(',');
  cmd_split->add_option("--depth", split_depth, "tree depth");
  cmd_split->add_option("--node-budget", split_budget, "node cap");

  std::string lambda_expr;
  std::vector<unsigned long> lambda_primes;
  unsigned lambda_depth = 4;
  auto* cmd_lambda = app.add_subcommand(
      "lambda", "empirical leading-S count over an exponent set");
  cmd_lambda->fallthrough();
  cmd_lambda->add_option("expr", lambda_expr, "irreducible polynomial")
      ->required();
  cmd_lambda->add_option("--primes", lambda_primes, "composition exponents")
      ->required()
      ->delimiter(',');
  cmd_lambda->add_option("--depth", lambda_depth, "search depth");

  std::string star_a;
  std::vector<unsigned long> star_primes;
  auto* cmd_star = app.add_subcommand(
      "lambda-star", "closed-form splitting bound for x - a");
  cmd_star->fallthrough();
  cmd_star->add_option("a", star_a, "integer with |a| >= 2")->required();
  cmd_star->add_option("--primes", star_primes, "composition exponents")
      ->required()
      ->delimiter(',');

  std::string monoid_x, monoid_q;
  unsigned monoid_horizon = 8;
  auto* cmd_monoid =
      app.add_subcommand("monoid", "membership and chains in M_q");
  cmd_monoid->fallthrough();
  cmd_monoid->add_option("x", monoid_x, "nonnegative rational")->required();
  cmd_monoid->add_option("--q", monoid_q, "generator ratio n/d")->required();
  cmd_monoid->add_option("--depth", monoid_horizon, "chain search horizon");

  std::string alg_expr, alg_q;
  std::optional<unsigned long> alg_level;
  auto* cmd_algebra = app.add_subcommand(
      "algebra", "level factorizations in the monoid algebra Z[M_q]");
  cmd_algebra->fallthrough();
  cmd_algebra->add_option("expr", alg_expr, "polynomial with q-compatible exponents")
      ->required();
  cmd_algebra->add_option("--q", alg_q, "generator ratio n/d")->required();
  cmd_algebra->add_option("--level", alg_level, "largest level to factor at");

  std::string verify_selection = "all";
  std::uint64_t verify_seed = monalg::VerifyConfig{}.seed;
  unsigned verify_depth = monalg::VerifyConfig{}.depth;
  std::size_t verify_budget = monalg::VerifyConfig{}.node_budget;
  auto* cmd_verify = app.add_subcommand(
      "verify-paper", "run the built-in identity and bound suites");
  cmd_verify->fallthrough();
  cmd_verify->add_option(
      "selection", verify_selection,
      "all|cyclotomic|composed|splitting|bounds|monoid|stabilization");
  cmd_verify->add_option("--seed", verify_seed, "corpus seed");
  cmd_verify->add_option("--depth", verify_depth, "splitting sweep depth");
  cmd_verify->add_option("--node-budget", verify_budget, "per-tree node cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_factor) return run_factor(factor_expr, json);
    if (*cmd_split)
      return run_split(split_expr, split_primes, split_depth, split_budget,
                       json);
    if (*cmd_lambda)
      return run_lambda(lambda_expr, lambda_primes, lambda_depth, json);
    if (*cmd_star) return run_lambda_star(star_a, star_primes, json);
    if (*cmd_monoid) return run_monoid(monoid_x, monoid_q, monoid_horizon, json);
    if (*cmd_algebra) return run_algebra(alg_expr, alg_q, alg_level, json);
    if (*cmd_verify)
      return run_verify(verify_selection, verify_seed, verify_depth,
                        verify_budget, json);
  } catch (const monalg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
