#include "monalg/algebra.hpp"

#include <algorithm>

#include "monalg/factor.hpp"
#include "monalg/numtheory.hpp"
#include "monalg/parallel.hpp"

namespace monalg {

namespace {

constexpr unsigned long kMaxIntegerDegree = 1000000;

// Least k with den | base^k; nullopt when den has a prime outside base.
std::optional<unsigned long> denominator_level(const mpz_class& den, unsigned long base) {
  mpz_class t = den, b = base;
  unsigned long k = 0;
  while (t != 1) {
    mpz_class g = gcd(t, b);
    if (g == 1) return std::nullopt;
    t /= g;
    ++k;
  }
  return k;
}

}  // namespace

void MonAlgPoly::add_term(const mpq_class& e, const mpz_class& c) {
  if (c == 0) return;
  mpq_class er = e;
  er.canonicalize();
  if (er < 0)
    throw error(errc::incompatible_denominator, "exponents must be nonnegative");
  if (!denominator_level(er.get_den(), ctx_.den))
    throw error(errc::incompatible_denominator,
                "exponent denominator must divide a power of d(q)");
  auto [it, fresh] = terms_.emplace(er, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MonAlgPoly::MonAlgPoly(PuiseuxParam ctx,
                       const std::vector<std::pair<mpq_class, mpz_class>>& term_list)
    : ctx_(std::move(ctx)) {
  for (const auto& [e, c] : term_list) add_term(e, c);
}

MonAlgPoly MonAlgPoly::from_int_poly(const IntPoly& f, const PuiseuxParam& ctx) {
  MonAlgPoly out(ctx);
  for (long i = 0; i <= f.degree(); ++i)
    out.add_term(mpq_class(static_cast<unsigned long>(i)), f.coeff(i));
  return out;
}

MonAlgPoly MonAlgPoly::operator-() const {
  MonAlgPoly out(ctx_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

MonAlgPoly MonAlgPoly::operator+(const MonAlgPoly& o) const {
  MonAlgPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MonAlgPoly MonAlgPoly::operator-(const MonAlgPoly& o) const {
  MonAlgPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MonAlgPoly MonAlgPoly::operator*(const MonAlgPoly& o) const {
  MonAlgPoly out(ctx_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

MonAlgPoly MonAlgPoly::operator*(const mpz_class& c) const {
  MonAlgPoly out(ctx_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
  return out;
}

std::string MonAlgPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpq_class& e = it->first;
    mpz_class c = it->second;
    bool first = out.empty();
    if (c < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    bool constant = e == 0;
    if (c != 1 || constant) {
      out += c.get_str();
      if (!constant) out += "*";
    }
    if (!constant) {
      out += "x";
      if (e != 1) {
        if (e.get_den() == 1) {
          out += "^" + e.get_num().get_str();
        } else {
          out += "^(" + e.get_num().get_str() + "/" + e.get_den().get_str() + ")";
        }
      }
    }
  }
  return out;
}

MonAlgStats stats(const MonAlgPoly& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "stats of the zero polynomial");
  MonAlgStats s;
  s.content = 0;
  for (const auto& [e, c] : f.terms()) {
    s.support.push_back(e);
    s.content = gcd(s.content, c);
  }
  s.content = abs(s.content);
  s.order = s.support.front();
  s.degree = s.support.back();
  return s;
}

unsigned long level_of(const MonAlgPoly& f, unsigned long r) {
  if (r < 2)
    throw error(errc::incompatible_denominator, "level base must be at least 2");
  unsigned long level = 0;
  for (const auto& [e, c] : f.terms()) {
    (void)c;
    auto k = denominator_level(e.get_den(), r);
    if (!k)
      throw error(errc::incompatible_denominator,
                  "exponent denominator incompatible with the level base");
    level = std::max(level, *k);
  }
  return level;
}

IntPoly to_integer_poly(const MonAlgPoly& f, unsigned long lambda) {
  unsigned long r = f.context().r;
  if (r < 2) r = std::max<unsigned long>(f.context().den, 2);
  if (!f.is_zero() && lambda < level_of(f, r))
    throw error(errc::level_too_small, "lambda below the level of f");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), r, lambda);
  std::vector<mpz_class> coeffs;
  for (const auto& [e, c] : f.terms()) {
    mpq_class idx = e * scale;
    idx.canonicalize();
    mpz_class num = idx.get_num();
    if (num > kMaxIntegerDegree)
      throw error(errc::degree_limit, "integer image degree too large");
    unsigned long i = mpz_get_ui(num.get_mpz_t());
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] = c;
  }
  return IntPoly(std::move(coeffs));
}

MonAlgPoly MonAlgFactorization::reconstruct(const PuiseuxParam& ctx) const {
  MonAlgPoly acc(ctx, {{mpq_class(0), content * sign}});
  for (const auto& [g, mult] : factors)
    for (unsigned i = 0; i < mult; ++i) acc = acc * g;
  return acc;
}

MonAlgFactorization factor_at_level(const MonAlgPoly& f, unsigned long lambda) {
  IntPoly g = to_integer_poly(f, lambda);
  Factorization fac = factor_over_integers(g);
  unsigned long r = f.context().r;
  if (r < 2) r = std::max<unsigned long>(f.context().den, 2);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), r, lambda);
  mpq_class inv_scale(mpz_class(1), scale);
  inv_scale.canonicalize();

  MonAlgFactorization out;
  out.sign = fac.sign;
  out.content = fac.content;
  for (const auto& [h, mult] : fac.factors) {
    std::vector<std::pair<mpq_class, mpz_class>> terms;
    for (long i = 0; i <= h.degree(); ++i)
      if (h.coeff(i) != 0)
        terms.emplace_back(mpq_class(static_cast<unsigned long>(i)) * inv_scale,
                           h.coeff(i));
    out.factors.emplace_back(MonAlgPoly(f.context(), terms), mult);
  }
  return out;
}

namespace {

// Multiset fingerprint of a level's factors; `core` drops flagged entries.
std::vector<std::string> level_fingerprint(const StabilizationReport::Level& lv,
                                           bool core) {
  std::vector<std::string> keys;
  for (const auto& ent : lv.entries) {
    if (core && (ent.monomial || ent.cyclotomic)) continue;
    keys.push_back(ent.factor.to_string() + "^" + std::to_string(ent.multiplicity));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::optional<unsigned long> first_stable_level(
    const std::vector<std::vector<std::string>>& prints, unsigned long base_level) {
  if (prints.size() < 2) return std::nullopt;
  std::size_t last = prints.size() - 1;
  std::size_t cut = last;
  while (cut > 0 && prints[cut - 1] == prints[last]) --cut;
  if (cut == last) return std::nullopt;  // constant only at the final level
  return base_level + cut;
}

}  // namespace

StabilizationReport stable_factorization(const MonAlgPoly& f, unsigned long lambda_max) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot stabilize 0");
  if (f.terms().size() == 1)
    throw error(errc::excluded_polynomial, "monomials are excluded");

  unsigned long r = f.context().r;
  if (r < 2) r = std::max<unsigned long>(f.context().den, 2);
  StabilizationReport report;
  report.base_level = level_of(f, r);
  report.lambda_max = lambda_max;
  if (lambda_max < report.base_level)
    throw error(errc::level_too_small, "lambda_max below the level of f");

  std::size_t count = lambda_max - report.base_level + 1;
  std::vector<MonAlgFactorization> facs(count);
  parallel_for(count, [&](std::size_t i) {
    facs[i] = factor_at_level(f, report.base_level + i);
  });

  report.sign = facs[0].sign;
  report.content = facs[0].content;
  for (std::size_t i = 0; i < count; ++i) {
    StabilizationReport::Level lv;
    lv.level = report.base_level + i;
    for (const auto& [g, mult] : facs[i].factors) {
      StabilizationReport::Entry ent;
      ent.factor = g;
      ent.multiplicity = mult;
      IntPoly gi = to_integer_poly(g, lv.level);
      ent.monomial = gi == IntPoly::x();
      ent.cyclotomic = cyclotomic_index(gi);
      lv.entries.push_back(std::move(ent));
    }
    report.levels.push_back(std::move(lv));
  }

  std::vector<std::vector<std::string>> full, core;
  for (const auto& lv : report.levels) {
    full.push_back(level_fingerprint(lv, false));
    core.push_back(level_fingerprint(lv, true));
  }
  report.gamma = first_stable_level(full, report.base_level);
  report.core_gamma = first_stable_level(core, report.base_level);
  report.not_stabilized = !report.gamma.has_value();
  return report;
}

mpz_class divisor_count_bound(const IntPoly& f, const std::set<unsigned long>& pi,
                              unsigned long lambda_value) {
  if (pi.empty())
    throw error(errc::wrong_exponent_set, "pi must be a nonempty set of odd primes");
  for (unsigned long p : pi)
    if (!is_prime(p) || p == 2)
      throw error(errc::wrong_exponent_set, "pi must contain odd primes");
  if (!is_irreducible(f))
    throw error(errc::reducible_input, "f must be irreducible");
  IntPoly g = f.lc() < 0 ? -f : f;
  if (g == IntPoly::x())
    throw error(errc::excluded_polynomial, "x is excluded from the bound");
  if (cyclotomic_index(g))
    throw error(errc::excluded_polynomial, "cyclotomic polynomials are excluded");

  unsigned long r = 1, pmax = 0;
  for (unsigned long p : pi) {
    r *= p;
    pmax = std::max(pmax, p);
  }
  unsigned long m = pi.size();

  mpz_class lc = abs(f.lc());
  unsigned long exponent;
  if (lc == 1) {
    exponent = lambda_value;
  } else {
    // H = least h with lc^((pmax-1)^h) < 2^(pmax^h), compared exactly.
    unsigned long H = 0;
    for (;; ++H) {
      mpz_class a_exp, b_exp;
      mpz_ui_pow_ui(a_exp.get_mpz_t(), pmax - 1, H);
      mpz_ui_pow_ui(b_exp.get_mpz_t(), pmax, H);
      if (!a_exp.fits_ulong_p() || !b_exp.fits_ulong_p() ||
          mpz_sizeinbase(lc.get_mpz_t(), 2) * mpz_get_ui(a_exp.get_mpz_t()) >
              100000000)
        throw error(errc::degree_limit, "leading coefficient out of supported range");
      mpz_class lhs, rhs = 1;
      mpz_pow_ui(lhs.get_mpz_t(), lc.get_mpz_t(), mpz_get_ui(a_exp.get_mpz_t()));
      rhs <<= mpz_get_ui(b_exp.get_mpz_t());
      if (lhs < rhs) break;
    }
    exponent = H + m * lambda_value;
  }
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), r, exponent);
  return bound;
}

std::size_t count_irreducible_divisors(const IntPoly& f, unsigned long r,
                                       unsigned long lambda) {
  if (r < 2) throw error(errc::wrong_exponent_set, "r must be at least 2");
  if (!is_irreducible(f))
    throw error(errc::reducible_input, "f must be irreducible");
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), r, lambda);
  if (!e.fits_ulong_p() ||
      static_cast<unsigned long>(f.degree()) * mpz_get_ui(e.get_mpz_t()) >
          kFactorDegreeLimit)
    throw error(errc::degree_limit, "composition degree too large");
  IntPoly g = f.lc() < 0 ? -f : f;
  Factorization fac = factor_over_integers(compose_power(g, mpz_get_ui(e.get_mpz_t())));
  return fac.factors.size();
}

AccpSupport is_accp_supported(const MonAlgPoly& f, unsigned horizon) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "zero polynomial has no support");
  bool any_satisfies = false, all_fail = true;
  for (const auto& [e, c] : f.terms()) {
    (void)c;
    AccpResult res = accp_status(mpq_class(e), f.context(), horizon);
    if (res.status == AccpStatus::satisfies) any_satisfies = true;
    if (res.status != AccpStatus::fails) all_fail = false;
  }
  if (any_satisfies) return AccpSupport::yes;
  if (all_fail) return AccpSupport::no;
  return AccpSupport::unknown;
}

}  // namespace monalg
