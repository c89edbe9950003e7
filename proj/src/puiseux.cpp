#include "monalg/puiseux.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "monalg/numtheory.hpp"

namespace monalg {

PuiseuxParam::PuiseuxParam(unsigned long n, unsigned long d) {
  if (n == 0 || d == 0) throw error(errc::divisor_zero, "q must be a positive rational");
  unsigned long g = std::gcd(n, d);
  num = n / g;
  den = d / g;
  r = radical(den);
  if (den == 1)
    cls = MonoidClass::natural;
  else if (num == 1)
    cls = MonoidClass::antimatter;
  else if (num < den)
    cls = MonoidClass::atomic_non_accp;
  else
    cls = MonoidClass::at_least_one;
}

mpq_class PuiseuxParam::q_pow(unsigned long k) const {
  mpz_class nk, dk;
  mpz_ui_pow_ui(nk.get_mpz_t(), num, k);
  mpz_ui_pow_ui(dk.get_mpz_t(), den, k);
  mpq_class out(nk, dk);
  out.canonicalize();
  return out;
}

mpq_class CanonicalRep::value(const PuiseuxParam& p) const {
  mpq_class v = a0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    v += mpz_class(digits[i]) * p.q_pow(i + 1);
  return v;
}

AtomSet atoms_of(const PuiseuxParam& p) {
  switch (p.cls) {
    case MonoidClass::natural:
      return AtomSet::single_unit;
    case MonoidClass::antimatter:
      return AtomSet::antimatter;
    default:
      return AtomSet::powers_of_q;
  }
}

std::optional<CanonicalRep> canonical_form(const mpq_class& x, const PuiseuxParam& p) {
  mpq_class xr = x;
  xr.canonicalize();
  if (xr < 0) return std::nullopt;

  mpz_class d = p.den, n = p.num;
  // K = least k with den(x) | d^k; none exists if den(x) has a prime outside d.
  mpz_class t = xr.get_den();
  unsigned long K = 0;
  while (t != 1) {
    mpz_class g = gcd(t, d);
    if (g == 1) return std::nullopt;
    t /= g;
    ++K;
  }

  mpz_class dK;
  mpz_pow_ui(dK.get_mpz_t(), d.get_mpz_t(), K);
  mpz_class X = xr.get_num() * (dK / xr.get_den());

  CanonicalRep rep;
  rep.digits.assign(K, 0);
  for (unsigned long k = K; k >= 1; --k) {
    // a_k is forced by X = a_k * n^k (mod d).
    mpz_class nk;
    mpz_pow_ui(nk.get_mpz_t(), n.get_mpz_t(), k);
    mpz_class nk_mod = nk % d, inv;
    if (mpz_invert(inv.get_mpz_t(), nk_mod.get_mpz_t(), d.get_mpz_t()) == 0)
      throw error(errc::not_coprime, "n(q) not invertible mod d(q)");
    mpz_class ak = (X % d) * inv % d;
    if (ak < 0) ak += d;
    rep.digits[k - 1] = mpz_get_ui(ak.get_mpz_t());
    X = (X - ak * nk) / d;
  }
  if (X < 0) return std::nullopt;
  rep.a0 = X;
  return rep;
}

bool is_member(const mpq_class& x, const PuiseuxParam& p) {
  return canonical_form(x, p).has_value();
}

bool divides(const mpq_class& a, const mpq_class& b, const PuiseuxParam& p) {
  if (!is_member(a, p) || !is_member(b, p))
    throw error(errc::not_member_input, "arguments must lie in the monoid");
  return is_member(b - a, p);
}

namespace {

std::string state_key(const ExponentMultiset& s) {
  std::string key;
  for (const auto& [e, c] : s) {
    key += std::to_string(e);
    key += ':';
    key += c.get_str();
    key += ';';
  }
  return key;
}

}  // namespace

std::vector<ExponentMultiset> atomic_factorizations(const mpq_class& x,
                                                    const PuiseuxParam& p,
                                                    std::size_t limit) {
  if (p.cls == MonoidClass::antimatter)
    throw error(errc::antimatter_monoid, "no atoms exist for q = 1/d");
  auto rep = canonical_form(x, p);
  if (!rep) throw error(errc::not_member_input, "x must lie in the monoid");
  if (limit == 0) return {};

  ExponentMultiset start;
  if (rep->a0 != 0) start[0] = rep->a0;
  for (std::size_t i = 0; i < rep->digits.size(); ++i)
    if (rep->digits[i] != 0) start[i + 1] = rep->digits[i];

  if (p.cls == MonoidClass::natural) {
    // The only atom is 1 = q^0; carry moves would leave the atom set.
    ExponentMultiset flat;
    mpq_class total = x;
    total.canonicalize();
    if (total != 0) flat[0] = total.get_num();
    return {flat};
  }

  std::vector<ExponentMultiset> out;
  std::set<std::string> seen;
  std::deque<ExponentMultiset> queue{start};
  seen.insert(state_key(start));
  mpz_class n = p.num, d = p.den;
  while (!queue.empty() && out.size() < limit) {
    ExponentMultiset cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (const auto& [e, c] : cur) {
      if (c >= n) {
        ExponentMultiset next = cur;
        next[e] -= n;
        if (next[e] == 0) next.erase(e);
        next[e + 1] += d;
        if (seen.insert(state_key(next)).second) queue.push_back(next);
      }
      if (e >= 1 && c >= d) {
        ExponentMultiset next = cur;
        next[e] -= d;
        if (next[e] == 0) next.erase(e);
        next[e - 1] += n;
        if (seen.insert(state_key(next)).second) queue.push_back(next);
      }
    }
  }
  return out;
}

AccpResult accp_status(const mpq_class& x, const PuiseuxParam& p, unsigned horizon) {
  auto rep = canonical_form(x, p);
  if (!rep) throw error(errc::not_member_input, "x must lie in the monoid");

  AccpResult result;
  mpq_class xr = x;
  xr.canonicalize();
  if (xr == 0 || p.num >= p.den) {
    // Nonzero elements of M_q are >= 1 when q >= 1, so descending
    // divisibility chains drop by at least 1 each step.
    result.status = AccpStatus::satisfies;
    return result;
  }
  if (p.cls == MonoidClass::atomic_non_accp) {
    // Atoms admit only the trivial divisors 0 and themselves.
    mpq_class pw = 1;
    while (pw >= xr) {
      if (pw == xr) {
        result.status = AccpStatus::satisfies;
        return result;
      }
      pw *= p.q();
    }
  }
  for (unsigned m = 1; m <= horizon; ++m) {
    // x*(1 - q^m) in M_q gives the chain x > x q^m > x q^{2m} > ... whose
    // consecutive differences x q^{km} (1 - q^m) stay in M_q.
    mpq_class qm = p.q_pow(m);
    if (is_member(xr * (1 - qm), p)) {
      result.status = AccpStatus::fails;
      result.witness_chain = {xr, xr * qm, xr * qm * qm};
      return result;
    }
  }
  result.status = AccpStatus::unknown;
  return result;
}

}  // namespace monalg
