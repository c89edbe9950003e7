#include "monalg/parse.hpp"

#include <cctype>
#include <map>

namespace monalg {

namespace {

constexpr unsigned long kMaxParsedDegree = 1000000;

struct TermData {
  mpz_class coeff;
  mpq_class exponent;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::vector<TermData> run(bool rational_mode) {
    std::vector<TermData> terms;
    skip_ws();
    if (eof()) fail("expected a polynomial expression");
    int pending = 1;
    if (peek() == '-') {  // unary minus on the first term
      ++pos_;
      pending = -1;
    }
    while (true) {
      TermData t = term(rational_mode);
      t.coeff *= pending;
      terms.push_back(std::move(t));
      skip_ws();
      if (eof()) break;
      char c = peek();
      if (c == '+')
        pending = 1;
      else if (c == '-')
        pending = -1;
      else
        fail("expected '+' or '-'");
      ++pos_;
    }
    return terms;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::syntax_error,
                "syntax error at position " + std::to_string(pos_ + 1) + ": " + msg);
  }
  [[noreturn]] void domain_fail(const std::string& msg) const {
    throw error(errc::exponent_domain_error,
                "exponent error at position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  mpz_class integer(bool allow_sign) {
    skip_ws();
    std::string digits;
    if (!eof() && allow_sign && (peek() == '+' || peek() == '-')) {
      digits += peek();
      ++pos_;
      skip_ws();
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      ++pos_;
    }
    return mpz_class(digits);
  }

  mpq_class exponent(bool rational_mode) {
    skip_ws();
    if (eof()) fail("expected an exponent");
    if (peek() == '(') {
      ++pos_;
      std::size_t at = pos_;
      mpz_class num = integer(true);
      skip_ws();
      if (eof() || peek() != '/') fail("expected '/'");
      ++pos_;
      mpz_class den = integer(true);
      skip_ws();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos_;
      if (den == 0) {
        pos_ = at;
        domain_fail("zero denominator");
      }
      mpq_class e(num, den);
      e.canonicalize();
      if (e < 0) {
        pos_ = at;
        domain_fail("exponents must be nonnegative");
      }
      if (!rational_mode && e.get_den() != 1) {
        pos_ = at;
        domain_fail("rational exponent in integer mode");
      }
      return e;
    }
    std::size_t at = pos_;
    mpz_class num = integer(true);
    if (num < 0) {
      pos_ = at;
      domain_fail("exponents must be nonnegative");
    }
    return mpq_class(num);
  }

  TermData term(bool rational_mode) {
    skip_ws();
    if (eof()) fail("expected a term");
    TermData t;
    char c = peek();
    if (c == 'x') {
      t.coeff = 1;
    } else {
      t.coeff = integer(true);
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (eof() || peek() != 'x') fail("expected 'x'");
      } else {
        t.exponent = 0;
        return t;
      }
    }
    ++pos_;  // consume 'x'
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      t.exponent = exponent(rational_mode);
    } else {
      t.exponent = 1;
    }
    return t;
  }
};

}  // namespace

IntPoly parse_int_poly(const std::string& text) {
  Parser parser(text);
  std::vector<TermData> terms = parser.run(false);
  std::map<unsigned long, mpz_class> acc;
  for (const auto& t : terms) {
    mpz_class e = t.exponent.get_num();
    if (e > kMaxParsedDegree)
      throw error(errc::degree_limit, "exponent too large");
    acc[mpz_get_ui(e.get_mpz_t())] += t.coeff;
  }
  std::vector<mpz_class> coeffs;
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return IntPoly(std::move(coeffs));
}

MonAlgPoly parse_monalg_poly(const std::string& text, const PuiseuxParam& ctx) {
  Parser parser(text);
  std::vector<TermData> terms = parser.run(true);
  std::vector<std::pair<mpq_class, mpz_class>> pairs;
  for (const auto& t : terms) pairs.emplace_back(t.exponent, t.coeff);
  try {
    return MonAlgPoly(ctx, pairs);
  } catch (const error& e) {
    if (e.kind() == errc::incompatible_denominator)
      throw error(errc::exponent_domain_error,
                  std::string("exponent incompatible with d(q): ") + e.what());
    throw;
  }
}

}  // namespace monalg
