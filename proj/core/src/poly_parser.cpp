#include "ndsig/poly_parser.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "ndsig/errors.hpp"

namespace ndsig {
namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, const Bindings& bindings)
      : text_(text), bindings_(bindings) {}

  TermList parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      skip_ws();
      terms.push_back(term(c == '-'));
    }
    return TermList(terms);
  }

  Rational rational_only() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    Rational r = rational();
    skip_ws();
    if (!at_end()) fail("trailing characters after rational");
    return negative ? -r : r;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(at), at);
  }

  std::int64_t uint_literal(std::int64_t limit) {
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > limit) fail_at(start, "integer literal too large");
    }
    return v;
  }

  Rational rational() {
    constexpr std::int64_t limit = std::numeric_limits<std::int32_t>::max();
    const std::int64_t num = uint_literal(limit);
    skip_ws();
    if (peek() != '/') return Rational(num);
    get();
    skip_ws();
    const std::size_t at = pos_;
    const std::int64_t den = uint_literal(limit);
    if (den == 0) fail_at(at, "zero denominator");
    return Rational(num, den);
  }

  std::string identifier() {
    std::string id;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') id += get();
    return id;
  }

  // Multiplies the factor at the cursor into (coef, exp).
  void factor(Rational& coef, ExponentVector& exp) {
    const std::size_t start = pos_;
    const char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      fail("expected variable or parameter");
    }
    const std::string id = identifier();
    skip_ws();
    if (id == "x" || id == "y" || id == "z") {
      std::int64_t e = 1;
      if (peek() == '^') {
        get();
        skip_ws();
        if (peek() == '-') {
          throw Error(ErrorKind::NegativeExponent,
                      "negative exponent at offset " + std::to_string(pos_), pos_);
        }
        e = uint_literal(kMaxExponent);
      }
      const std::size_t axis = id == "x" ? 0 : (id == "y" ? 1 : 2);
      exp[axis] += e;
      return;
    }
    if (peek() == '^') fail("exponent applied to parameter '" + id + "'");
    const auto it = bindings_.find(id);
    if (it == bindings_.end()) {
      throw Error(ErrorKind::UnboundParameter,
                  "parameter '" + id + "' has no binding (offset " +
                      std::to_string(start) + ")",
                  start);
    }
    coef *= it->second;
  }

  Term term(bool negative) {
    Rational coef(1);
    ExponentVector exp{};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      skip_ws();
      if (peek() != '*') return {negative ? -coef : coef, exp};
      get();
      skip_ws();
    }
    factor(coef, exp);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
      factor(coef, exp);
    }
    return {negative ? -coef : coef, exp};
  }

  std::string_view text_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

TermList::TermList(const std::vector<Term>& terms) {
  std::map<ExponentVector, Rational> merged;
  for (const auto& t : terms) merged[t.exponent] += t.coefficient;
  for (const auto& [e, c] : merged) {
    if (c != Rational(0)) terms_.push_back({c, e});
  }
}

TermList parse_polynomial(std::string_view text, const Bindings& bindings) {
  return Parser(text, bindings).parse();
}

Rational parse_rational(std::string_view text) {
  static const Bindings none;
  return Parser(text, none).rational_only();
}

Support support_of(const TermList& poly) {
  if (poly.empty()) throw Error(ErrorKind::ZeroPolynomial, "support of the zero polynomial");
  std::vector<ExponentVector> pts;
  pts.reserve(poly.size());
  for (const auto& t : poly.terms()) pts.push_back(t.exponent);
  return Support(std::move(pts));
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::string to_string(const TermList& poly) {
  if (poly.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [coef, exp] : poly.terms()) {
    const bool negative = coef < Rational(0);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? -coef : coef;
    std::vector<std::string> factors;
    static constexpr char vars[] = {'x', 'y', 'z'};
    for (std::size_t i = 0; i < 3; ++i) {
      if (exp[i] == 0) continue;
      std::string f(1, vars[i]);
      if (exp[i] > 1) f += "^" + std::to_string(exp[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << to_string(mag);
      continue;
    }
    if (mag != Rational(1)) os << to_string(mag) << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace ndsig
