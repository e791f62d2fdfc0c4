#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "ndsig/lattice.hpp"

namespace ndsig {

using Rational = boost::rational<std::int64_t>;

/// Parameter name -> exact value, substituted while parsing.
using Bindings = std::map<std::string, Rational, std::less<>>;

struct Term {
  Rational coefficient;
  ExponentVector exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in x, y, z as a list of terms with distinct exponents and
/// nonzero coefficients, sorted by exponent. Empty means the zero polynomial.
class TermList {
 public:
  TermList() = default;
  /// Merges like terms and drops zero coefficients.
  explicit TermList(const std::vector<Term>& terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const TermList&, const TermList&) = default;

 private:
  std::vector<Term> terms_;
};

/// Grammar (whitespace insignificant, no implicit multiplication):
///   poly     := ['+'|'-'] term (('+'|'-') term)*
///   term     := [rational '*'] factor ('*' factor)* | rational
///   factor   := var ['^' uint] | param
///   var      := 'x' | 'y' | 'z'
///   rational := uint ['/' uint]
///   param    := identifier other than x, y, z
/// Throws Error{SyntaxError | UnboundParameter | NegativeExponent}, with the
/// byte offset of the offending token.
TermList parse_polynomial(std::string_view text, const Bindings& bindings = {});

/// "3", "-1/2", ... as accepted by parameter bindings on the command line.
Rational parse_rational(std::string_view text);

/// Throws Error{ZeroPolynomial} for the empty list.
Support support_of(const TermList& poly);

/// Canonical form; parse_polynomial(to_string(p)) == p.
std::string to_string(const TermList& poly);
std::string to_string(const Rational& r);

}  // namespace ndsig
