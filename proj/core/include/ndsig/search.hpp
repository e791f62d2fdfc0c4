#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ndsig/degeneration.hpp"

namespace ndsig {

enum class SearchMode { Random, Grid, Family };

enum class KnownFamily {
  Example1,  // t xyz + xyz(x+y+z) + x^4 y + y^4 z + z^4 x, erase xyz
  TFamily,   // t xyz + x^{3k+3} y + x^{k+1} yz + z^2 x + y^2 z, erase xyz
  Tpqr,      // t xyz + x^p + y^q + z^r, erase xyz
};

struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

/// Which candidates to try. In random and grid mode a candidate is m - 3
/// points of [0, B]^3 plus pure powers x^p, y^q, z^r with exponents in
/// [2, 3B + 1]; every vertex of the diagram in Z^3_{>0} is erased in turn.
struct FamilySpec {
  SearchMode mode = SearchMode::Random;
  std::int64_t box = 3;
  std::int64_t max_points = 4;
  std::uint64_t seed = 0;
  std::int64_t count = 100;

  KnownFamily family = KnownFamily::Example1;
  IntRange k{1, 6};
  IntRange p{3, 6};
  IntRange q{3, 6};
  IntRange r{3, 6};

  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Throws InvalidArgument unless B >= 2, m >= 4, count >= 1 and ranges are sane.
void validate(const FamilySpec& spec);

/// A signature-increasing degeneration. Random and grid candidates erase a
/// single vertex; named families drop a monomial, which may take several
/// primitive steps.
struct Finding {
  Support support;  // convenient support of X_{t!=0}
  ExponentVector erased;
  std::optional<std::int64_t> completion_n;
  std::vector<DegenerationReport> steps;
  InvariantDeltas predicted;
  InvariantDeltas direct;
  SingularityInvariants before;  // X_{t!=0}
  SingularityInvariants after;   // X_0
  std::int64_t signature_delta = 0;
};

struct HuntResult {
  std::vector<Finding> findings;
  std::int64_t candidates = 0;
  /// Erasures tried (diagram vertices in Z^3_{>0}, or monomials for families).
  std::int64_t attempts = 0;
  /// Valid degenerations, whatever the sign of the signature change.
  std::int64_t processed = 0;
  std::int64_t consistent = 0;
  std::int64_t inconsistent = 0;
  std::optional<std::int64_t> min_delta;  // over processed primitive steps
  std::map<ErrorKind, std::int64_t> skipped;
};

/// Deterministic for a fixed spec whatever the thread count. Throws
/// LemmaViolation on the first instance with delta < 0.
HuntResult hunt(const FamilySpec& spec);

/// Candidate supports in generation order (for tests and tools).
Support random_candidate(const FamilySpec& spec, std::int64_t index);
Support grid_candidate(const FamilySpec& spec, std::int64_t index);
std::int64_t grid_size(const FamilySpec& spec);

std::string support_key(const Support& s);

using Ratio = boost::rational<std::int64_t>;

struct RatioRow {
  std::int64_t signature_delta = 0;
  std::int64_t mu_degenerate = 0;  // mu(X_0)
  std::int64_t mu_generic = 0;     // mu(X_{t!=0})
  Ratio per_mu_degenerate;
  Ratio per_mu_generic;
};

struct RatioSummary {
  std::vector<RatioRow> rows;
  Ratio max_per_mu_degenerate;
  Ratio max_per_mu_generic;
};

/// Throws EmptyFindings on an empty list.
RatioSummary ratio_report(const std::vector<Finding>& findings);

}  // namespace ndsig
