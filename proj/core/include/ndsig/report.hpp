#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndsig/search.hpp"

namespace ndsig {

std::string_view engine_version();

/// Process exit status for a failure of the given kind:
/// 2 input or flags, 3 assumption violated, 4 non-isolated or degenerate,
/// 5 not a vertex, 6 I/O, 1 anything else.
int exit_code_for(ErrorKind kind);

/// One primitive step, reduced to its numbers.
struct StepSummary {
  ExponentVector erased;
  DegenerationCounts counts;
  std::int64_t delta = 0;
  std::int64_t collar_triangles = 0;
  InvariantDeltas predicted;
  InvariantDeltas direct;
  bool consistent = false;
  std::vector<ExponentVector> new_points;
  std::vector<ExponentVector> inner_points;
  std::vector<ExponentVector> outer_points;

  friend bool operator==(const StepSummary&, const StepSummary&) = default;
};

/// Counts, delta and deltas are sums over the steps; a primitive
/// degeneration has exactly one step.
struct DegenerationSummary {
  ExponentVector erased;
  bool monomial = false;
  DegenerationCounts counts;
  std::int64_t delta = 0;
  InvariantDeltas predicted;
  InvariantDeltas direct;
  bool consistent = false;
  SingularityInvariants after;
  std::vector<StepSummary> steps;

  friend bool operator==(const DegenerationSummary&, const DegenerationSummary&) = default;
};

struct FindingSummary {
  std::vector<ExponentVector> support;
  ExponentVector erased;
  std::int64_t signature_delta = 0;
  std::int64_t mu_generic = 0;
  std::int64_t mu_degenerate = 0;
  std::size_t steps = 0;
  InvariantDeltas predicted;
  InvariantDeltas direct;
  std::string per_mu_degenerate;  // exact fraction "p/q"
  std::string per_mu_generic;

  friend bool operator==(const FindingSummary&, const FindingSummary&) = default;
};

struct SearchSummary {
  std::string spec;  // human-readable echo of the family spec
  std::int64_t candidates = 0;
  std::int64_t attempts = 0;
  std::int64_t processed = 0;
  std::int64_t consistent = 0;
  std::int64_t inconsistent = 0;
  std::optional<std::int64_t> min_delta;
  std::map<std::string, std::int64_t> skipped;
  std::vector<FindingSummary> findings;
  std::string max_per_mu_degenerate;
  std::string max_per_mu_generic;

  friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

struct ReportDocument {
  std::string command;
  std::string input;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::optional<std::int64_t> completion_n;
  std::optional<SingularityInvariants> invariants;
  std::optional<DegenerationSummary> degeneration;
  std::optional<SearchSummary> search;
  std::string engine = std::string(engine_version());

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

DegenerationSummary summarize(const DegenerationReport& r);
DegenerationSummary summarize(const ErasureChainReport& c);
SearchSummary summarize(const HuntResult& h, std::string spec_echo);

std::string to_json(const ReportDocument& doc, int indent = 2);
/// Throws InvalidArgument on malformed input.
ReportDocument report_from_json(std::string_view text);

/// Table in the column order mu, mu_+, mu_0, mu_-, mu_+ - mu_-.
struct TableRow {
  std::string label;
  SingularityInvariants inv;
};
std::string format_table(const std::vector<TableRow>& rows);

/// Plain-text human report of a document.
std::string format_text(const ReportDocument& doc);

/// Wavefront OBJ of the compact 2-faces, one polygon per face, with the
/// exponent triple of each vertex in a comment. `shift` is added to every vertex.
std::string render_obj(const NewtonPolyhedron& np, IntVec3 shift = {});

/// Axonometric SVG of the compact 2-faces with labelled vertices.
std::string render_svg(const NewtonPolyhedron& np, IntVec3 shift = {});

}  // namespace ndsig
