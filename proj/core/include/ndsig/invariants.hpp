#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "ndsig/lattice_count.hpp"

namespace ndsig {

/// Cardinalities of spectral numbers read off the diagram: points of
/// Z^3_{>0} strictly below it, on it, and on it inside a compact 2-face.
struct SpectralCounts {
  std::int64_t p_below = 0;
  std::int64_t p_on = 0;
  std::int64_t p_face_interior = 0;

  friend bool operator==(const SpectralCounts&, const SpectralCounts&) = default;
};

/// Jordan blocks of the monodromy at eigenvalue one (sizes 1 and 2 only).
struct JordanCounts {
  std::int64_t j1 = 0;
  std::int64_t j2 = 0;

  friend bool operator==(const JordanCounts&, const JordanCounts&) = default;
};

struct SingularityInvariants {
  std::int64_t mu = 0;
  std::int64_t mu_plus = 0;
  std::int64_t mu_zero = 0;
  std::int64_t mu_minus = 0;
  std::int64_t signature = 0;
  JordanCounts jordan;
  SpectralCounts spectral;
  VolumeData volume;

  friend bool operator==(const SingularityInvariants&, const SingularityInvariants&) = default;
};

struct AnalysisOptions {
  /// Completion exponent for non-convenient supports; when unset,
  /// default_completion_exponent() is used. The result is always
  /// cross-checked against exponent n + 1.
  std::optional<std::int64_t> completion;
};

struct Analysis {
  SingularityInvariants invariants;
  /// Convenient support the invariants were computed from.
  Support support;
  /// Exponent used to complete the input, if it was not convenient.
  std::optional<std::int64_t> completion_n;
};

/// Invariants of a convenient support, without any completion.
SingularityInvariants invariants_of_convenient(const Support& s);

/// Completes (when needed), computes, and checks stabilization at n + 1.
/// Throws NonIsolated when the invariants depend on the completion.
Analysis analyze_support(const Support& s, const AnalysisOptions& opts = {});

std::int64_t milnor_number(const Support& s, const AnalysisOptions& opts = {});

/// j2 = points on the skeleton; j1 = 2 * points inside compact 2-faces
/// (those blocks come in pairs, spectral numbers 0 and 1).
JordanCounts jordan_counts(const ClassifiedPoints& cp);

SingularityInvariants signature_triple(const Support& s, const AnalysisOptions& opts = {});

/// Componentwise sum over the singular points of one fibre. Volumes are not
/// additive across germs and are left zero.
SingularityInvariants sum_invariants(std::span<const SingularityInvariants> parts);

}  // namespace ndsig
