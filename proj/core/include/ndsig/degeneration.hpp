#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndsig/errors.hpp"
#include "ndsig/invariants.hpp"

namespace ndsig {

/// Changes X_0 - X_{t!=0} of the invariants under a degeneration.
struct InvariantDeltas {
  std::int64_t mu = 0;
  std::int64_t mu_zero = 0;
  std::int64_t mu_plus = 0;
  std::int64_t mu_minus = 0;
  std::int64_t signature = 0;

  friend bool operator==(const InvariantDeltas&, const InvariantDeltas&) = default;
  InvariantDeltas& operator+=(const InvariantDeltas& o);
};

/// new - old, componentwise.
InvariantDeltas difference(const SingularityInvariants& degenerate,
                           const SingularityInvariants& generic);

/// Lattice data of erasing one vertex.
struct DegenerationCounts {
  std::int64_t six_v = 0;    // 6 * Vol(C \ C_new)
  std::int64_t n_new = 0;    // lattice points of dC_new \ dC
  std::int64_t n_inner = 0;  // lattice points interior to edges of the loop
  std::int64_t n_outer = 0;  // vertices of the loop

  friend bool operator==(const DegenerationCounts&, const DegenerationCounts&) = default;
};

/// Erasing vertex `erased` of C = old_np: C_new is the hull of all other
/// lattice points of C. The loop is the boundary of the part of dC_new that
/// is not on dC.
struct DegenerationGeometry {
  ExponentVector erased;
  NewtonPolyhedron old_np;
  NewtonPolyhedron new_np;
  std::vector<ExponentVector> new_points;
  std::vector<ExponentVector> inner_points;
  std::vector<ExponentVector> outer_points;
  /// Loop vertices in cyclic order.
  std::vector<ExponentVector> loop;
  /// Compact facets of new_np cut off by the erased vertex.
  std::vector<std::size_t> new_facets;
  std::int64_t six_v = 0;
  std::int64_t collar_triangles = 0;

  DegenerationCounts counts() const;
};

struct Prediction {
  InvariantDeltas deltas;
  /// 6V - N_outer - N_inner - 2 N_new + 2; never negative.
  std::int64_t delta = 0;
  /// 3 - delta - N_outer + N_new, the second closed form of the signature change.
  std::int64_t signature_via_delta = 0;
};

struct DegenerationReport {
  DegenerationGeometry geometry;
  DegenerationCounts counts;
  std::int64_t delta = 0;
  InvariantDeltas predicted;
  InvariantDeltas direct;
  SingularityInvariants before;  // X_{t!=0}
  SingularityInvariants after;   // X_0
  bool consistent = false;
};

/// Throws NotInteriorLatticePoint, NotAVertex, or AssumptionViolated.
DegenerationGeometry erase_vertex(const NewtonPolyhedron& np, const ExponentVector& a);

Prediction predicted_deltas(const DegenerationCounts& c);

/// Completes s_old when needed, erases `a`, and compares the predicted
/// deltas with invariants recomputed on both sides. Throws whatever
/// erase_vertex throws, and LemmaViolation if delta < 0.
DegenerationReport verify_degeneration(const Support& s_old, const ExponentVector& a,
                                       const AnalysisOptions& opts = {});

/// verify_degeneration with failures captured instead of thrown.
struct DegenerationAttempt {
  std::optional<DegenerationReport> report;
  std::optional<ErrorKind> error;
  std::string message;
};
DegenerationAttempt attempt_degeneration(const Support& s_old, const ExponentVector& a,
                                         const AnalysisOptions& opts = {});

/// Dropping the monomial `a` from the support, decomposed into a sequence of
/// single-vertex erasures, each verified on its own.
struct ErasureChainReport {
  ExponentVector erased;
  std::vector<DegenerationReport> steps;
  InvariantDeltas predicted;  // sum over steps
  InvariantDeltas direct;     // invariants of support \ {a} minus those of support
  SingularityInvariants before;
  SingularityInvariants after;
  std::optional<std::int64_t> completion_n;
  bool consistent = false;
};

/// Throws NotInteriorLatticePoint if a has a zero coordinate, NotAVertex if
/// dropping a changes nothing, AssumptionViolated if no admissible sequence
/// of erasures is found.
ErasureChainReport verify_support_erasure(const Support& s_old, const ExponentVector& a,
                                          const AnalysisOptions& opts = {});

}  // namespace ndsig
