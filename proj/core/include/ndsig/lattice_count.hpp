#pragma once

#include <cstdint>
#include <vector>

#include "ndsig/newton_hull.hpp"

namespace ndsig {

/// Normalized volumes under the diagram (unit cube has volume 1 in every
/// dimension), pre-multiplied by the factorials so everything is integral.
struct VolumeData {
  std::int64_t six_vol3 = 0;
  std::int64_t two_vol2_xy = 0;
  std::int64_t two_vol2_yz = 0;
  std::int64_t two_vol2_xz = 0;
  std::int64_t vol1_x = 0;
  std::int64_t vol1_y = 0;
  std::int64_t vol1_z = 0;

  std::int64_t two_vol2() const { return two_vol2_xy + two_vol2_yz + two_vol2_xz; }
  std::int64_t vol1() const { return vol1_x + vol1_y + vol1_z; }
  /// 3! Vol_3 - 2! Vol_2 + Vol_1 - 1.
  std::int64_t newton_number() const { return six_vol3 - two_vol2() + vol1() - 1; }

  friend bool operator==(const VolumeData&, const VolumeData&) = default;
};

/// Points of Z^3_{>0} that are not above the diagram.
struct ClassifiedPoints {
  std::vector<ExponentVector> below;
  std::vector<ExponentVector> on_face_interior;
  std::vector<ExponentVector> on_skeleton;

  std::size_t on_diagram() const { return on_face_interior.size() + on_skeleton.size(); }

  friend bool operator==(const ClassifiedPoints&, const ClassifiedPoints&) = default;
};

/// Cones from the origin over the compact faces (3D) and over the compact
/// edges in each coordinate plane (2D).
VolumeData volumes(const NewtonPolyhedron& np);

/// Scans the intercept box column by column; each (x, y) column is cut at the
/// highest z that is not above some compact facet. Lists come out sorted.
ClassifiedPoints enumerate_not_above(const NewtonPolyhedron& np);

}  // namespace ndsig
