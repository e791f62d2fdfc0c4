#include "ndsig/lattice_count.hpp"

#include <algorithm>
#include <cstdlib>

namespace ndsig {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

VolumeData volumes(const NewtonPolyhedron& np) {
  VolumeData vd;
  for (const auto& tf : np.two_faces) {
    const auto& c = tf.cycle;
    const IntVec3 v0 = np.vertices[c[0]];
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
      vd.six_vol3 += std::llabs(det3(v0, np.vertices[c[i]], np.vertices[c[i + 1]]));
    }
  }
  for (const auto& e : np.edges) {
    const IntVec3 a = np.vertices[e.vertices[0]];
    const IntVec3 b = np.vertices[e.vertices[1]];
    if (a.z == 0 && b.z == 0) vd.two_vol2_xy += std::llabs(a.x * b.y - a.y * b.x);
    if (a.x == 0 && b.x == 0) vd.two_vol2_yz += std::llabs(a.y * b.z - a.z * b.y);
    if (a.y == 0 && b.y == 0) vd.two_vol2_xz += std::llabs(a.x * b.z - a.z * b.x);
  }
  vd.vol1_x = np.axis_intercept(0);
  vd.vol1_y = np.axis_intercept(1);
  vd.vol1_z = np.axis_intercept(2);
  return vd;
}

ClassifiedPoints enumerate_not_above(const NewtonPolyhedron& np) {
  ClassifiedPoints out;
  const std::int64_t ix = np.axis_intercept(0);
  const std::int64_t iy = np.axis_intercept(1);
  const auto compact = np.compact_facets();
  for (std::int64_t x = 1; x < ix; ++x) {
    for (std::int64_t y = 1; y < iy; ++y) {
      std::int64_t zmax = 0;
      for (std::size_t f : compact) {
        const Facet& fc = np.facets[f];
        zmax = std::max(zmax, floor_div(fc.offset - fc.normal.x * x - fc.normal.y * y,
                                        fc.normal.z));
      }
      for (std::int64_t z = 1; z <= zmax; ++z) {
        const IntVec3 p{x, y, z};
        switch (classify_point(np, p).kind) {
          case PointClass::Below: out.below.push_back(p); break;
          case PointClass::OnTwoFaceInterior: out.on_face_interior.push_back(p); break;
          case PointClass::OnSkeleton: out.on_skeleton.push_back(p); break;
          case PointClass::Above: break;
        }
      }
    }
  }
  return out;
}

}  // namespace ndsig
