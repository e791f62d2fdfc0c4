#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ndsig/lattice.hpp"

namespace ndsig {

/// Supporting inequality normal·p >= offset of the Newton polyhedron.
/// `normal` is a primitive inner normal; compact facets have all components
/// positive, the three non-compact ones are the coordinate planes.
struct Facet {
  IntVec3 normal;
  std::int64_t offset = 0;
  bool compact = false;

  /// Signed slack: negative strictly below the facet's plane, zero on it.
  std::int64_t slack(IntVec3 p) const { return dot(normal, p) - offset; }

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct Edge {
  std::array<std::size_t, 2> vertices;  // indices into NewtonPolyhedron::vertices, sorted
  std::array<std::size_t, 2> facets;    // the two facets meeting along the edge, sorted

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Compact 2-face: the polygon cut out of a compact facet, as a vertex cycle
/// oriented counter-clockwise when seen from inside the polyhedron.
struct TwoFace {
  std::size_t facet = 0;
  std::vector<std::size_t> cycle;

  friend bool operator==(const TwoFace&, const TwoFace&) = default;
};

/// Gamma_+ = Conv(support + R^3_{>=0}) of a convenient support together with
/// its compact face complex (the Newton diagram). Facets are sorted by normal
/// and vertices lexicographically, so equal polyhedra compare equal.
struct NewtonPolyhedron {
  std::vector<Facet> facets;
  std::vector<ExponentVector> vertices;
  std::vector<Edge> edges;
  std::vector<TwoFace> two_faces;

  std::vector<std::size_t> compact_facets() const;
  const TwoFace& two_face(std::size_t facet_id) const;
  /// Vertex coordinates of the 2-face on a compact facet, in cycle order.
  std::vector<ExponentVector> polygon(std::size_t facet_id) const;
  bool has_vertex(const ExponentVector& p) const;
  /// Position of the vertex on the given coordinate axis (0 = x).
  std::int64_t axis_intercept(std::size_t axis) const;

  friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;
};

enum class PointClass { Below, OnTwoFaceInterior, OnSkeleton, Above };

struct PointLocation {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  PointClass kind = PointClass::Above;
  std::size_t facet = npos;  // set for OnTwoFaceInterior

  friend bool operator==(const PointLocation&, const PointLocation&) = default;
};

struct FaceLatticePoints {
  std::vector<ExponentVector> boundary;
  std::vector<ExponentVector> interior;
};

using LatticeTriangle = std::array<ExponentVector, 3>;

/// True iff the support has a point on each coordinate axis.
bool is_convenient(const Support& s);

/// Adds x^n, y^n, z^n on every axis the support does not already meet.
/// Throws CompletionTooSmall unless n exceeds every coordinate in s.
Support convenient_completion(const Support& s, std::int64_t n);

/// 1 + 3 * (largest coordinate in s).
std::int64_t default_completion_exponent(const Support& s);

/// Gift-wrapping over the compact facets, starting from an edge of the
/// diagram in the plane x = 0. Throws NotConvenient or DegenerateSupport.
NewtonPolyhedron build_polyhedron(const Support& s);

/// Locates p (all coordinates >= 0) relative to the diagram.
PointLocation classify_point(const NewtonPolyhedron& np, const ExponentVector& p);

/// Lattice points of a closed compact 2-face, split into relative boundary
/// and relative interior, each sorted.
FaceLatticePoints facet_lattice_points(const NewtonPolyhedron& np, std::size_t facet_id);

/// Triangulation of a compact 2-face whose vertices are all of its lattice
/// points, so every triangle is elementary. Size is 2I + B - 2.
std::vector<LatticeTriangle> elementary_triangulate(const NewtonPolyhedron& np,
                                                    std::size_t facet_id);

/// Pick count 2I + B - 2 of a compact 2-face.
std::int64_t pick_triangle_count(const NewtonPolyhedron& np, std::size_t facet_id);

namespace detail {

/// Strict convex hull of coplanar lattice points on the plane with the given
/// normal, counter-clockwise around `normal`. Collinear points are dropped.
std::vector<IntVec3> planar_hull(std::vector<IntVec3> pts, IntVec3 normal);

/// Vertices of the compact chain of the 2D Newton polygon of `pts` (pairs
/// (u, v) >= 0), ordered from the v-axis to the u-axis.
std::vector<std::array<std::int64_t, 2>> newton_chain_2d(
    std::vector<std::array<std::int64_t, 2>> pts);

}  // namespace detail

}  // namespace ndsig
