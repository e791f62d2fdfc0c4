#include "ndsig/newton_hull.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

#include "ndsig/errors.hpp"

namespace ndsig {
namespace {

constexpr IntVec3 kAxis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

// Points not dominated by another point. Only these can lie on compact faces.
std::vector<IntVec3> minimal_points(const Support& s) {
  std::vector<IntVec3> out;
  for (const auto& p : s) {
    bool dominated = false;
    for (const auto& q : s) {
      if (q != p && dominated_by(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

// Supporting plane through the edge uw found by rotating the plane of the
// current face around uw. Candidates are the points strictly off the face
// and the recession directions e_i pointing away from it. `inside` is any
// vector from u into the current face, off the line uw.
IntVec3 pivot(const std::vector<IntVec3>& pts, IntVec3 u, IntVec3 w, IntVec3 inside,
              const Facet& face) {
  const IntVec3 axis = w - u;
  std::optional<IntVec3> best;
  auto consider = [&](IntVec3 dir) {
    IntVec3 m = cross(axis, dir);
    const std::int64_t side = dot(m, inside);
    if (side == 0) return;
    if (side < 0) m = -m;
    if (!best || dot(*best, dir) < 0) best = m;
  };
  for (const auto& p : pts) {
    if (face.slack(p) > 0) consider(p - u);
  }
  for (const auto& e : kAxis) {
    if (dot(face.normal, e) > 0) consider(e);
  }
  if (!best) throw std::logic_error("pivot: no candidate off the current face");
  return primitive(*best);
}

std::int64_t orient2(std::array<std::int64_t, 2> o, std::array<std::int64_t, 2> a,
                     std::array<std::int64_t, 2> b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

struct EdgeKey {
  IntVec3 a, b;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

EdgeKey make_key(IntVec3 a, IntVec3 b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

}  // namespace

namespace detail {

std::vector<IntVec3> planar_hull(std::vector<IntVec3> pts, IntVec3 normal) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::size_t drop = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::llabs(normal[i]) > std::llabs(normal[drop])) drop = i;
  }
  const std::size_t i0 = drop == 0 ? 1 : 0;
  const std::size_t i1 = drop == 2 ? 1 : 2;

  struct P2 {
    std::array<std::int64_t, 2> uv;
    IntVec3 p;
  };
  std::vector<P2> q;
  q.reserve(pts.size());
  for (const auto& p : pts) q.push_back({{p[i0], p[i1]}, p});
  std::sort(q.begin(), q.end(), [](const P2& l, const P2& r) { return l.uv < r.uv; });

  // Andrew's monotone chain; collinear points are removed.
  std::vector<P2> hull(2 * q.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    while (k >= 2 && orient2(hull[k - 2].uv, hull[k - 1].uv, q[i].uv) <= 0) --k;
    hull[k++] = q[i];
  }
  for (std::size_t i = q.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2(hull[k - 2].uv, hull[k - 1].uv, q[i].uv) <= 0) --k;
    hull[k++] = q[i];
  }
  hull.resize(k - 1);

  std::vector<IntVec3> out;
  out.reserve(hull.size());
  for (const auto& h : hull) out.push_back(h.p);
  if (out.size() >= 3 && dot(cross(out[1] - out[0], out[2] - out[0]), normal) < 0) {
    std::reverse(out.begin(), out.end());
  }
  return out;
}

std::vector<std::array<std::int64_t, 2>> newton_chain_2d(
    std::vector<std::array<std::int64_t, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Keep minimal points: sorted by u, v must strictly decrease.
  std::vector<std::array<std::int64_t, 2>> mins;
  for (const auto& p : pts) {
    if (mins.empty() || p[1] < mins.back()[1]) mins.push_back(p);
  }
  std::vector<std::array<std::int64_t, 2>> chain;
  for (const auto& p : mins) {
    while (chain.size() >= 2 && orient2(chain[chain.size() - 2], chain.back(), p) <= 0) {
      chain.pop_back();
    }
    chain.push_back(p);
  }
  return chain;
}

}  // namespace detail

bool is_convenient(const Support& s) {
  std::array<bool, 3> met{};
  for (const auto& p : s) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (p[(i + 1) % 3] == 0 && p[(i + 2) % 3] == 0) met[i] = true;
    }
  }
  return met[0] && met[1] && met[2];
}

Support convenient_completion(const Support& s, std::int64_t n) {
  if (n <= 0 || n <= s.max_coordinate()) {
    throw Error(ErrorKind::CompletionTooSmall,
                "completion exponent " + std::to_string(n) +
                    " must exceed every coordinate of the support (max " +
                    std::to_string(s.max_coordinate()) + ")");
  }
  std::vector<ExponentVector> pts = s.points();
  for (std::size_t i = 0; i < 3; ++i) {
    const bool met = std::any_of(s.begin(), s.end(), [&](const ExponentVector& p) {
      return p[(i + 1) % 3] == 0 && p[(i + 2) % 3] == 0;
    });
    if (!met) pts.push_back(n * kAxis[i]);
  }
  return Support(std::move(pts));
}

std::int64_t default_completion_exponent(const Support& s) {
  return 1 + 3 * s.max_coordinate();
}

NewtonPolyhedron build_polyhedron(const Support& s) {
  if (s.empty()) throw Error(ErrorKind::DegenerateSupport, "empty support");
  for (const auto& p : s) {
    if (!is_nonnegative(p)) {
      throw Error(ErrorKind::DegenerateSupport, "negative exponent " + format(p));
    }
  }
  if (!is_convenient(s)) {
    throw Error(ErrorKind::NotConvenient, "support does not meet every coordinate axis");
  }
  if (s.contains({0, 0, 0})) {
    throw Error(ErrorKind::DegenerateSupport,
                "support contains the constant monomial; the diagram has no compact faces");
  }

  const std::vector<IntVec3> pts = minimal_points(s);

  // Working facet table: compact facets get ids >= 3, ids 0..2 are the
  // coordinate planes x_i = 0.
  struct Work {
    Facet facet;
    std::vector<IntVec3> polygon;
  };
  std::vector<Work> work;
  for (const auto& e : kAxis) work.push_back({Facet{e, 0, false}, {}});
  std::map<IntVec3, std::size_t> by_normal;
  std::map<EdgeKey, std::vector<std::size_t>> edge_facets;
  std::deque<std::size_t> queue;

  auto facet_for = [&](IntVec3 normal, IntVec3 on_plane) -> std::size_t {
    if (normal.x < 0 || normal.y < 0 || normal.z < 0) {
      throw std::logic_error("build_polyhedron: facet normal with negative component");
    }
    if (!is_positive(normal)) {
      // A coordinate plane; convenient supports have no other unbounded facets.
      for (std::size_t i = 0; i < 3; ++i) {
        if (normal == kAxis[i]) return i;
      }
      throw std::logic_error("build_polyhedron: unexpected non-compact facet");
    }
    if (auto it = by_normal.find(normal); it != by_normal.end()) return it->second;
    Facet f{normal, dot(normal, on_plane), true};
    std::vector<IntVec3> on;
    for (const auto& p : pts) {
      const std::int64_t sl = f.slack(p);
      if (sl < 0) throw std::logic_error("build_polyhedron: unsupported plane");
      if (sl == 0) on.push_back(p);
    }
    auto polygon = detail::planar_hull(std::move(on), normal);
    if (polygon.size() < 3) {
      throw Error(ErrorKind::DegenerateSupport, "compact face is not two-dimensional");
    }
    work.push_back({f, std::move(polygon)});
    const std::size_t id = work.size() - 1;
    by_normal.emplace(normal, id);
    queue.push_back(id);
    return id;
  };

  auto link = [&](IntVec3 a, IntVec3 b, std::size_t f) {
    auto& v = edge_facets[make_key(a, b)];
    if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
  };

  // Seed: an edge of the diagram inside the plane x = 0.
  std::vector<std::array<std::int64_t, 2>> yz;
  for (const auto& p : pts) {
    if (p.x == 0) yz.push_back({p.y, p.z});
  }
  const auto chain = detail::newton_chain_2d(yz);
  if (chain.size() < 2) throw Error(ErrorKind::DegenerateSupport, "no diagram edge in x = 0");
  const IntVec3 u{0, chain[0][0], chain[0][1]};
  const IntVec3 w{0, chain[1][0], chain[1][1]};
  const IntVec3 n0 = pivot(pts, u, w, kAxis[1], work[0].facet);
  const std::size_t first = facet_for(n0, u);
  link(u, w, 0);
  link(u, w, first);

  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const Work cur = work[id];  // copy: work may grow below
    const std::size_t k = cur.polygon.size();
    for (std::size_t i = 0; i < k; ++i) {
      const IntVec3 a = cur.polygon[i];
      const IntVec3 b = cur.polygon[(i + 1) % k];
      link(a, b, id);
      if (edge_facets[make_key(a, b)].size() >= 2) continue;
      const IntVec3 inside = cur.polygon[(i + 2) % k] - a;
      const IntVec3 n = pivot(pts, a, b, inside, cur.facet);
      link(a, b, facet_for(n, a));
    }
  }

  // Canonical assembly.
  std::vector<std::size_t> order(work.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return work[l].facet.normal < work[r].facet.normal;
  });
  std::vector<std::size_t> rank(work.size());
  NewtonPolyhedron np;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    np.facets.push_back(work[order[i]].facet);
  }
  for (const auto& wk : work) {
    np.vertices.insert(np.vertices.end(), wk.polygon.begin(), wk.polygon.end());
  }
  std::sort(np.vertices.begin(), np.vertices.end());
  np.vertices.erase(std::unique(np.vertices.begin(), np.vertices.end()), np.vertices.end());
  auto vindex = [&](IntVec3 v) {
    return static_cast<std::size_t>(
        std::lower_bound(np.vertices.begin(), np.vertices.end(), v) - np.vertices.begin());
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    const Work& wk = work[order[i]];
    if (!wk.facet.compact) continue;
    TwoFace tf{i, {}};
    for (const auto& v : wk.polygon) tf.cycle.push_back(vindex(v));
    std::rotate(tf.cycle.begin(), std::min_element(tf.cycle.begin(), tf.cycle.end()),
                tf.cycle.end());
    np.two_faces.push_back(std::move(tf));
  }

  for (const auto& [key, fs] : edge_facets) {
    if (fs.size() != 2) throw std::logic_error("build_polyhedron: edge not shared by two facets");
    Edge e{{vindex(key.a), vindex(key.b)}, {rank[fs[0]], rank[fs[1]]}};
    std::sort(e.vertices.begin(), e.vertices.end());
    std::sort(e.facets.begin(), e.facets.end());
    np.edges.push_back(e);
  }
  std::sort(np.edges.begin(), np.edges.end(), [](const Edge& l, const Edge& r) {
    return l.vertices < r.vertices;
  });
  return np;
}

std::vector<std::size_t> NewtonPolyhedron::compact_facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].compact) out.push_back(i);
  }
  return out;
}

const TwoFace& NewtonPolyhedron::two_face(std::size_t facet_id) const {
  for (const auto& tf : two_faces) {
    if (tf.facet == facet_id) return tf;
  }
  throw Error(ErrorKind::InvalidArgument,
              "facet " + std::to_string(facet_id) + " is not a compact 2-face");
}

std::vector<ExponentVector> NewtonPolyhedron::polygon(std::size_t facet_id) const {
  std::vector<ExponentVector> out;
  for (std::size_t v : two_face(facet_id).cycle) out.push_back(vertices[v]);
  return out;
}

bool NewtonPolyhedron::has_vertex(const ExponentVector& p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

std::int64_t NewtonPolyhedron::axis_intercept(std::size_t axis) const {
  for (const auto& v : vertices) {
    if (v[axis] > 0 && v[(axis + 1) % 3] == 0 && v[(axis + 2) % 3] == 0) return v[axis];
  }
  throw std::logic_error("axis_intercept: polyhedron is not convenient");
}

PointLocation classify_point(const NewtonPolyhedron& np, const ExponentVector& p) {
  if (!is_nonnegative(p)) {
    throw Error(ErrorKind::InvalidArgument, "classify_point needs p >= 0, got " + format(p));
  }
  std::size_t on_any = 0;
  std::size_t on_compact = 0;
  std::size_t last = PointLocation::npos;
  for (std::size_t i = 0; i < np.facets.size(); ++i) {
    const std::int64_t sl = np.facets[i].slack(p);
    if (sl < 0) return {PointClass::Below, PointLocation::npos};
    if (sl == 0) {
      ++on_any;
      if (np.facets[i].compact) {
        ++on_compact;
        last = i;
      }
    }
  }
  if (on_compact == 0) return {PointClass::Above, PointLocation::npos};
  if (on_any == 1) return {PointClass::OnTwoFaceInterior, last};
  return {PointClass::OnSkeleton, PointLocation::npos};
}

FaceLatticePoints facet_lattice_points(const NewtonPolyhedron& np, std::size_t facet_id) {
  const auto poly = np.polygon(facet_id);
  const Facet& f = np.facets[facet_id];
  std::int64_t x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
  for (const auto& v : poly) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  FaceLatticePoints out;
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      const std::int64_t rest = f.offset - f.normal.x * x - f.normal.y * y;
      if (rest < 0 || rest % f.normal.z != 0) continue;
      const IntVec3 p{x, y, rest / f.normal.z};
      bool inside = true;
      bool on_other = false;
      for (std::size_t j = 0; j < np.facets.size() && inside; ++j) {
        if (j == facet_id) continue;
        const std::int64_t sl = np.facets[j].slack(p);
        if (sl < 0) inside = false;
        if (sl == 0) on_other = true;
      }
      if (!inside) continue;
      (on_other ? out.boundary : out.interior).push_back(p);
    }
  }
  std::sort(out.boundary.begin(), out.boundary.end());
  std::sort(out.interior.begin(), out.interior.end());
  return out;
}

std::int64_t pick_triangle_count(const NewtonPolyhedron& np, std::size_t facet_id) {
  const auto pts = facet_lattice_points(np, facet_id);
  return 2 * static_cast<std::int64_t>(pts.interior.size()) +
         static_cast<std::int64_t>(pts.boundary.size()) - 2;
}

std::vector<LatticeTriangle> elementary_triangulate(const NewtonPolyhedron& np,
                                                    std::size_t facet_id) {
  const auto poly = np.polygon(facet_id);
  const IntVec3 n = np.facets[facet_id].normal;
  std::vector<LatticeTriangle> tris;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) tris.push_back({poly[0], poly[i], poly[i + 1]});

  const auto lattice = facet_lattice_points(np, facet_id);
  std::vector<IntVec3> extra;
  for (const auto* list : {&lattice.boundary, &lattice.interior}) {
    for (const auto& p : *list) {
      if (!std::binary_search(np.vertices.begin(), np.vertices.end(), p)) extra.push_back(p);
    }
  }
  // Insert each remaining lattice point, splitting every triangle that
  // contains it into the sub-triangles over edges not passing through it.
  for (const auto& p : extra) {
    std::vector<LatticeTriangle> next;
    next.reserve(tris.size() + 2);
    for (const auto& t : tris) {
      std::array<std::int64_t, 3> side{};
      bool inside = true;
      for (std::size_t e = 0; e < 3; ++e) {
        side[e] = dot(cross(t[(e + 1) % 3] - t[e], p - t[e]), n);
        if (side[e] < 0) inside = false;
      }
      if (!inside) {
        next.push_back(t);
        continue;
      }
      for (std::size_t e = 0; e < 3; ++e) {
        if (side[e] != 0) next.push_back({t[e], t[(e + 1) % 3], p});
      }
    }
    tris = std::move(next);
  }
  return tris;
}

}  // namespace ndsig
