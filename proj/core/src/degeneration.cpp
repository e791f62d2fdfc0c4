#include "ndsig/degeneration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ndsig {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool inside(const NewtonPolyhedron& np, const IntVec3& p) {
  for (const auto& f : np.facets) {
    if (f.slack(p) < 0) return false;
  }
  return true;
}

// Lattice points of `outer` other than `a` that are missing from `inner`.
// Every such point lies below the diagram of `inner`, so the intercept box
// of `inner`, cut column by column, covers them.
std::vector<IntVec3> lattice_gap(const NewtonPolyhedron& outer, const NewtonPolyhedron& inner,
                                 const IntVec3& a) {
  std::vector<IntVec3> out;
  const auto compact = inner.compact_facets();
  const std::int64_t ix = inner.axis_intercept(0);
  const std::int64_t iy = inner.axis_intercept(1);
  for (std::int64_t x = 0; x <= ix; ++x) {
    for (std::int64_t y = 0; y <= iy; ++y) {
      std::int64_t zmax = -1;
      for (std::size_t f : compact) {
        const Facet& fc = inner.facets[f];
        zmax = std::max(zmax, floor_div(fc.offset - fc.normal.x * x - fc.normal.y * y,
                                        fc.normal.z));
      }
      for (std::int64_t z = 0; z <= zmax; ++z) {
        const IntVec3 p{x, y, z};
        if (p != a && !inside(inner, p) && inside(outer, p)) out.push_back(p);
      }
    }
  }
  return out;
}

[[noreturn]] void violated(const std::string& why) {
  throw Error(ErrorKind::AssumptionViolated, why);
}

}  // namespace

InvariantDeltas& InvariantDeltas::operator+=(const InvariantDeltas& o) {
  mu += o.mu;
  mu_zero += o.mu_zero;
  mu_plus += o.mu_plus;
  mu_minus += o.mu_minus;
  signature += o.signature;
  return *this;
}

InvariantDeltas difference(const SingularityInvariants& degenerate,
                           const SingularityInvariants& generic) {
  return {degenerate.mu - generic.mu, degenerate.mu_zero - generic.mu_zero,
          degenerate.mu_plus - generic.mu_plus, degenerate.mu_minus - generic.mu_minus,
          degenerate.signature - generic.signature};
}

DegenerationCounts DegenerationGeometry::counts() const {
  return {six_v, static_cast<std::int64_t>(new_points.size()),
          static_cast<std::int64_t>(inner_points.size()),
          static_cast<std::int64_t>(outer_points.size())};
}

DegenerationGeometry erase_vertex(const NewtonPolyhedron& np, const ExponentVector& a) {
  if (!is_positive(a)) {
    throw Error(ErrorKind::NotInteriorLatticePoint,
                format(a) + " has a zero coordinate; only points of Z^3_{>0} can be erased");
  }
  if (!np.has_vertex(a)) {
    throw Error(ErrorKind::NotAVertex, format(a) + " is not a vertex of the Newton diagram");
  }

  DegenerationGeometry g;
  g.erased = a;
  g.old_np = np;

  const Support rest = Support(np.vertices).without(a);
  const NewtonPolyhedron rest_np = build_polyhedron(rest);
  std::vector<ExponentVector> pts = rest.points();
  for (const auto& p : lattice_gap(np, rest_np, a)) pts.push_back(p);
  g.new_np = build_polyhedron(Support(std::move(pts)));
  const NewtonPolyhedron& nw = g.new_np;

  g.six_v = volumes(nw).six_vol3 - volumes(np).six_vol3;

  for (std::size_t f : nw.compact_facets()) {
    if (nw.facets[f].slack(a) < 0) g.new_facets.push_back(f);
  }
  if (g.new_facets.empty()) throw std::logic_error("erase_vertex: no facet cuts off the apex");
  auto is_new = [&](std::size_t f) {
    return std::binary_search(g.new_facets.begin(), g.new_facets.end(), f);
  };

  // Loop: edges between a new facet and any other facet.
  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::vector<std::array<std::size_t, 2>> loop_edges;
  for (const auto& e : nw.edges) {
    if (is_new(e.facets[0]) == is_new(e.facets[1])) continue;
    loop_edges.push_back(e.vertices);
    adj[e.vertices[0]].push_back(e.vertices[1]);
    adj[e.vertices[1]].push_back(e.vertices[0]);
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) violated("boundary of the new region is not a simple closed loop");
  }
  {
    const std::size_t start = adj.begin()->first;
    std::size_t prev = start;
    std::size_t cur = adj[start][0];
    g.loop.push_back(nw.vertices[start]);
    while (cur != start) {
      g.loop.push_back(nw.vertices[cur]);
      const auto& nb = adj[cur];
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (g.loop.size() != adj.size()) violated("boundary of the new region has several loops");
  }

  std::set<IntVec3> on_loop;
  for (const auto& v : g.loop) {
    g.outer_points.push_back(v);
    on_loop.insert(v);
  }
  for (const auto& e : loop_edges) {
    const auto seg = segment_lattice_points(nw.vertices[e[0]], nw.vertices[e[1]]);
    for (std::size_t i = 1; i + 1 < seg.size(); ++i) {
      g.inner_points.push_back(seg[i]);
      on_loop.insert(seg[i]);
    }
  }

  std::set<IntVec3> fresh;
  for (std::size_t f : g.new_facets) {
    const auto lp = facet_lattice_points(nw, f);
    g.collar_triangles += 2 * static_cast<std::int64_t>(lp.interior.size()) +
                          static_cast<std::int64_t>(lp.boundary.size()) - 2;
    for (const auto* list : {&lp.boundary, &lp.interior}) {
      for (const auto& p : *list) {
        if (!on_loop.contains(p)) fresh.insert(p);
      }
    }
  }
  for (const auto& p : fresh) {
    if (classify_point(nw, p).kind == PointClass::OnTwoFaceInterior) {
      violated("new point " + format(p) + " lies in the interior of a 2-face of C_new");
    }
  }
  for (const auto& p : fresh) {
    if (!is_positive(p)) violated("new point " + format(p) + " lies on a coordinate plane");
    for (const auto& f : np.facets) {
      if (f.slack(p) == 0) violated("new region meets the old boundary away from the loop at " + format(p));
    }
    g.new_points.push_back(p);
  }

  // The count formulas assume inner points sit inside faces of the cone at a and
  // outer points on its edges. Points on a coordinate plane never enter the counts.
  for (const auto& p : g.inner_points) {
    if (!is_positive(p)) violated("the loop runs along a coordinate plane at " + format(p));
    if (classify_point(np, p).kind != PointClass::OnTwoFaceInterior) {
      violated("inner point " + format(p) + " is not inside a 2-face of C");
    }
  }
  for (const auto& p : g.outer_points) {
    if (is_positive(p) && classify_point(np, p).kind != PointClass::OnSkeleton) {
      violated("outer point " + format(p) + " is not on an edge of C");
    }
  }

  std::sort(g.outer_points.begin(), g.outer_points.end());
  std::sort(g.inner_points.begin(), g.inner_points.end());
  return g;
}

Prediction predicted_deltas(const DegenerationCounts& c) {
  Prediction p;
  p.deltas.mu = c.six_v;
  p.deltas.mu_zero = -1 - c.n_inner + c.n_new;
  p.deltas.mu_plus = 1 + c.n_inner + c.n_new;
  p.deltas.mu_minus = c.six_v - 2 * c.n_new;
  p.deltas.signature = -c.six_v + c.n_inner + 3 * c.n_new + 1;
  p.delta = c.six_v - c.n_outer - c.n_inner - 2 * c.n_new + 2;
  p.signature_via_delta = 3 - p.delta - c.n_outer + c.n_new;
  if (p.signature_via_delta != p.deltas.signature) {
    throw std::logic_error("predicted_deltas: closed forms of the signature change disagree");
  }
  return p;
}

namespace {

DegenerationReport report_for(DegenerationGeometry g, const SingularityInvariants& before) {
  DegenerationReport r;
  const Support new_support(g.new_np.vertices);
  if (build_polyhedron(new_support) != g.new_np) {
    throw std::logic_error("verify_degeneration: vertex support does not rebuild C_new");
  }
  r.before = before;
  r.after = invariants_of_convenient(new_support);
  r.counts = g.counts();
  const Prediction p = predicted_deltas(r.counts);
  r.delta = p.delta;
  if (r.delta < 0) {
    throw Error(ErrorKind::LemmaViolation,
                "delta = " + std::to_string(r.delta) + " < 0 erasing " + format(g.erased));
  }
  r.predicted = p.deltas;
  r.direct = difference(r.after, r.before);
  r.consistent = r.predicted == r.direct;
  r.geometry = std::move(g);
  return r;
}

}  // namespace

DegenerationReport verify_degeneration(const Support& s_old, const ExponentVector& a,
                                       const AnalysisOptions& opts) {
  const Analysis old = analyze_support(s_old, opts);
  const NewtonPolyhedron np = build_polyhedron(old.support);
  return report_for(erase_vertex(np, a), old.invariants);
}

DegenerationAttempt attempt_degeneration(const Support& s_old, const ExponentVector& a,
                                         const AnalysisOptions& opts) {
  DegenerationAttempt out;
  try {
    out.report = verify_degeneration(s_old, a, opts);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::LemmaViolation) throw;
    out.error = e.kind();
    out.message = e.what();
  }
  return out;
}

ErasureChainReport verify_support_erasure(const Support& s_old, const ExponentVector& a,
                                          const AnalysisOptions& opts) {
  if (!is_positive(a)) {
    throw Error(ErrorKind::NotInteriorLatticePoint, format(a) + " has a zero coordinate");
  }
  if (!s_old.contains(a)) {
    throw Error(ErrorKind::NotAVertex, format(a) + " is not in the support");
  }
  const Analysis old = analyze_support(s_old, opts);
  AnalysisOptions same = opts;
  if (old.completion_n) same.completion = old.completion_n;
  const Analysis target = analyze_support(s_old.without(a), same);
  const NewtonPolyhedron target_np = build_polyhedron(target.support);

  ErasureChainReport out;
  out.erased = a;
  out.before = old.invariants;
  out.after = target.invariants;
  out.completion_n = old.completion_n;
  out.direct = difference(target.invariants, old.invariants);

  NewtonPolyhedron cur = build_polyhedron(old.support);
  if (cur == target_np) {
    throw Error(ErrorKind::NotAVertex, "dropping " + format(a) + " leaves the diagram unchanged");
  }
  SingularityInvariants cur_inv = old.invariants;
  while (cur != target_np) {
    std::vector<IntVec3> candidates;
    for (const auto& v : cur.vertices) {
      if (!inside(target_np, v)) candidates.push_back(v);
    }
    if (candidates.empty()) throw std::logic_error("verify_support_erasure: no vertex to erase");
    std::optional<DegenerationReport> step;
    std::string last_error;
    for (const auto& v : candidates) {
      try {
        step = report_for(erase_vertex(cur, v), cur_inv);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::AssumptionViolated) throw;
        last_error = e.what();
      }
    }
    if (!step) violated("no admissible vertex erasure: " + last_error);
    cur = step->geometry.new_np;
    cur_inv = step->after;
    out.predicted += step->predicted;
    out.steps.push_back(std::move(*step));
  }
  InvariantDeltas step_direct;
  for (const auto& s : out.steps) step_direct += s.direct;
  if (step_direct != out.direct) {
    throw std::logic_error("verify_support_erasure: step deltas do not telescope");
  }
  out.consistent = out.predicted == out.direct &&
                   std::all_of(out.steps.begin(), out.steps.end(),
                               [](const DegenerationReport& s) { return s.consistent; });
  return out;
}

}  // namespace ndsig
