#include "helpers.hpp"
#include "ndsig/degeneration.hpp"
#include "oracles.hpp"

using namespace ndsig;

namespace {
const char* kExample1 = "t*x*y*z + x^2*y*z + x*y^2*z + x*y*z^2 + x^4*y + y^4*z + z^4*x";

std::string family(int k) {
  return "t*x*y*z + x^" + std::to_string(3 * k + 3) + "*y + x^" + std::to_string(k + 1) +
         "*y*z + z^2*x + y^2*z";
}

InvariantDeltas d(std::int64_t mu, std::int64_t mu0, std::int64_t mup, std::int64_t mum, std::int64_t s) {
  return {mu, mu0, mup, mum, s};
}
}  // namespace

TEST_CASE("erase_vertex: example1 geometry") {
  const Analysis an = analyze_support(oracle::support(kExample1, {{"t", Rational(1)}}));
  const DegenerationGeometry g = erase_vertex(build_polyhedron(an.support), {1, 1, 1});
  CHECK(g.new_points == std::vector<IntVec3>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(g.inner_points.empty());
  CHECK(g.outer_points == std::vector<IntVec3>{{0, 4, 1}, {1, 0, 4}, {4, 1, 0}});
  CHECK(g.loop.size() == 3);
  CHECK(g.six_v == 7);
  CHECK(g.collar_triangles == 7);
  CHECK(g.counts() == DegenerationCounts{7, 3, 0, 3});
}

TEST_CASE("erase_vertex: rejected inputs") {
  CHECK_ERROR_KIND(erase_vertex(build_polyhedron(oracle::support("x*y*z+x^4+y^4+z^4")), {1, 1, 1}),
                   ErrorKind::AssumptionViolated);
  CHECK_ERROR_KIND(erase_vertex(build_polyhedron(oracle::support("x*y*z+x^3+y^3+z^3")), {1, 1, 1}),
                   ErrorKind::NotAVertex);
  CHECK_ERROR_KIND(erase_vertex(build_polyhedron(oracle::support("x*y*z+x^3+y^3+z^3")), {3, 0, 0}),
                   ErrorKind::NotInteriorLatticePoint);
  // The collar of this erasure runs along the plane x = 0.
  CHECK_ERROR_KIND(erase_vertex(build_polyhedron(Support({{0, 0, 3}, {0, 3, 0}, {1, 1, 1}, {4, 0, 0}})), {1, 1, 1}),
                   ErrorKind::AssumptionViolated);
}

TEST_CASE("predicted deltas") {
  const Prediction ex1 = predicted_deltas({7, 3, 0, 3});
  CHECK(ex1.deltas == d(7, 2, 4, 1, 3));
  CHECK(ex1.delta == 0);
  for (int k = 1; k <= 6; ++k) {
    const Prediction p = predicted_deltas({3 * k, k, k - 1, 3});
    CHECK(p.deltas == d(3 * k, 0, 2 * k, k, k));
    CHECK(p.signature_via_delta == k);
  }
  CHECK(predicted_deltas({1, 0, 0, 3}).deltas.signature == 0);
}

TEST_CASE("verify_degeneration: example1") {
  const DegenerationReport r = verify_degeneration(oracle::support(kExample1, {{"t", Rational(1)}}), {1, 1, 1});
  CHECK(r.consistent);
  CHECK(r.direct == d(7, 2, 4, 1, 3));
  CHECK(r.predicted == r.direct);
  CHECK(r.delta == 0);
  CHECK(r.before.mu == 38);
  CHECK(r.after.mu == 45);
}

TEST_CASE("verify_degeneration: family, single primitive step") {
  for (int k = 1; k <= 5; ++k) {
    const DegenerationReport r = verify_degeneration(oracle::support(family(k), {{"t", Rational(1)}}), {1, 1, 1});
    CHECK(r.consistent);
    CHECK(r.direct == d(3, 0, 2, 1, 1));
  }
}

TEST_CASE("verify_support_erasure: family drops xyz in k primitive steps") {
  for (int k = 1; k <= 6; ++k) {
    const ErasureChainReport c = verify_support_erasure(oracle::support(family(k), {{"t", Rational(1)}}), {1, 1, 1});
    CAPTURE(k);
    CHECK(c.consistent);
    CHECK(c.steps.size() == static_cast<std::size_t>(k));
    CHECK(c.direct == d(3 * k, 0, 2 * k, k, k));
    CHECK(c.predicted == c.direct);
    CHECK(c.before.mu == 9 * k + 11);
    CHECK(c.after.mu == 12 * k + 11);
    CHECK(c.after.signature == -8 * k - 8);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      CHECK(c.steps[i].consistent);
      CHECK(c.steps[i].geometry.erased == IntVec3{static_cast<std::int64_t>(i) + 1, 1, 1});
    }
  }
}

TEST_CASE("verify_support_erasure: example1 is one step") {
  const ErasureChainReport c = verify_support_erasure(oracle::support(kExample1, {{"t", Rational(1)}}), {1, 1, 1});
  CHECK(c.steps.size() == 1);
  CHECK(c.direct == d(7, 2, 4, 1, 3));
  CHECK(c.completion_n == 13);
  CHECK_ERROR_KIND(verify_support_erasure(oracle::support("x*y*z+x^3+y^3+z^3"), {1, 1, 1}), ErrorKind::NotAVertex);
  CHECK_ERROR_KIND(verify_support_erasure(oracle::support("x*y*z+x^3+y^3+z^3"), {2, 2, 2}), ErrorKind::NotAVertex);
  CHECK_ERROR_KIND(verify_support_erasure(oracle::support("x*y*z+x^3+y^3+z^3"), {0, 0, 3}),
                   ErrorKind::NotInteriorLatticePoint);
}

TEST_CASE("attempt_degeneration captures the error") {
  const DegenerationAttempt a = attempt_degeneration(oracle::support("x*y*z+x^4+y^4+z^4"), {1, 1, 1});
  CHECK_FALSE(a.report.has_value());
  REQUIRE(a.error.has_value());
  CHECK(*a.error == ErrorKind::AssumptionViolated);
  CHECK_FALSE(a.message.empty());
}

TEST_CASE("deltas arithmetic") {
  InvariantDeltas x = d(1, 2, 3, 4, 5);
  x += d(1, 1, 1, 1, 1);
  CHECK(x == d(2, 3, 4, 5, 6));
  SingularityInvariants a, b;
  a.mu = 45;
  a.signature = -32;
  b.mu = 38;
  b.signature = -35;
  CHECK(difference(a, b).mu == 7);
  CHECK(difference(a, b).signature == 3);
}
