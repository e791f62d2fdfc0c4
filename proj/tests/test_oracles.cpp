#include "helpers.hpp"
#include "ndsig/invariants.hpp"
#include "oracles.hpp"

using namespace ndsig;

TEST_CASE("oracle: hull vs brute-force triples") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 400; ++i) {
    const Support s = oracle::random_convenient(rng, 5, 8, 8);
    CAPTURE(s.points());
    CHECK(oracle::check_hull(s).empty());
  }
}

TEST_CASE("oracle: classification vs full box scan") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const Support s = oracle::random_convenient(rng, 5, 8, 8);
    CAPTURE(s.points());
    CHECK(oracle::check_classification(s).empty());
  }
}

TEST_CASE("oracle: Pick counts vs elementary triangulations") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Support s = oracle::random_convenient(rng, 5, 8, 8);
    CAPTURE(s.points());
    CHECK(oracle::check_pick(s).empty());
  }
}

TEST_CASE("oracle: volume as cones over faces") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Support s = oracle::random_convenient(rng, 4, 8, 10);
    const NewtonPolyhedron np = build_polyhedron(s);
    CHECK(volumes(np).six_vol3 == oracle::six_vol3(np));
  }
}

TEST_CASE("oracle: diagonal germs") {
  for (int a = 2; a <= 7; ++a)
    for (int b = 2; b <= 7; ++b)
      for (int c = 2; c <= 7; ++c) {
        const Support s({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
        CHECK(milnor_number(s) == oracle::diagonal_mu(a, b, c));
      }
}

TEST_CASE("oracle: classify_point vs facet inequalities") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> c(0, 9);
  for (int i = 0; i < 100; ++i) {
    const Support s = oracle::random_convenient(rng, 4, 6, 8);
    const NewtonPolyhedron np = build_polyhedron(s);
    const auto facets = oracle::all_facets(s);
    for (int j = 0; j < 30; ++j) {
      const IntVec3 p{c(rng), c(rng), c(rng)};
      bool below = false;
      int tight = 0, tight_compact = 0;
      for (const auto& f : facets) {
        if (dot(f.normal, p) < f.offset) below = true;
        if (dot(f.normal, p) != f.offset) continue;
        ++tight;
        tight_compact += f.offset > 0;
      }
      // Points on a coordinate wall count as skeleton when they touch a compact face.
      const PointClass want = below ? PointClass::Below
                              : tight_compact == 0 ? PointClass::Above
                              : tight == 1 ? PointClass::OnTwoFaceInterior
                                           : PointClass::OnSkeleton;
      CAPTURE(p);
      CHECK(classify_point(np, p).kind == want);
    }
  }
}
