#include <benchmark/benchmark.h>

#include <string>

#include "ndsig/degeneration.hpp"
#include "ndsig/poly_parser.hpp"
#include "ndsig/search.hpp"

using namespace ndsig;

namespace {

Support tpqr(std::int64_t p, std::int64_t q, std::int64_t r) {
  return Support({{1, 1, 1}, {p, 0, 0}, {0, q, 0}, {0, 0, r}});
}

Support family(std::int64_t k) {
  const std::string poly = "x*y*z + x^" + std::to_string(3 * k + 3) + "*y + x^" + std::to_string(k + 1) +
                           "*y*z + z^2*x + y^2*z";
  return support_of(parse_polynomial(poly));
}

void BM_BuildPolyhedron(benchmark::State& st) {
  const Support s = convenient_completion(family(st.range(0)), default_completion_exponent(family(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(build_polyhedron(s));
}
BENCHMARK(BM_BuildPolyhedron)->Arg(1)->Arg(6)->Arg(20);

void BM_SignatureTriple(benchmark::State& st) {
  const Support s = tpqr(st.range(0), st.range(0) + 1, st.range(0) + 2);
  for (auto _ : st) benchmark::DoNotOptimize(signature_triple(s));
}
BENCHMARK(BM_SignatureTriple)->Arg(4)->Arg(12)->Arg(40);

void BM_FamilyErasureChain(benchmark::State& st) {
  const Support s = family(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(verify_support_erasure(s, {1, 1, 1}));
}
BENCHMARK(BM_FamilyErasureChain)->Arg(1)->Arg(6);

void BM_RandomHunt(benchmark::State& st) {
  FamilySpec f;
  f.mode = SearchMode::Random;
  f.box = 4;
  f.max_points = 6;
  f.count = st.range(0);
  f.seed = 7;
  f.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(hunt(f));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_RandomHunt)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
