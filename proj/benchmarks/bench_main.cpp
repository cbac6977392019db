#include <benchmark/benchmark.h>

#include "dcs/atlas.hpp"
#include "dcs/braid_words.hpp"
#include "dcs/invariants.hpp"
#include "dcs/path_engine.hpp"
#include "dcs/verify.hpp"

using namespace dcs;

static void BM_ProjDist(benchmark::State& st) {
  const HPoint p{-1, 1, 1}, q{-1, 1, 2};
  for (auto _ : st) benchmark::DoNotOptimize(proj_dist(p, q));
}
BENCHMARK(BM_ProjDist);

static void BM_ValidatePlanar(benchmark::State& st) {
  const Config6 d0 = planar_basepoint();
  const SpaceTag tag = SpaceTag::planar_fixed(2, HPoint{0, 0, 1});
  for (auto _ : st) benchmark::DoNotOptimize(validate(d0, tag));
}
BENCHMARK(BM_ValidatePlanar);

static void BM_ValidateSolid(benchmark::State& st) {
  const Config6 s = solid_basepoint();
  const SpaceTag tag = SpaceTag::solid(3);
  for (auto _ : st) benchmark::DoNotOptimize(validate(s, tag));
}
BENCHMARK(BM_ValidateSolid);

static void BM_ParseCompile(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Path("concat3(sigma,(alpha^-1*beta^-1)*gamma,sigma^-1)"));
}
BENCHMARK(BM_ParseCompile);

// loop windings with the adaptive tracker, initial sample count as the argument
static void BM_FiberWinding(benchmark::State& st) {
  const Path p("Psi_tilde");
  WindingOptions o;
  o.initial = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(fiber_winding_vector(p, o));
}
BENCHMARK(BM_FiberWinding)->Arg(128)->Arg(512)->Arg(2048);

static void BM_WindingRow(benchmark::State& st) {
  const Path p("(alpha^-1*beta^-1)*gamma");
  const auto ids = functional_ids();
  for (auto _ : st) benchmark::DoNotOptimize(winding_row(p, ids));
}
BENCHMARK(BM_WindingRow);

static void BM_PointwiseLoops(benchmark::State& st) {
  const Path a("L@0"), b("(alpha^-1*beta^-1)*gamma");
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(pointwise_eq(a, b, n));
  st.SetItemsProcessed(st.iterations() * n);
}
BENCHMARK(BM_PointwiseLoops)->Arg(512)->Arg(4096);

static void BM_SweepDisk(benchmark::State& st) {
  const Grid g;
  const SpaceTag tag = SpaceTag::planar_fixed(2, planar_center());
  for (auto _ : st) benchmark::DoNotOptimize(check_membership_sweep("Lambda_tilde", tag, g));
}
BENCHMARK(BM_SweepDisk)->Unit(benchmark::kMillisecond);

static void BM_SweepCylinder(benchmark::State& st) {
  const Grid g;
  const SpaceTag tag = *Atlas::instance().item("L").space;
  for (auto _ : st) benchmark::DoNotOptimize(check_membership_sweep("L", tag, g));
}
BENCHMARK(BM_SweepCylinder)->Unit(benchmark::kMillisecond);

static void BM_ArtinFullTwist(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const BraidWord d = garside_Dk(k);
  for (auto _ : st) benchmark::DoNotOptimize(artin_images(d, k));
}
BENCHMARK(BM_ArtinFullTwist)->DenseRange(3, 8);

static void BM_YB4(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_yb4(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_YB4)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& st) {
  const IntMatrix m = {{0, -1, 1}, {-1, 0, 1}, {1, 1, 2}};
  for (auto _ : st) benchmark::DoNotOptimize(quotient_invariants(m, 3));
}
BENCHMARK(BM_SmithNormalForm);

static void BM_VerifyClaim(benchmark::State& st) {
  Claim c;
  for (const auto& x : Atlas::instance().claims()) {
    if (x.id == "C6.2") c = x;
  }
  VerifyOptions o;
  o.stability = false;
  for (auto _ : st) benchmark::DoNotOptimize(verify_claim(c, o));
}
BENCHMARK(BM_VerifyClaim)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
