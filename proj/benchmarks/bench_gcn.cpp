#include <benchmark/benchmark.h>

#include "gcn/constructors.hpp"
#include "gcn/gcset.hpp"
#include "gcn/poly.hpp"
#include "gcn/usage.hpp"
#include "gcn/verify.hpp"

using namespace gcn;

namespace {

Family family_arg(const benchmark::State& st) { return static_cast<Family>(st.range(0)); }
unsigned degree_arg(const benchmark::State& st) { return static_cast<unsigned>(st.range(1)); }

void family_args(benchmark::internal::Benchmark* b) {
  for (int f = 0; f < 5; ++f) {
    for (int n = 3; n <= 6; ++n) {
      if (static_cast<Family>(f) == Family::DefectThree && n < 4) continue;
      b->Args({f, n});
    }
  }
}

void BM_Generate(benchmark::State& st) {
  const Family f = family_arg(st);
  const unsigned n = degree_arg(st);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(generate(f, n, seed++));
  st.SetLabel(std::string(family_name(f)));
}
BENCHMARK(BM_Generate)->Apply(family_args)->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& st) {
  const NodeSet X = chung_yao(static_cast<unsigned>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(correctness_determinant(X));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_LagrangeBasis(benchmark::State& st) {
  const unsigned n = static_cast<unsigned>(st.range(0));
  const NodeSet X = chung_yao(n, 1);
  for (auto _ : st) benchmark::DoNotOptimize(lagrange_basis(n, X.nodes()));
}
BENCHMARK(BM_LagrangeBasis)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

void BM_IsGc(benchmark::State& st) {
  const NodeSet X = generate(family_arg(st), degree_arg(st), 1).nodes;
  for (auto _ : st) {
    GcContext ctx(X);
    benchmark::DoNotOptimize(ctx.is_gc());
  }
  st.SetLabel(std::string(family_name(family_arg(st))));
}
BENCHMARK(BM_IsGc)->Apply(family_args)->Unit(benchmark::kMillisecond);

void BM_AllLineReports(benchmark::State& st) {
  const GcContext ctx(generate(family_arg(st), degree_arg(st), 1).nodes);
  ctx.is_gc();
  for (auto _ : st) benchmark::DoNotOptimize(all_line_reports(ctx));
  st.counters["lines"] = static_cast<double>(ctx.arrangement().lines().size());
  st.SetLabel(std::string(family_name(family_arg(st))));
}
BENCHMARK(BM_AllLineReports)->Apply(family_args)->Unit(benchmark::kMillisecond);

void BM_VerifyBattery(benchmark::State& st) {
  const FamilyInstance inst = generate(family_arg(st), degree_arg(st), 1);
  for (auto _ : st) benchmark::DoNotOptimize(verify_instance(inst));
  st.SetLabel(std::string(family_name(family_arg(st))));
}
BENCHMARK(BM_VerifyBattery)->Apply(family_args)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
