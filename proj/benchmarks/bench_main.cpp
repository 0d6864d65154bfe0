#include <benchmark/benchmark.h>

#include "hornlab/facet_probe.hpp"
#include "hornlab/littlewood_richardson.hpp"
#include "hornlab/lp.hpp"
#include "hornlab/scanner.hpp"
#include "hornlab/symmetry.hpp"

using namespace hornlab;

namespace {

const QIndex& t0() {
  static const QIndex t = parse_qindex("6 9 ; 6,6,3,3,0,0 ; 6,6,3,3,0,0 ; 6,6,6,3,0,0 ; 1");
  return t;
}

void BM_ClassicalProduct(benchmark::State& state) {
  const std::vector<int> a{6, 6, 3, 3}, b{5, 4, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(classical_product(a, b, 6));
}
BENCHMARK(BM_ClassicalProduct);

void BM_QuantumProductUncached(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0)), k = r + 3;
  const auto parts = enumerate_partitions(r, k);
  const auto& a = parts[parts.size() / 2];
  const auto& b = parts[parts.size() / 3];
  for (auto _ : state) benchmark::DoNotOptimize(compute_quantum_product(a, b));
}
BENCHMARK(BM_QuantumProductUncached)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_QuantumLrDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quantum_lr(t0()));
}
BENCHMARK(BM_QuantumLrDirect);

void BM_OrbitG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit(t0(), Group::G));
}
BENCHMARK(BM_OrbitG);

void BM_CanonicalRepGTilde(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical_rep(t0(), Group::GTilde));
}
BENCHMARK(BM_CanonicalRepGTilde);

void BM_ReductionScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto strata = scan_strata(n);
  for (auto _ : state) benchmark::DoNotOptimize(reduction_check(n, strata));
}
BENCHMARK(BM_ReductionScan)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LpAlcoveFacets(benchmark::State& state) {
  // Minimize one facet over the alcove and every degree-zero facet at n.
  const int n = static_cast<int>(state.range(0));
  LPProblem p;
  p.num_vars = 3 * n;
  p.constraints = alcove_constraints(n);
  auto stream = scan_coefficient_one(n, all_strata(n));
  std::optional<QIndex> last;
  while (auto t = stream.next()) {
    p.constraints.rows.push_back({RowKind::Ge, halfspace_form(*t), {}});
    last = t;
  }
  p.objective = halfspace_form(*last);
  for (auto _ : state) benchmark::DoNotOptimize(solve(p));
}
BENCHMARK(BM_LpAlcoveFacets)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ImplicitMembershipDelta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = origin_triple(n);
  for (auto _ : state) benchmark::DoNotOptimize(implicit_membership(p, SystemMode::Delta));
}
BENCHMARK(BM_ImplicitMembershipDelta)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
