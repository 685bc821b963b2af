// Serial reference kernels against their OpenMP versions.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "posetforge/families.hpp"
#include "posetforge/kernels.hpp"
#include "posetforge/moebius.hpp"
#include "posetforge/transversal.hpp"

using namespace posetforge;

namespace {

// Arguments index this list.
Poset sample(int which) {
  switch (which) {
    case 0: return tamari(6);             // 132 elements
    case 1: return partition_lattice(5);  // 52
    case 2: return boolean_lattice(8);    // 256
    default: return tamari(7);            // 429
  }
}

std::vector<std::vector<int>> upper_lists(const Poset& p) {
  std::vector<std::vector<int>> up(p.size());
  for (int x = 0; x < p.size(); ++x) up[x] = p.upper_covers(x);
  return up;
}

template <auto Kernel>
void closure(benchmark::State& state) {
  const Poset p = sample(static_cast<int>(state.range(0)));
  const auto up = upper_lists(p);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(up, p.linear_extension()));
  state.SetLabel(std::to_string(p.size()) + " elements");
}

template <auto Kernel>
void moebius_all(benchmark::State& state) {
  const Poset p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p));
  state.SetLabel(std::to_string(p.size()) + " elements");
}

template <auto Kernel>
void join_table(benchmark::State& state) {
  const Poset p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p));
  state.SetLabel(std::to_string(p.size()) + " elements");
}

template <auto Kernel>
void join_rule(benchmark::State& state) {
  const Poset l = state.range(0) == 0 ? partition_lattice(4) : boolean_lattice(4);
  const auto sys = join_system(l, singleton_blocks(l));
  const auto table = kernels::serial::join_table(l);
  std::vector<std::vector<int>> tops;
  for (const auto& t : sys.space().trees()) tops.push_back(t.top);
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(sys.space(), tops, table, l.size(), l.zero()));
  state.SetLabel(std::to_string(*sys.space().size()) + " tuples");
}

}  // namespace

BENCHMARK(closure<kernels::serial::closure>)->DenseRange(0, 3);
BENCHMARK(closure<kernels::omp::closure>)->DenseRange(0, 3);
BENCHMARK(moebius_all<kernels::serial::moebius>)->DenseRange(0, 3);
BENCHMARK(moebius_all<kernels::omp::moebius>)->DenseRange(0, 3);
BENCHMARK(join_table<kernels::serial::join_table>)->DenseRange(0, 3);
BENCHMARK(join_table<kernels::omp::join_table>)->DenseRange(0, 3);
BENCHMARK(join_rule<kernels::serial::evaluate_join_rule>)->DenseRange(0, 1);
BENCHMARK(join_rule<kernels::omp::evaluate_join_rule>)->DenseRange(0, 1);

BENCHMARK_MAIN();
