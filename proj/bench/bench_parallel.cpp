// Serial reference versus OpenMP kernels. The two variants return identical
// results; only wall time differs.

#include <benchmark/benchmark.h>

#include "satake/cartan.hpp"
#include "satake/decoration.hpp"
#include "satake/parallel.hpp"
#include "satake/weyl.hpp"

using namespace satake;

namespace {

const char* const kGroups[] = {"B4", "D5", "F4", "A6", "E6"};
const char* const kDiagrams[] = {"A7", "D6", "E6", "A~6", "D~6"};

void BM_WeylBFS(benchmark::State& st) {
  CartanMatrix a = cartan_from_name(kGroups[st.range(0)]);
  bool parallel = st.range(1) != 0;
  std::size_t order = 0;
  for (auto _ : st) {
    order = enumerate_weyl_group(a, 2000000, parallel).size();
    benchmark::DoNotOptimize(order);
  }
  st.SetLabel(std::string(kGroups[st.range(0)]) + (parallel ? " parallel" : " serial"));
  st.counters["order"] = static_cast<double>(order);
  st.counters["threads"] = parallel ? worker_count() : 1;
}

void BM_Enumerate(benchmark::State& st) {
  CartanPtr a = share(cartan_from_name(kDiagrams[st.range(0)]));
  bool parallel = st.range(1) != 0;
  std::size_t count = 0;
  for (auto _ : st) {
    count = enumerate(a, Filter::GSat, 12, parallel).size();
    benchmark::DoNotOptimize(count);
  }
  st.SetLabel(std::string(kDiagrams[st.range(0)]) + (parallel ? " parallel" : " serial"));
  st.counters["decorations"] = static_cast<double>(count);
  st.counters["threads"] = parallel ? worker_count() : 1;
}

}  // namespace

BENCHMARK(BM_WeylBFS)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
