#include <benchmark/benchmark.h>

#include <random>

#include "erythro/morphometry.hpp"
#include "erythro/pipeline.hpp"
#include "erythro/segmentation.hpp"
#include "erythro/synth.hpp"

using namespace erythro;

namespace {

ShapeSpec crescent() {
  ShapeSpec s;
  s.kind = ShapeKind::Crescent;
  s.radius = 30;
  s.bite_radius = 26;
  s.bite_offset = 12;
  return s;
}

void BM_Otsu(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> count(0, 5000);
  GrayHistogram h;
  for (auto& c : h.counts) {
    c = static_cast<std::uint64_t>(count(rng));
    h.total += c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(otsu_threshold(h));
}
BENCHMARK(BM_Otsu);

void BM_Label8(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  std::bernoulli_distribution on(0.45);
  BinaryMask m(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) m.set(x, y, on(rng));
  for (auto _ : state) benchmark::DoNotOptimize(label_components_8(m));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Label8)->Arg(32)->Arg(128)->Arg(512);

void BM_Morphometry(benchmark::State& state) {
  const auto report = analyze_roi(render_shape(crescent()), Roi{0, 0, 120, 120});
  for (auto _ : state) benchmark::DoNotOptimize(compute_morphometry(report.cell_mask));
}
BENCHMARK(BM_Morphometry);

void BM_AnalyzeRoi(benchmark::State& state) {
  const auto img = render_shape(crescent());
  for (auto _ : state) benchmark::DoNotOptimize(analyze_roi(img, Roi{0, 0, 120, 120}));
}
BENCHMARK(BM_AnalyzeRoi);

}  // namespace

BENCHMARK_MAIN();
