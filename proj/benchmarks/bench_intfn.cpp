#include <benchmark/benchmark.h>

#include <sstream>

#include "intfn/calculus.hpp"
#include "intfn/curves.hpp"
#include "intfn/io.hpp"
#include "intfn/render.hpp"

namespace {

using namespace intfn;

void BM_PiBounds(benchmark::State& state) {
  const auto x0 = state.range(0);
  for (auto _ : state) {
    auto r = pi_bounds(x0);
    benchmark::DoNotOptimize(r.i);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pi_bounds(x0).steps));
}
BENCHMARK(BM_PiBounds)->Arg(10000)->Arg(10000000)->Arg(1000000000000)->Unit(benchmark::kMillisecond);

void BM_GenerateHarmonic(benchmark::State& state) {
  const auto config = harmonic_motion(state.range(0));
  for (auto _ : state) {
    auto run = generate(config);
    benchmark::DoNotOptimize(run.function.length());
  }
}
BENCHMARK(BM_GenerateHarmonic)->Arg(1000)->Arg(100000);

void BM_DifferenceField(benchmark::State& state) {
  const auto f = generate(harmonic_motion(100000)).function;
  for (auto _ : state) {
    auto field = difference_field(f, Axis::I, state.range(0));
    benchmark::DoNotOptimize(field.entries.data());
  }
}
BENCHMARK(BM_DifferenceField)->Arg(1)->Arg(16)->Arg(256);

void BM_TraceRoundTrip(benchmark::State& state) {
  const auto trace = generate(harmonic_motion(state.range(0))).trace;
  for (auto _ : state) {
    std::stringstream buf;
    write_trace(buf, trace);
    auto back = read_trace(buf);
    benchmark::DoNotOptimize(back.records.size());
  }
}
BENCHMARK(BM_TraceRoundTrip)->Arg(1000);

void BM_RenderPbm(benchmark::State& state) {
  const auto f = composite_generate(egg_config()).function;
  const auto v = bounding_viewport(f);
  for (auto _ : state) benchmark::DoNotOptimize(render_pbm(f, v));
}
BENCHMARK(BM_RenderPbm);

}  // namespace

BENCHMARK_MAIN();
