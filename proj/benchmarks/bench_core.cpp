#include <benchmark/benchmark.h>

#include <paff/distortion.hpp>

#include <random>
#include <vector>

#include "../tests/generators.hpp"

namespace {

using namespace paff;

const QuadIrr kAlpha = QuadIrr::sqrt2_minus_1();

void BM_Sign(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<AlphaVal> xs;
  for (int i = 0; i < 256; ++i)
    xs.emplace_back(paff::testing::random_fraction(rng, 1000),
                    paff::testing::random_fraction(rng, 1000));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sign(xs[i++ & 255], kAlpha));
  }
}
BENCHMARK(BM_Sign);

void BM_FloorFrac(benchmark::State& state) {
  AlphaVal x = AlphaVal::alpha_times(Rational(33461 * 6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(floor_frac(x, kAlpha));
  }
}
BENCHMARK(BM_FloorFrac);

void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  PAHomeo f = paff::testing::random_map(rng, kAlpha, 8);
  PAHomeo g = paff::testing::random_map(rng, kAlpha, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(f, g, kAlpha));
  }
}
BENCHMARK(BM_Compose);

void BM_Inverse(benchmark::State& state) {
  std::mt19937_64 rng(3);
  PAHomeo f = paff::testing::random_map(rng, kAlpha, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(f, kAlpha));
  }
}
BENCHMARK(BM_Inverse);

void BM_EvaluateHWord(benchmark::State& state) {
  RotationWordCtx ctx(AlphaVal::alpha_times(1), make_rational(9, 10), 21,
                      RotationWordCtx::Names{"T_alpha", "h", "r"}, kAlpha);
  Assignment env;
  ctx.add_to(env);
  Word w = ctx.h_word(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(w, env, kAlpha));
  }
  state.SetLabel(std::to_string(word_length(w)) + " letters");
}
BENCHMARK(BM_EvaluateHWord)->Arg(64)->Arg(1024)->Arg(32768);

void BM_DistortionRow(benchmark::State& state) {
  GenSet gs(kAlpha);
  const long long n = 985;
  for (auto _ : state) {
    Word w = distortion_word(n, gs);
    bool ok = verify_distortion_word(n, w, gs);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_DistortionRow)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
