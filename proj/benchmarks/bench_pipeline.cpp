// Pipeline stages on the MG-scale fixture, plus layout at 16, 100 and 400 classes.
#include <codepark/scene.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace codepark;

namespace {

const Codebase& mg() {
  static const Codebase cb = load_codebase(std::filesystem::path(CODEPARK_FIXTURE_DIR) / "mg");
  return cb;
}

const Analysis& mg_analysis() {
  static const auto a = analyze(load_codebase(std::filesystem::path(CODEPARK_FIXTURE_DIR) / "mg"));
  return *a;
}

std::size_t mg_bytes() {
  std::size_t n = 0;
  for (const auto& u : mg().units) n += u.text.size();
  return n;
}

void BM_Tokenize(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& u : mg().units) benchmark::DoNotOptimize(tokenize(u));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * mg_bytes()));
}
BENCHMARK(BM_Tokenize);

void BM_ClassifyLines(benchmark::State& state) {
  const auto& a = mg_analysis();
  for (auto _ : state) {
    for (const auto& u : a.codebase.units) benchmark::DoNotOptimize(classify_lines(u, a.tokens[u.file_id]));
  }
}
BENCHMARK(BM_ClassifyLines);

void BM_Analyze(benchmark::State& state) {
  for (auto _ : state) {
    Codebase copy = mg();
    benchmark::DoNotOptimize(analyze(std::move(copy)));
  }
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_BuildScene(benchmark::State& state) {
  const auto& a = mg_analysis();
  for (auto _ : state) benchmark::DoNotOptimize(build_scene(a));
}
BENCHMARK(BM_BuildScene)->Unit(benchmark::kMillisecond);

void BM_Serialize(benchmark::State& state) {
  const Scene scene = build_scene(mg_analysis());
  std::size_t bytes = 0;
  for (auto _ : state) {
    auto s = serialize(scene);
    bytes = s.size();
    benchmark::DoNotOptimize(s);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_Serialize)->Unit(benchmark::kMillisecond);

void BM_LayoutPark(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> loc(1, 800), dir(0, 7);
  std::vector<RoomInput> rooms;
  for (int64_t k = 0; k < state.range(0); ++k) {
    rooms.push_back({"c" + std::to_string(k), "C" + std::to_string(k), "d" + std::to_string(dir(rng)), loc(rng)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(layout_park(rooms));
}
BENCHMARK(BM_LayoutPark)->Arg(16)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
