#include <benchmark/benchmark.h>

#include <string>

#include "koyal/normaliser.hpp"
#include "koyal/romaniser.hpp"
#include "koyal/router.hpp"
#include "koyal/script.hpp"
#include "koyal/translit.hpp"

namespace {

const std::string kCodeMixed =
    "మా CEO ఈ quarter కి మంచి presentation ఇచ్చారు";

std::string long_paragraph() {
  std::string text;
  for (int i = 0; i < 64; ++i) {
    text += "నేను ఇవాళ బాగున్నాను మరియు మంచి presentation ఇచ్చాను 42 సార్లు. ";
  }
  return text;
}

void BM_Segment(benchmark::State& state) {
  const std::string text = long_paragraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(koyal::segment(text));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_Segment);

void BM_Bups(benchmark::State& state) {
  const std::string text = long_paragraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(koyal::bups(text));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_Bups);

void BM_BupsWorkedExample(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(koyal::bups(kCodeMixed));
  }
}
BENCHMARK(BM_BupsWorkedExample);

void BM_Normalise(benchmark::State& state) {
  const std::string text = "₹1,00,000 మరియు 26/01/1950 నాడు 3.14% వడ్డీ";
  for (auto _ : state) {
    benchmark::DoNotOptimize(koyal::normalise(text, koyal::Lang::Te));
  }
}
BENCHMARK(BM_Normalise);

void BM_DetectCodemix(benchmark::State& state) {
  const std::string text = long_paragraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(koyal::detect_codemix(text));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_DetectCodemix);

void BM_CacheKey(benchmark::State& state) {
  const std::string text = long_paragraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(koyal::cache_key(text));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_CacheKey);

void BM_BuildPlan(benchmark::State& state) {
  koyal::TranslitCache cache;
  koyal::DictionaryProvider provider;
  const auto deps = koyal::default_planner_deps(cache, provider);
  koyal::PlanOptions opts;
  opts.lang = koyal::Lang::Te;
  opts.strict = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        koyal::build_plan("నేను ఇవాళ బాగున్నాను", opts, deps));
  }
}
BENCHMARK(BM_BuildPlan);

}  // namespace

BENCHMARK_MAIN();
