#include <benchmark/benchmark.h>

#include "nilgrade/checks.hpp"
#include "nilgrade/corpus.hpp"
#include "nilgrade/nilclean.hpp"
#include "nilgrade/search.hpp"

using namespace nilgrade;

namespace {

RingSpec fixture(const char* name) { return load_ring_spec(std::string(NILGRADE_CORPUS_DIR) + "/" + name + ".json"); }

// Fresh grading each iteration so the m-potent caches start cold.
void BM_graded_decision(benchmark::State& state, const char* name) {
  const auto spec = fixture(name);
  for (auto _ : state) {
    state.PauseTiming();
    const auto g = load_ring_spec(std::string(NILGRADE_CORPUS_DIR) + "/" + name + ".json").grading;
    state.ResumeTiming();
    benchmark::DoNotOptimize(is_graded_m_nil_clean_ring(g, spec.m, false));
  }
}
BENCHMARK_CAPTURE(BM_graded_decision, t2_gf3_c2_m3, "t2_gf3_c2_m3");
BENCHMARK_CAPTURE(BM_graded_decision, t3_gf3_c3_m3, "t3_gf3_c3_m3");
BENCHMARK_CAPTURE(BM_graded_decision, t2_over_t2_z2, "t2_over_t2_z2");

void BM_graded_jacobson(benchmark::State& state, const char* name) {
  const auto spec = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(graded_jacobson_radical(spec.grading));
}
BENCHMARK_CAPTURE(BM_graded_jacobson, t2_gf4_c2_m4, "t2_gf4_c2_m4");
BENCHMARK_CAPTURE(BM_graded_jacobson, m2_z3_c2, "m2_z3_c2");

void BM_triangular_build(benchmark::State& state) {
  const auto base = fixture("z4_trivial").grading;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(triangular_graded(base, n, SigmaVector(n, Degree{0})));
}
BENCHMARK(BM_triangular_build)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_corpus(benchmark::State& state) {
  const auto files = corpus_files(NILGRADE_CORPUS_DIR);
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(files, {}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_search(kAllForwardTarget, 50, 3, {}, 1));
}
BENCHMARK(BM_search)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
