// Serial reference kernels against their OpenMP counterparts.
#include "mzv/blocklie.hpp"
#include "mzv/identities.hpp"
#include "mzv/verify.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

namespace {

std::vector<mzv::SignedIndex> batch() {
  std::vector<mzv::SignedIndex> xs;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) xs.push_back(mzv::index_2242(a, b));
  for (int k = 2; k <= 8; ++k) xs.push_back(mzv::idx({-k, -k}));
  return xs;
}

std::vector<mzv::Job> jobs() {
  std::vector<mzv::Job> js;
  for (const char* id : {"zeta-2242", "dihedral-even", "galois-evbar"}) {
    auto j = mzv::expand_jobs(id, {});
    js.insert(js.end(), j.begin(), j.end());
  }
  return js;
}

void BM_EvalBatchSerial(benchmark::State& st) {
  const auto xs = batch();
  for (auto _ : st) benchmark::DoNotOptimize(mzv::eval_batch_serial(xs, static_cast<int>(st.range(0))));
}
void BM_EvalBatchParallel(benchmark::State& st) {
  const auto xs = batch();
  const int threads = omp_get_max_threads();
  for (auto _ : st) benchmark::DoNotOptimize(mzv::eval_batch_parallel(xs, static_cast<int>(st.range(0)), threads));
}
BENCHMARK(BM_EvalBatchSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvalBatchParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_VerifySerial(benchmark::State& st) {
  const auto js = jobs();
  mzv::VerifyOptions opt;
  for (auto _ : st) benchmark::DoNotOptimize(mzv::run_jobs_serial(js, opt));
}
void BM_VerifyParallel(benchmark::State& st) {
  const auto js = jobs();
  mzv::VerifyOptions opt;
  opt.jobs = omp_get_max_threads();
  for (auto _ : st) benchmark::DoNotOptimize(mzv::run_jobs_parallel(js, opt));
}
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DimsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mzv::dims_table_serial(static_cast<int>(st.range(0))));
}
void BM_DimsParallel(benchmark::State& st) {
  const int threads = omp_get_max_threads();
  for (auto _ : st) benchmark::DoNotOptimize(mzv::dims_table_parallel(static_cast<int>(st.range(0)), threads));
}
BENCHMARK(BM_DimsSerial)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DimsParallel)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
