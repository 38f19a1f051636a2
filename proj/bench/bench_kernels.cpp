// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "wpec/decoder.hpp"
#include "wpec/verifier.hpp"

using namespace wpec;

namespace {

const EnumerationContext& two_fault_context() {
  static const auto ctx = EnumerationContext::make(Ordering::Permuted, true, 2, EnumerationMode::LookupTable);
  return *ctx;
}

const CorrectionTable& table() {
  static const CorrectionTable t = build_correction_table();
  return t;
}

void BM_RecordsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(collect_records(two_fault_context(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RecordsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RecordsReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(collect_records_reference(two_fault_context()));
}
BENCHMARK(BM_RecordsReference)->Unit(benchmark::kMillisecond);

void BM_GolaySweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(golay_wpec_sweep(table(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GolaySweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// The reference goes through PauliOp and the generator lists; 2^20 words keep it short.
void BM_GolaySweepReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(golay_wpec_sweep_reference(table(), uint64_t{1} << 20));
}
BENCHMARK(BM_GolaySweepReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
