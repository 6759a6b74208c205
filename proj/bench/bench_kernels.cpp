// Serial reference vs OpenMP for the index-parallel kernels.

#include <benchmark/benchmark.h>

#include "egcf/cf_core.hpp"
#include "egcf/gompertz.hpp"
#include "egcf/identity_lab.hpp"
#include "egcf/laguerre.hpp"

using namespace egcf;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

const std::vector<ConvergentRow>& rows() {
  static const auto r = convergent_polys(200);
  return r;
}

void BM_ClosedForms(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(closed_form_equivalence(rows(), mode(s)));
}

void BM_Determinant(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(determinant_identity(rows(), mode(s)));
}

void BM_LowerBounds(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(verify_lower_bounds_upto(200, mode(s)));
}

void BM_BetaClosedForms(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(verify_theorem54(120, mode(s)));
}

void BM_LaguerreLink(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(verify_lemma61_upto(120, mode(s)));
}

void BM_SignalScan(benchmark::State& s) {
  static const Enclosure d = delta_enclosure(pow10(-30)).enclosure;
  ScanOptions opts;
  opts.exec = mode(s);
  opts.fractions = false;
  for (auto _ : s) benchmark::DoNotOptimize(distribution_scan(4000, d, [](const FracRecord&) {}, opts));
}

}  // namespace

// Argument 0: serial reference, 1: OpenMP.
BENCHMARK(BM_ClosedForms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Determinant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowerBounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetaClosedForms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaguerreLink)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignalScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
