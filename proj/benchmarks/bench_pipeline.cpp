#include <benchmark/benchmark.h>

#include "darboux/driver.hpp"
#include "darboux/plane_field.hpp"

namespace {

using namespace darboux;

const char* const kLinear = "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x\nhyp y\n";
const char* const kRadial = "vars x y z\ncodim 2\nomega x*dy^dz - y*dx^dz + z*dx^dy\nhyp x\nhyp y\nhyp z\n";
const char* const kPullback =
    "vars x y z w\ncodim 2\n"
    "omega (dx + 2*y*dy + w*dz + z*dw)^(dz - 3*w^2*dw)\n"
    "hyp x + y^2 + z*w\nhyp x + y^2 + z*w - 1\nhyp z - w^3\nhyp z - w^3 + 2\n"
    "hyp (x + y^2 + z*w)*(z - w^3) - 5\n";
const char* const kSymplectic = "vars x y z w u v\ncodim 2\nomega dx^dy + dz^dw + du^dv\n";

void BM_Integrate(benchmark::State& state, const char* problem) {
  const auto parsed = parse_problem(problem);
  for (auto _ : state) benchmark::DoNotOptimize(run(Subcommand::integrate, parsed));
}
BENCHMARK_CAPTURE(BM_Integrate, linear, kLinear);
BENCHMARK_CAPTURE(BM_Integrate, radial, kRadial);
BENCHMARK_CAPTURE(BM_Integrate, pullback, kPullback);

void BM_CheckLds(benchmark::State& state) {
  const auto parsed = parse_problem(kSymplectic);
  for (auto _ : state) benchmark::DoNotOptimize(check_lds(parsed.omega));
}
BENCHMARK(BM_CheckLds);

void BM_ReportRoundTrip(benchmark::State& state) {
  const auto text = serialize_report(run_text(Subcommand::integrate, kPullback), ReportMode::machine);
  for (auto _ : state) benchmark::DoNotOptimize(serialize_report(parse_report(text), ReportMode::machine));
}
BENCHMARK(BM_ReportRoundTrip);

}  // namespace
