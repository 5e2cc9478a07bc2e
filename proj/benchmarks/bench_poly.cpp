#include <benchmark/benchmark.h>

#include "darboux/expression.hpp"
#include "darboux/mpoly.hpp"

namespace {

using namespace darboux;

const VariableTable& vars() {
  static const VariableTable v({"x", "y", "z", "w"});
  return v;
}

void BM_Multiply(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  const auto a = pow(parse_polynomial("x + 2*y - z + 3*w + 1", vars()), e);
  const auto b = pow(parse_polynomial("x - y + 1/2*z*w - 2", vars()), e);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>((a * b).size());
}
BENCHMARK(BM_Multiply)->DenseRange(1, 5);

void BM_ExactDivide(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  const auto b = pow(parse_polynomial("x*y - z + 2", vars()), e);
  const auto a = b * parse_polynomial("x^2 + w^3 - y*z", vars());
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(a, b));
}
BENCHMARK(BM_ExactDivide)->DenseRange(1, 4);

void BM_Gcd(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  const auto g = pow(parse_polynomial("x + y*z - 1", vars()), e);
  const auto a = g * parse_polynomial("x^2 - w", vars());
  const auto b = g * parse_polynomial("y^2 + x*w + 3", vars());
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->DenseRange(1, 3);

void BM_Squarefree(benchmark::State& state) {
  const auto f = parse_polynomial("(x^2 + y - 1)*(z*w - x)*(y + w^2)", vars());
  for (auto _ : state) benchmark::DoNotOptimize(is_squarefree(f));
}
BENCHMARK(BM_Squarefree);

}  // namespace
