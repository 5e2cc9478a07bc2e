#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "darboux/expression.hpp"
#include "darboux/kform.hpp"

namespace {

using namespace darboux;

VariableTable vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return VariableTable(names);
}

/// sum over every basis index of a small polynomial coefficient
KForm dense_form(std::size_t n, std::size_t k) {
  KForm a(n, k);
  std::size_t t = 0;
  for (BasisIndex I : basis_of_degree(n, k)) {
    MPoly c = MPoly::constant(n, static_cast<long>(t % 5) + 1);
    c = c + MPoly::variable(n, t % n) * MPoly::variable(n, (t + 1) % n);
    a.add_term(I, c);
    ++t;
  }
  return a;
}

void BM_Wedge(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense_form(n, 2), b = dense_form(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->DenseRange(4, 8, 2);

void BM_ExteriorDerivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense_form(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(a));
}
BENCHMARK(BM_ExteriorDerivative)->DenseRange(4, 8, 2);

void BM_ContractBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense_form(n, 3);
  const auto Js = basis_of_degree(n, 2);
  for (auto _ : state) {
    for (BasisIndex J : Js) benchmark::DoNotOptimize(contract_basis(J, a));
  }
}
BENCHMARK(BM_ContractBasis)->DenseRange(4, 8, 2);

void BM_ParseForm(benchmark::State& state) {
  const auto v = vars(3);
  const std::string text = "(x0^2 + x1*x2 - 3/4)*dx0^dx1 - (x2 + i*x0)*dx0^dx2 + x1^3*dx1^dx2";
  for (auto _ : state) benchmark::DoNotOptimize(parse_form(text, v, 2));
}
BENCHMARK(BM_ParseForm);

}  // namespace
