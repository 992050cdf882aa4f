#include <benchmark/benchmark.h>

#include <random>

#include "catalog.hpp"
#include "kummer/lcp.hpp"
#include "kummer/linalg.hpp"
#include "kummer/rrspace.hpp"
#include "kummer/semigroup.hpp"

using namespace kummer;

namespace {

KummerCurve named(const char* n) { return *cli::builtin_curve(n); }

void BM_FieldMul(benchmark::State& state) {
  const auto F = Field::create(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  std::mt19937 rng(1);
  std::vector<Field::Elem> xs(4096);
  for (auto& x : xs) x = rng() % F.order();
  Field::Elem acc = 1;
  for (auto _ : state) {
    for (auto x : xs) acc = F.add(F.mul(acc, x), 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({2, 8})->Args({3, 6})->Args({2, 20})->Args({65521, 1});

void BM_Rank(benchmark::State& state) {
  const auto F = Field::create(3, 6);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(F, n, n);
  std::mt19937 rng(2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng() % F.order();
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DimFormulaZ(benchmark::State& state) {
  const auto z = named("z");
  const auto q = QTuple::all_ramified(z);
  std::vector<long> alpha(static_cast<std::size_t>(q.n()), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim_formula(q, alpha));
}
BENCHMARK(BM_DimFormulaZ)->Arg(3)->Arg(40);

void BM_DimViaClassesZ(benchmark::State& state) {
  const auto z = named("z");
  const auto q = QTuple::all_ramified(z);
  std::vector<long> alpha(static_cast<std::size_t>(q.n()), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim_via_classes(q, alpha));
}
BENCHMARK(BM_DimViaClassesZ)->Arg(3)->Arg(10);

void BM_EvaluationMatrixZ(benchmark::State& state) {
  const auto z = named("z");
  const auto D = split_places(z, split_x_values(z));
  const Divisor G{{Place::infinity(), static_cast<int>(state.range(0))}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluation_matrix(z, G, D));
}
BENCHMARK(BM_EvaluationMatrixZ)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Teocodes1H3(benchmark::State& state) {
  const auto c = named("h3");
  const Divisor E{{Place::infinity(), -1}, {Place::ramified(1), 1}, {Place::ramified(2), 2}};
  for (auto _ : state) benchmark::DoNotOptimize(teocodes1(c, E, 3).report.lcp);
}
BENCHMARK(BM_Teocodes1H3)->Unit(benchmark::kMicrosecond);

void BM_Teocodes1Z(benchmark::State& state) {
  const auto z = named("z");
  std::vector<Place> places{Place::infinity()};
  for (int k = 1; k <= 8; ++k) places.push_back(Place::ramified(k));
  const auto E = QTuple(z, places).divisor({-7, 1, 2, 3, 3, 4, 5, 6, 6});
  for (auto _ : state) benchmark::DoNotOptimize(teocodes1(z, E, state.range(0)).report.lcp);
}
BENCHMARK(BM_Teocodes1Z)->Arg(77)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace

BENCHMARK_MAIN();
