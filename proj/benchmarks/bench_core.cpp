#include <benchmark/benchmark.h>

#include <random>

#include "idiag/decomposition.hpp"
#include "idiag/measures.hpp"
#include "idiag/polynomial.hpp"

using namespace idiag;

namespace {

std::vector<Vector> random_points(std::size_t n, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(2, 12);
  std::vector<Vector> pts(count);
  for (auto& p : pts)
    for (std::size_t k = 0; k < n; ++k) p.push_back(coord(rng));
  for (std::size_t k = 0; k < n; ++k) {
    Vector e(n, 0);
    e[k] = 13;
    pts.push_back(e);
  }
  return pts;
}

void BM_Canonicalize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto pts = random_points(n, 40, 1);
  for (auto _ : state) benchmark::DoNotOptimize(make_diagram(pts));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(3)->Arg(4);

void BM_NewtonNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Diagram g = make_diagram(random_points(n, 20, 2));
  for (auto _ : state) benchmark::DoNotOptimize(newton_number(g));
}
BENCHMARK(BM_NewtonNumber)->Arg(2)->Arg(3);

void BM_Decide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Diagram g = make_diagram(random_points(n, 12, 3));
  for (auto _ : state) benchmark::DoNotOptimize(decide_decomposability(g));
}
BENCHMARK(BM_Decide)->Arg(2)->Arg(3);

void BM_PolyMul(benchmark::State& state) {
  Polynomial p = parse_polynomial("(z1 + 2*z2 - z3 + 1)^" + std::to_string(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
