#include <benchmark/benchmark.h>

#include <random>

#include "lg/oracle.hpp"

namespace {

using namespace lg;

Matrix random_square(PrimeField f, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  Matrix m(f, d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = dist(rng);
  return m;
}

LinkedChain nested(std::uint32_t p, int d, int n, const std::vector<int>& sizes,
                   std::optional<std::uint64_t> seed = std::nullopt) {
  ChainSpec spec;
  spec.p = p;
  spec.d = d;
  spec.n = n;
  for (int k : sizes) {
    std::vector<int> subset;
    for (int c = 1; c <= k; ++c) subset.push_back(c);
    spec.subsets.push_back(std::move(subset));
  }
  spec.seed = seed;
  return make_nested_chain(spec);
}

void BM_Rref(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  PrimeField f(251);
  std::vector<Matrix> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(random_square(f, d, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(inputs[i++ % inputs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16);

void BM_SubspaceEnumeration(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  PrimeField f(3);
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_subspace(f, d, r, [&count](const Subspace&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * gaussian_binomial(d, r, f.p()));
}
BENCHMARK(BM_SubspaceEnumeration)->Args({4, 2})->Args({5, 2})->Args({6, 3});

void BM_ChainWalk(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  LinkedChain chain = nested(p, 3, 3, {1, 2});
  std::uint64_t points = 0;
  for (auto _ : state) {
    std::uint64_t count = 0;
    walk_lg_points(chain, 1, EnumBudget{},
                   [&count](const std::vector<Subspace>&) { ++count; });
    points = count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["points"] = static_cast<double>(points);
}
BENCHMARK(BM_ChainWalk)->Arg(3)->Arg(7)->Arg(13);

void BM_FiberCensus(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  LinkedChain chain = nested(p, 3, 4, {1, 2, 2}, 5);
  PairAnalyzer analyzer(chain, 1);
  std::vector<Subspace> all;
  for_each_subspace(chain.field, 3, 1,
                    [&all](const Subspace& s) { all.push_back(s); });
  const Subspace* v1 = nullptr;
  const Subspace* vn = nullptr;
  for (const Subspace& a : all) {
    for (const Subspace& b : all) {
      if (analyzer.admissible(a, b)) {
        v1 = &a;
        vn = &b;
        break;
      }
    }
    if (v1) break;
  }
  for (auto _ : state) {
    PairInvariants inv = analyzer.invariants(*v1, *vn);
    FiberResult fiber = enum_fiber(analyzer, *v1, *vn);
    FiberCensus census = stratify(analyzer, inv, fiber.points);
    benchmark::DoNotOptimize(census.total);
  }
}
BENCHMARK(BM_FiberCensus)->Arg(3)->Arg(7);

void BM_Interpolation(benchmark::State& state) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    samples.emplace_back(q, 3 * q * q * q + q + 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_count_polynomial(samples));
  }
}
BENCHMARK(BM_Interpolation);

}  // namespace

BENCHMARK_MAIN();
