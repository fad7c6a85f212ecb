// OpenMP kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include <random>

#include "roughlat/algebra.hpp"
#include "roughlat/rough_lattice.hpp"
#include "roughlat/serial.hpp"

using namespace roughlat;

namespace {

// E with `classes` blocks of size 2 over 2*classes points; T = E.
Equivalence paired(std::size_t classes) {
  const auto u = Universe::numbered(2 * classes);
  std::vector<Subset> blocks;
  for (std::size_t c = 0; c < classes; ++c) blocks.push_back(Subset::from_bits(std::uint64_t{3} << (2 * c)));
  return Equivalence::from_classes(u, blocks);
}

// A random tolerance on n points, so the pair set is large and irregular.
Tolerance random_tolerance(std::size_t n) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution edge(0.2);
  const auto u = Universe::numbered(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    pairs.emplace_back(a, a);
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(rng)) {
        pairs.emplace_back(a, b);
        pairs.emplace_back(b, a);
      }
  }
  return Tolerance(Relation::from_pairs(u, pairs));
}

Limits wide() {
  Limits l;
  l.analysis_cap = 4096;
  return l;
}

void BM_pairs_parallel(benchmark::State& state) {
  const Tolerance t = random_tolerance(static_cast<std::size_t>(state.range(0)));
  const Equivalence e = kernel(t);
  for (auto _ : state) benchmark::DoNotOptimize(approximation_pairs(e, t));
}

void BM_pairs_serial(benchmark::State& state) {
  const Tolerance t = random_tolerance(static_cast<std::size_t>(state.range(0)));
  const Equivalence e = kernel(t);
  for (auto _ : state) benchmark::DoNotOptimize(serial::approximation_pairs(e, t));
}

// The parallel covers are computed inside OrderedSet construction, together with the order bitsets.
void BM_order_parallel(benchmark::State& state) {
  const Equivalence e = paired(static_cast<std::size_t>(state.range(0)));
  const auto pairs = approximation_pairs(e, e);
  for (auto _ : state) benchmark::DoNotOptimize(OrderedSet(pairs, wide()).covers().size());
}

void BM_covers_serial(benchmark::State& state) {
  const Equivalence e = paired(static_cast<std::size_t>(state.range(0)));
  const OrderedSet o(approximation_pairs(e, e), wide());
  for (auto _ : state) benchmark::DoNotOptimize(serial::covers(o));
}

// RS(E) is distributive, so both versions scan every triple.
void BM_distributive_parallel(benchmark::State& state) {
  const Equivalence e = paired(static_cast<std::size_t>(state.range(0)));
  const OrderedSet o(approximation_pairs(e, e), wide());
  const auto l = LatticeOps::build(o, wide());
  for (auto _ : state) benchmark::DoNotOptimize(is_distributive(*l, wide()));
}

void BM_distributive_serial(benchmark::State& state) {
  const Equivalence e = paired(static_cast<std::size_t>(state.range(0)));
  const OrderedSet o(approximation_pairs(e, e), wide());
  const auto l = LatticeOps::build(o, wide());
  for (auto _ : state) benchmark::DoNotOptimize(serial::distributivity_counterexample(*l));
}

}  // namespace

BENCHMARK(BM_pairs_parallel)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pairs_serial)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_order_parallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_covers_serial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distributive_parallel)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distributive_serial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
