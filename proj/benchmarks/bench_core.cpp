#include "daqb/equality.hpp"
#include "daqb/hecke.hpp"
#include "daqb/invariants.hpp"
#include "daqb/presentations.hpp"
#include "daqb/quotient.hpp"
#include "daqb/ribbon.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace daqb;

namespace {

Word random_word(std::mt19937_64 &rng, int n, int len) {
  static constexpr Gen kinds[] = {Gen::T, Gen::Y, Gen::Z, Gen::Q, Gen::Sigma};
  Word w(n);
  for (int k = 0; k < len; ++k) {
    const Gen g = kinds[rng() % 5];
    const int idx = g == Gen::Sigma ? 0 : 1 + static_cast<int>(rng() % (g == Gen::T ? n - 1 : n));
    w.push_back({g, idx, rng() % 2 ? 1 : -1});
  }
  return w;
}

} // namespace

static void BM_Invariant(benchmark::State &state) {
  std::mt19937_64 rng(1);
  const Word w = random_word(rng, 5, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Invariant)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_QPrefix(benchmark::State &state) {
  std::mt19937_64 rng(2);
  const Word w = random_word(rng, 5, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(q_prefix_normalize(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QPrefix)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_HomomorphismSuite(benchmark::State &state) {
  const GroupFamily d{Family::DoubleAffineQBraid, static_cast<int>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_homomorphism(d));
}
BENCHMARK(BM_HomomorphismSuite)->DenseRange(2, 6);

static void BM_AppendixA(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_appendix_a(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AppendixA)->DenseRange(2, 6);

static void BM_EqualYZT(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const Word a = Word::parse("Y1 Z2 Y1^-1 Z2^-1", n), b = Word::parse("T1^2", n);
  const GroupFamily d{Family::DoubleAffineQBraid, n};
  for (auto _ : state)
    benchmark::DoNotOptimize(equal_under_relations(a, b, d));
}
BENCHMARK(BM_EqualYZT)->DenseRange(3, 6);

static void BM_DahaRelations(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_daha_relations(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DahaRelations)->DenseRange(2, 5);

static void BM_HeckeProduct(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  auto element = [&] {
    FiniteHecke x(n);
    for (int k = 0; k < 4; ++k) {
      Perm p = identity_perm(n);
      std::shuffle(p.begin(), p.end(), rng);
      x.add(p, LaurentPoly::s(static_cast<int>(rng() % 5) - 2) + 1);
    }
    return x;
  };
  const FiniteHecke x = element(), y = element();
  for (auto _ : state)
    benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_HeckeProduct)->DenseRange(3, 6);

static void BM_Straighten(benchmark::State &state) {
  std::mt19937_64 rng(4);
  Word w(3);
  for (int k = 0; k < state.range(0); ++k)
    w.push_back(rng() % 2 ? Letter::t(1 + static_cast<int>(rng() % 2)) : Letter::y(1 + static_cast<int>(rng() % 3)));
  const auto order = state.range(1) ? StraightenOrder::RightToLeft : StraightenOrder::LeftToRight;
  for (auto _ : state)
    benchmark::DoNotOptimize(affine_straighten(w, order));
}
BENCHMARK(BM_Straighten)->ArgsProduct({{4, 8, 12, 16}, {0, 1}});

static void BM_TotalTwist(benchmark::State &state) {
  const RibbonPath p = analytic_q_path(3, 3, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(total_twist(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TotalTwist)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
