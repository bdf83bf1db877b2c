#include <benchmark/benchmark.h>

#include "gprop/semantics.hpp"

using namespace gprop;

namespace {

SpanMorphism make_span(const SpanContext& ctx, std::mt19937_64& rng, int mid, int n, int m) {
  auto rand_mono = [&](int a, int b) {
    auto v = enumerate_mono(a, b);
    return v[rng() % v.size()];
  };
  const auto& fam = ctx.family();
  return SpanMorphism{DJGMorphism{fam.sample(rng, mid, 4), rand_mono(mid, n)},
                      DJGMorphism{fam.sample(rng, mid, 4), rand_mono(mid, m)}};
}

}  // namespace

static void BM_SpanCompose(benchmark::State& state) {
  auto c2 = FiniteGroup::cyclic(2);
  Family tag = state.range(0) == 0 ? Family::Symmetric : Family::Braid;
  SpanContext ctx{CrossedFamily(tag, c2)};
  std::mt19937_64 rng(7);
  std::vector<std::pair<SpanMorphism, SpanMorphism>> cases;
  for (int i = 0; i < 32; ++i)
    cases.push_back({make_span(ctx, rng, 3, 3, 2), make_span(ctx, rng, 3, 2, 3)});
  size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = cases[i++ & 31];
    benchmark::DoNotOptimize(ctx.span_compose(g, f));
  }
}
BENCHMARK(BM_SpanCompose)->Arg(0)->Arg(1);

static void BM_EvalSpan(benchmark::State& state) {
  auto c2 = FiniteGroup::cyclic(2);
  auto s3 = FiniteGroup::symmetric(3);
  int transposition = 1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) == s3->identity()) {
      transposition = x;
      break;
    }
  BimonoidModel model =
      group_algebra_model(5, s3, c2, conjugation_action(*s3, {s3->identity(), transposition}));
  SpanContext ctx{CrossedFamily(Family::Symmetric, c2)};
  std::mt19937_64 rng(11);
  std::vector<CompositeMorphism> triples;
  for (int i = 0; i < 16; ++i)
    triples.push_back(ctx.span_compose(make_span(ctx, rng, 3, 2, 3), make_span(ctx, rng, 3, 3, 2)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_composite(model, triples[i++ & 15]));
  }
}
BENCHMARK(BM_EvalSpan);

static void BM_PullbackCompose(benchmark::State& state) {
  auto c2 = FiniteGroup::cyclic(2);
  std::mt19937_64 rng(13);
  std::vector<std::pair<NCSpan, NCSpan>> cases;
  for (int i = 0; i < 32; ++i) {
    cases.push_back({NCSpan{random_ncset(c2, rng, 3, 3), random_ncset(c2, rng, 3, 2)},
                     NCSpan{random_ncset(c2, rng, 3, 2), random_ncset(c2, rng, 3, 3)}});
  }
  size_t i = 0;
  for (auto _ : state) {
    const auto& [s1, s2] = cases[i++ & 31];
    benchmark::DoNotOptimize(pullback_span_compose(SpanVariant::AA, s2, s1));
  }
}
BENCHMARK(BM_PullbackCompose);
