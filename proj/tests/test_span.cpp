#include <doctest.h>

#include "gprop/span.hpp"

using namespace gprop;

namespace {

SpanMorphism sample_span(const SpanContext& ctx, std::mt19937_64& rng, int mid, int n, int m) {
  auto rand_mono = [&](int a, int b) {
    auto v = enumerate_mono(a, b);
    return v[rng() % v.size()];
  };
  const auto& fam = ctx.family();
  return SpanMorphism{DJGMorphism{fam.sample(rng, mid, 4), rand_mono(mid, n)},
                      DJGMorphism{fam.sample(rng, mid, 4), rand_mono(mid, m)}};
}

}  // namespace

TEST_CASE("pair composition") {
  auto c2 = FiniteGroup::cyclic(2);
  SpanContext ctx{CrossedFamily(Family::Symmetric, c2)};
  const auto& fam = ctx.family();

  // (e, m) o (sigma, id) = (sigma, m)
  Element swap = fam.crossing(2, 1);
  DJGMorphism g{fam.identity(2), OrderedMap::mult()};
  DJGMorphism f{swap, OrderedMap::identity(2)};
  DJGMorphism r = ctx.compose_djg(g, f);
  CHECK(r.mono == OrderedMap::mult());
  CHECK(fam.equal(r.elt, swap));

  CHECK_THROWS(ctx.compose_djg(f, g));  // boundary mismatch: 2->1 then 2->2

  // identity laws and exhaustive associativity at arities <= 2
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const auto& mono : enumerate_mono(a, b))
        for (const auto& e : fam.enumerate(a)) {
          DJGMorphism d{e, mono};
          CHECK(ctx.djg_equal(ctx.compose_djg(ctx.identity_djg(b), d), d));
          CHECK(ctx.djg_equal(ctx.compose_djg(d, ctx.identity_djg(a)), d));
        }
  long long triples = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (const auto& m1 : enumerate_mono(a, b))
            for (const auto& e1 : fam.enumerate(a))
              for (const auto& m2 : enumerate_mono(b, c))
                for (const auto& e2 : fam.enumerate(b))
                  for (const auto& m3 : enumerate_mono(c, d))
                    for (const auto& e3 : fam.enumerate(c)) {
                      DJGMorphism x{e1, m1}, y{e2, m2}, z{e3, m3};
                      CHECK(ctx.djg_equal(ctx.compose_djg(z, ctx.compose_djg(y, x)),
                                          ctx.compose_djg(ctx.compose_djg(z, y), x)));
                      ++triples;
                    }
  CHECK(triples > 0);
}

TEST_CASE("generator cospan rules") {
  auto c2 = FiniteGroup::cyclic(2);
  for (Family tag : {Family::Symmetric, Family::Braid}) {
    SpanContext ctx{CrossedFamily(tag, c2)};
    const auto& fam = ctx.family();

    // (m, m): span legs (m (+) m after the crossing, m (+) m)
    SpanMorphism mm = ctx.cospan_to_span(ctx.djg_from_mono(OrderedMap::mult()),
                                         ctx.djg_from_mono(OrderedMap::mult()));
    CHECK(mm.middle() == 4);
    CHECK(mm.in_leg.mono == tensor(OrderedMap::mult(), OrderedMap::mult()));
    CHECK(mm.out_leg.mono == tensor(OrderedMap::mult(), OrderedMap::mult()));
    CHECK(fam.underlying_permutation(mm.in_leg.elt) == Permutation::transposition(4, 1));
    CHECK(fam.is_identity(mm.out_leg.elt));

    // (u, u) -> (id_0, id_0)
    SpanMorphism uu = ctx.cospan_to_span(ctx.djg_from_mono(OrderedMap::unit()),
                                         ctx.djg_from_mono(OrderedMap::unit()));
    CHECK(uu.middle() == 0);
    CHECK(uu.in_leg.mono == OrderedMap::identity(0));
    CHECK(uu.out_leg.mono == OrderedMap::identity(0));

    // (m, u) -> (u^2, id_0)
    SpanMorphism mu = ctx.cospan_to_span(ctx.djg_from_mono(OrderedMap::mult()),
                                         ctx.djg_from_mono(OrderedMap::unit()));
    CHECK(mu.middle() == 0);
    CHECK(mu.in_leg.mono == OrderedMap(0, 2, {}));
    CHECK(mu.out_leg.mono == OrderedMap::identity(0));

    // (u, m) -> (id_0, u^2)
    SpanMorphism um = ctx.cospan_to_span(ctx.djg_from_mono(OrderedMap::unit()),
                                         ctx.djg_from_mono(OrderedMap::mult()));
    CHECK(um.middle() == 0);
    CHECK(um.in_leg.mono == OrderedMap::identity(0));
    CHECK(um.out_leg.mono == OrderedMap(0, 2, {}));

    // (g, h) -> equivalent to the span of inverses
    std::mt19937_64 rng(5);
    for (int c = 0; c < 60; ++c) {
      int n = 1 + int(rng() % 3);
      Element g = fam.sample(rng, n, 4), h = fam.sample(rng, n, 4);
      SpanMorphism got = ctx.cospan_to_span(ctx.djg_from_element(g), ctx.djg_from_element(h));
      SpanMorphism expected{ctx.djg_from_element(fam.inverse(g)),
                            ctx.djg_from_element(fam.inverse(h))};
      CHECK(ctx.span_equiv(got, expected));
    }
  }
}

TEST_CASE("span composition shapes") {
  auto c2 = FiniteGroup::cyclic(2);
  for (Family tag : {Family::Symmetric, Family::Hyperoctahedral, Family::Braid, Family::Ribbon}) {
    SpanContext ctx{CrossedFamily(tag, c2)};
    const auto& fam = ctx.family();

    CompositeMorphism delta{OrderedMap::mult(), fam.identity(2), OrderedMap::identity(2)};
    CompositeMorphism mu{OrderedMap::identity(2), fam.identity(2), OrderedMap::mult()};

    CompositeMorphism md = ctx.composite_compose(mu, delta);
    CHECK(md.in_mono == OrderedMap::mult());
    CHECK(md.out_mono == OrderedMap::mult());
    CHECK(fam.is_identity(md.elt));

    CompositeMorphism dm = ctx.composite_compose(delta, mu);
    CHECK(dm.middle() == 4);
    CHECK(dm.in_mono == tensor(OrderedMap::mult(), OrderedMap::mult()));
    CHECK(dm.out_mono == tensor(OrderedMap::mult(), OrderedMap::mult()));
    CHECK(fam.underlying_permutation(dm.elt) == Permutation::transposition(4, 1));
  }
}

TEST_CASE("canonicalization and equivalence") {
  auto c2 = FiniteGroup::cyclic(2);
  for (Family tag : {Family::Symmetric, Family::Hyperoctahedral, Family::Braid, Family::Ribbon}) {
    SpanContext ctx{CrossedFamily(tag, c2)};
    const auto& fam = ctx.family();
    std::mt19937_64 rng(7);

    for (int c = 0; c < 200; ++c) {
      int mid = int(rng() % 4), n = 1 + int(rng() % 3), m = 1 + int(rng() % 3);
      SpanMorphism s = sample_span(ctx, rng, mid, n, m);
      CompositeMorphism t = ctx.canonicalize(s);
      CHECK(fam.is_identity(ctx.span_of(t).in_leg.elt));
      CHECK(ctx.canonicalize(ctx.span_of(t)) == t);

      // precomposing both legs with a middle element keeps the class
      Element h = fam.sample(rng, mid, 4);
      SpanMorphism s2{ctx.compose_djg(s.in_leg, ctx.djg_from_element(h)),
                      ctx.compose_djg(s.out_leg, ctx.djg_from_element(h))};
      CHECK(ctx.span_equiv(s, s2));

      // identity laws
      CHECK(ctx.span_compose(ctx.identity_span(m), s) == t);
      CHECK(ctx.span_compose(s, ctx.identity_span(n)) == t);
    }

    // spans with different underlying fiber sizes are never equivalent
    SpanMorphism a{ctx.djg_from_mono(OrderedMap(2, 1, {0, 0})),
                   ctx.djg_from_mono(OrderedMap::identity(2))};
    SpanMorphism b{ctx.djg_from_mono(OrderedMap(2, 1, {0, 0})),
                   DJGMorphism{fam.identity(2), OrderedMap(2, 2, {0, 0})}};
    CHECK(!ctx.span_equiv(a, b));
  }
}

TEST_CASE("category axioms for spans, sampled") {
  auto c2 = FiniteGroup::cyclic(2);
  for (Family tag : {Family::Symmetric, Family::Hyperoctahedral, Family::Braid, Family::Ribbon}) {
    SpanContext ctx{CrossedFamily(tag, c2)};
    std::mt19937_64 rng(11);
    for (int c = 0; c < 120; ++c) {
      int a = 1 + int(rng() % 3), b = 1 + int(rng() % 3), d = 1 + int(rng() % 3),
          e = 1 + int(rng() % 3);
      SpanMorphism f = sample_span(ctx, rng, int(rng() % 3), a, b);
      SpanMorphism g = sample_span(ctx, rng, int(rng() % 3), b, d);
      SpanMorphism h = sample_span(ctx, rng, int(rng() % 3), d, e);
      CHECK(ctx.span_compose(ctx.span_of(ctx.span_compose(h, g)), f) ==
            ctx.span_compose(h, ctx.span_of(ctx.span_compose(g, f))));
    }
    // interchange on sampled squares
    for (int c = 0; c < 80; ++c) {
      int a = 1 + int(rng() % 2), b = 1 + int(rng() % 2), d = 1 + int(rng() % 2);
      int a2 = 1 + int(rng() % 2), b2 = 1 + int(rng() % 2), d2 = 1 + int(rng() % 2);
      SpanMorphism f = sample_span(ctx, rng, int(rng() % 3), a, b);
      SpanMorphism g = sample_span(ctx, rng, int(rng() % 3), b, d);
      SpanMorphism f2 = sample_span(ctx, rng, int(rng() % 3), a2, b2);
      SpanMorphism g2 = sample_span(ctx, rng, int(rng() % 3), b2, d2);
      CompositeMorphism lhs = ctx.span_compose(ctx.span_tensor(g, g2), ctx.span_tensor(f, f2));
      CompositeMorphism rhs =
          ctx.composite_tensor(ctx.span_compose(g, f), ctx.span_compose(g2, f2));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("rewriting strategy independence") {
  auto c2 = FiniteGroup::cyclic(2);
  for (Family tag : {Family::Symmetric, Family::Braid}) {
    SpanContext ctx{CrossedFamily(tag, c2)};
    std::mt19937_64 rng(13);
    for (int c = 0; c < 500; ++c) {
      int n = 1 + int(rng() % 3), m = 1 + int(rng() % 3), l = 1 + int(rng() % 3);
      SpanMorphism f = sample_span(ctx, rng, int(rng() % 4), n, m);
      SpanMorphism g = sample_span(ctx, rng, int(rng() % 4), m, l);
      CompositeMorphism canon = ctx.span_compose(g, f);
      GeneratorWord w = random_generator_word(g.in_leg.mono, rng);
      REQUIRE(w.recompose(g.in_leg.mono.dom()) == g.in_leg.mono);
      CHECK(ctx.span_compose(g, f, &w) == canon);
    }
  }
}

TEST_CASE("braid and flagged composites project onto the symmetric route") {
  // the permutation projection and the all-plus flag embedding commute with
  // rewriting, so they must commute with whole span composition; this gives
  // the braid and hyperoctahedral families an independent composition oracle
  auto c2 = FiniteGroup::cyclic(2);
  SpanContext sym{CrossedFamily(Family::Symmetric, c2)};
  SpanContext braid{CrossedFamily(Family::Braid, c2)};
  SpanContext hyp{CrossedFamily(Family::Hyperoctahedral, c2)};
  std::mt19937_64 rng(19);

  auto project = [&](const DJGMorphism& d, const CrossedFamily& from) {
    Element e = sym.family().with_labels(
        std::visit([](const auto& x) { return x.labels; }, d.elt), element_size(d.elt));
    std::get<LabelledPermutation>(e).perm = from.underlying_permutation(d.elt);
    return DJGMorphism{std::move(e), d.mono};
  };

  for (int c = 0; c < 200; ++c) {
    int n = 1 + int(rng() % 3), m = 1 + int(rng() % 3), l = 1 + int(rng() % 3);
    SpanMorphism f = sample_span(braid, rng, int(rng() % 4), n, m);
    SpanMorphism g = sample_span(braid, rng, int(rng() % 4), m, l);
    CompositeMorphism cb = braid.span_compose(g, f);
    CompositeMorphism cs =
        sym.span_compose(SpanMorphism{project(g.in_leg, braid.family()), project(g.out_leg, braid.family())},
                         SpanMorphism{project(f.in_leg, braid.family()), project(f.out_leg, braid.family())});
    CHECK(cb.in_mono == cs.in_mono);
    CHECK(cb.out_mono == cs.out_mono);
    CHECK(braid.family().underlying_permutation(cb.elt) ==
          sym.family().underlying_permutation(cs.elt));
    CHECK(std::get<LabelledBraid>(cb.elt).labels == std::get<LabelledPermutation>(cs.elt).labels);
  }

  auto allplus = [&](DJGMorphism d) {
    std::get<LabelledPermutation>(d.elt).flags = FlagTuple(element_size(d.elt), 0);
    return d;
  };
  for (int c = 0; c < 200; ++c) {
    int n = 1 + int(rng() % 3), m = 1 + int(rng() % 3), l = 1 + int(rng() % 3);
    SpanMorphism f = sample_span(hyp, rng, int(rng() % 4), n, m);
    SpanMorphism g = sample_span(hyp, rng, int(rng() % 4), m, l);
    f.in_leg = allplus(f.in_leg);
    f.out_leg = allplus(f.out_leg);
    g.in_leg = allplus(g.in_leg);
    g.out_leg = allplus(g.out_leg);
    CompositeMorphism ch = hyp.span_compose(g, f);
    CompositeMorphism cs =
        sym.span_compose(SpanMorphism{project(g.in_leg, hyp.family()), project(g.out_leg, hyp.family())},
                         SpanMorphism{project(f.in_leg, hyp.family()), project(f.out_leg, hyp.family())});
    // all-plus data stays all-plus and matches the symmetric composite
    CHECK(*std::get<LabelledPermutation>(ch.elt).flags == FlagTuple(ch.middle(), 0));
    CHECK(ch.in_mono == cs.in_mono);
    CHECK(ch.out_mono == cs.out_mono);
    CHECK(hyp.family().underlying_permutation(ch.elt) ==
          sym.family().underlying_permutation(cs.elt));
    CHECK(std::get<LabelledPermutation>(ch.elt).labels ==
          std::get<LabelledPermutation>(cs.elt).labels);
  }
}

TEST_CASE("composite json round trip") {
  auto c2 = FiniteGroup::cyclic(2);
  for (Family tag : {Family::Symmetric, Family::Hyperoctahedral, Family::Braid, Family::Ribbon}) {
    SpanContext ctx{CrossedFamily(tag, c2)};
    std::mt19937_64 rng(17);
    for (int c = 0; c < 50; ++c) {
      CompositeMorphism t =
          ctx.canonicalize(sample_span(ctx, rng, int(rng() % 4), 1 + int(rng() % 3), 1 + int(rng() % 3)));
      CompositeMorphism back = ctx.composite_from_json(ctx.composite_to_json(t));
      CHECK(back == t);
    }
  }
}
