#include <doctest.h>

#include "gprop/ncset.hpp"

using namespace gprop;

TEST_CASE("construction and label action") {
  auto c3 = FiniteGroup::cyclic(3);
  CHECK_THROWS(NCSetMap(c3, 2, 0, {}));                      // Hom(n, 0) empty
  CHECK_NOTHROW(NCSetMap(c3, 0, 0, {}));
  CHECK_THROWS(NCSetMap(c3, 2, 1, {{{0, 0}}}));              // misses element 1
  CHECK_THROWS(NCSetMap(c3, 2, 2, {{{0, 0}}, {{0, 0}}}));    // repeats element 0

  std::vector<FiberEntry> s{{0, 1}, {1, 2}};
  CHECK(label_act(*c3, 0, s) == s);
  CHECK(label_act(*c3, 1, s) == std::vector<FiberEntry>{{0, 2}, {1, 0}});
  // action law
  CHECK(label_act(*c3, c3->mul(2, 2), s) == label_act(*c3, 2, label_act(*c3, 2, s)));
}

TEST_CASE("composition formula") {
  auto c3 = FiniteGroup::cyclic(3);
  // f1: 2 -> 1 fiber (1^a < 2^b), f2: 1 -> 1 fiber (1^c): composite (1^{ca} < 2^{cb})
  NCSetMap f1(c3, 2, 1, {{{0, 1}, {1, 2}}});
  NCSetMap f2(c3, 1, 1, {{{0, 1}}});
  NCSetMap comp = ncset_compose(f2, f1);
  CHECK(comp.fiber(0) == std::vector<FiberEntry>{{0, 2}, {1, 0}});

  auto c2 = FiniteGroup::cyclic(2);
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& f : enumerate_ncset(c2, n, m)) {
        CHECK(ncset_compose(NCSetMap::identity(c2, m), f) == f);
        CHECK(ncset_compose(f, NCSetMap::identity(c2, n)) == f);
      }
  // exhaustive associativity at arities <= 2
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l)
        for (int k = 0; k <= 2; ++k)
          for (const auto& f : enumerate_ncset(c2, n, m))
            for (const auto& g : enumerate_ncset(c2, m, l))
              for (const auto& h : enumerate_ncset(c2, l, k))
                CHECK(ncset_compose(h, ncset_compose(g, f)) ==
                      ncset_compose(ncset_compose(h, g), f));
  CHECK_THROWS(ncset_compose(f1, f1));
}

TEST_CASE("unordered maps") {
  auto c2 = FiniteGroup::cyclic(2);
  std::mt19937_64 rng(3);

  // forgetting the order commutes with composition
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l)
        for (const auto& f : enumerate_ncset(c2, n, m))
          for (const auto& g : enumerate_ncset(c2, m, l))
            CHECK(forget_order(ncset_compose(g, f)) ==
                  gf_compose(forget_order(g), forget_order(f)));

  // with a trivial group and singleton labels this is plain set-map composition
  auto triv = FiniteGroup::trivial();
  for (int c = 0; c < 60; ++c) {
    int n = int(rng() % 3), m = 1 + int(rng() % 2), l = 1 + int(rng() % 2);
    GFMap f = forget_order(random_ncset(triv, rng, n, m));
    GFMap g = forget_order(random_ncset(triv, rng, m, l));
    GFMap gf = gf_compose(g, f);
    for (int e = 0; e < n; ++e)
      CHECK(gf.data().image_of(e) == g.data().image_of(f.data().image_of(e)));
  }
}

TEST_CASE("pair correspondence") {
  auto c2 = FiniteGroup::cyclic(2);
  SpanContext ctx{CrossedFamily(Family::Symmetric, c2)};

  // identity goes to the identity pair
  DJGMorphism idp = to_pair(NCSetMap::identity(c2, 3));
  CHECK(idp.mono == OrderedMap::identity(3));
  CHECK(ctx.family().is_identity(idp.elt));

  // f: 2 -> 1 with fiber (2^a < 1^b) becomes a labelled transposition over m
  NCSetMap f(c2, 2, 1, {{{1, 1}, {0, 0}}});
  DJGMorphism d = to_pair(f);
  CHECK(d.mono == OrderedMap::mult());
  const auto& lp = std::get<LabelledPermutation>(d.elt);
  CHECK(lp.perm == Permutation::transposition(2, 0));
  CHECK(lp.labels == GroupTuple(c2, {1, 0}));
  CHECK(from_pair(c2, d) == f);

  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& g : enumerate_ncset(c2, n, m)) CHECK(from_pair(c2, to_pair(g)) == g);

  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l)
        for (const auto& a : enumerate_ncset(c2, n, m))
          for (const auto& b : enumerate_ncset(c2, m, l))
            CHECK(ctx.djg_equal(to_pair(ncset_compose(b, a)),
                                ctx.compose_djg(to_pair(b), to_pair(a))));
}

TEST_CASE("hom counting") {
  auto c2 = FiniteGroup::cyclic(2);
  for (int n = 0; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      long long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      long long gl = 1;
      for (int k = 0; k < n; ++k) gl *= 2;
      long long closed = count_mono(n, m) * fact * gl;
      CHECK(static_cast<long long>(enumerate_ncset(c2, n, m).size()) == closed);
      CHECK(ncset_hom_count(n, m, 2) == closed);
    }
}

TEST_CASE("star completion") {
  auto c2 = FiniteGroup::cyclic(2);
  std::mt19937_64 rng(5);

  // identity vertical edge gives a square with the horizontal edge on top
  NCSetMap f = random_ncset(c2, rng, 2, 2);
  Bimorphism b0 = star_complete(f, NCSetMap::identity(c2, 2), Ambient::AsAs);
  CHECK(b0.top.dom() == f.dom());
  CHECK(b0.top == f);

  // bimorphism conditions hold and the completion is unique
  for (int c = 0; c < 150; ++c) {
    int msz = 1 + int(rng() % 3), psz = int(rng() % 4), q = 1 + int(rng() % 3);
    NCSetMap hor = random_ncset(c2, rng, msz, q);
    NCSetMap ver = random_ncset(c2, rng, psz, q);
    Bimorphism b = star_complete(hor, ver, Ambient::AsAs);

    // underlying pullback
    int r = b.top.dom();
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < r; ++e) pairs.push_back({b.left.image_of(e), b.top.image_of(e)});
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::pair<int, int>> expect;
    for (int x = 0; x < msz; ++x)
      for (int y = 0; y < psz; ++y)
        if (hor.image_of(x) == ver.image_of(y)) expect.push_back({x, y});
    CHECK(pairs == expect);

    // fiber isomorphism conditions: order and labels transported exactly
    for (int x = 0; x < msz; ++x) {
      const auto& up = b.left.fiber(x);
      const auto& target = ver.fiber(hor.image_of(x));
      REQUIRE(up.size() == target.size());
      for (size_t i = 0; i < up.size(); ++i) {
        CHECK(b.top.image_of(up[i].elt) == target[i].elt);
        CHECK(up[i].label == target[i].label);
      }
    }
    for (int y = 0; y < psz; ++y) {
      const auto& up = b.top.fiber(y);
      const auto& target = hor.fiber(ver.image_of(y));
      REQUIRE(up.size() == target.size());
      for (size_t i = 0; i < up.size(); ++i) {
        CHECK(b.left.image_of(up[i].elt) == target[i].elt);
        CHECK(up[i].label == target[i].label);
      }
    }
  }

  // uniqueness at arities <= 3: every alternative ordering/labelling of a
  // lifted fiber violates one of the two fiber-isomorphism conditions
  auto count_lifts = [&](const Bimorphism& b, const NCSetMap& hor, const NCSetMap& ver) {
    auto fiber_variants = [&](const std::vector<FiberEntry>& f) {
      std::vector<std::vector<FiberEntry>> out;
      std::vector<int> elts;
      for (const auto& fe : f) elts.push_back(fe.elt);
      std::sort(elts.begin(), elts.end());
      do {
        std::vector<int> labels(f.size(), 0);
        while (true) {
          std::vector<FiberEntry> cand;
          for (size_t i = 0; i < f.size(); ++i) cand.push_back({elts[i], labels[i]});
          out.push_back(cand);
          int k = static_cast<int>(f.size()) - 1;
          while (k >= 0 && labels[k] == 1) labels[k--] = 0;
          if (k < 0) break;
          ++labels[k];
        }
      } while (std::next_permutation(elts.begin(), elts.end()));
      return out;
    };
    // left-leg lifts: fiber over x must map through the top leg onto
    // ver's fiber over hor(x), order and labels included
    long long total = 1;
    for (int x = 0; x < b.left.cod(); ++x) {
      const auto& target = ver.fiber(hor.image_of(x));
      long long good = 0;
      for (const auto& cand : fiber_variants(b.left.fiber(x))) {
        bool ok = cand.size() == target.size();
        for (size_t i = 0; ok && i < cand.size(); ++i)
          ok = b.top.image_of(cand[i].elt) == target[i].elt && cand[i].label == target[i].label;
        if (ok) ++good;
      }
      total *= good;
    }
    for (int y = 0; y < b.top.cod(); ++y) {
      const auto& target = hor.fiber(ver.image_of(y));
      long long good = 0;
      for (const auto& cand : fiber_variants(b.top.fiber(y))) {
        bool ok = cand.size() == target.size();
        for (size_t i = 0; ok && i < cand.size(); ++i)
          ok = b.left.image_of(cand[i].elt) == target[i].elt && cand[i].label == target[i].label;
        if (ok) ++good;
      }
      total *= good;
    }
    return total;
  };
  for (int c = 0; c < 80; ++c) {
    int msz = 1 + int(rng() % 3), psz = int(rng() % 4), q = 1 + int(rng() % 3);
    NCSetMap hor = random_ncset(c2, rng, msz, q);
    NCSetMap ver = random_ncset(c2, rng, psz, q);
    Bimorphism b = star_complete(hor, ver, Ambient::AsAs);
    CHECK(count_lifts(b, hor, ver) == 1);
  }
}

TEST_CASE("pullback span composition variants") {
  auto c2 = FiniteGroup::cyclic(2);
  std::mt19937_64 rng(7);

  // identity span is neutral in every variant
  for (SpanVariant v : {SpanVariant::AA, SpanVariant::AV, SpanVariant::VA, SpanVariant::VV}) {
    for (int c = 0; c < 60; ++c) {
      int n = 1 + int(rng() % 2), m = 1 + int(rng() % 2), p = int(rng() % 3);
      bool in_ord = v == SpanVariant::AA || v == SpanVariant::AV;
      bool out_ord = v == SpanVariant::AA || v == SpanVariant::VA;
      auto mk = [&](int mid, int cod, bool ordered) {
        NCSetMap f = random_ncset(c2, rng, mid, cod);
        return ordered ? f : forget_order(f).data();
      };
      NCSpan s{mk(p, n, in_ord), mk(p, m, out_ord)};
      NCSpan idm{NCSetMap::identity(c2, m), NCSetMap::identity(c2, m)};
      NCSpan idn{NCSetMap::identity(c2, n), NCSetMap::identity(c2, n)};
      CHECK(ncspan_equiv(v, pullback_span_compose(v, idm, s), s));
      CHECK(ncspan_equiv(v, pullback_span_compose(v, s, idn), s));
    }
  }

  // associativity as classes, sampled, all variants
  for (SpanVariant v : {SpanVariant::AA, SpanVariant::AV, SpanVariant::VA, SpanVariant::VV}) {
    for (int c = 0; c < 80; ++c) {
      int a = 1 + int(rng() % 2), b = 1 + int(rng() % 2), d = 1 + int(rng() % 2),
          e = 1 + int(rng() % 2);
      bool in_ord = v == SpanVariant::AA || v == SpanVariant::AV;
      bool out_ord = v == SpanVariant::AA || v == SpanVariant::VA;
      auto mk = [&](int dom, int cod) {
        int mid = int(rng() % 3);
        NCSetMap i = random_ncset(c2, rng, mid, dom), o = random_ncset(c2, rng, mid, cod);
        return NCSpan{in_ord ? i : forget_order(i).data(), out_ord ? o : forget_order(o).data()};
      };
      NCSpan f = mk(a, b), g = mk(b, d), h = mk(d, e);
      CHECK(ncspan_equiv(v, pullback_span_compose(v, h, pullback_span_compose(v, g, f)),
                         pullback_span_compose(v, pullback_span_compose(v, h, g), f)));
    }
  }

  // the fully unordered variant is insensitive to input fiber order
  for (int c = 0; c < 100; ++c) {
    int n = 1 + int(rng() % 2), m = 1 + int(rng() % 2), l = 1 + int(rng() % 2);
    int p1 = int(rng() % 3), p2 = int(rng() % 3);
    NCSpan s1{random_ncset(c2, rng, p1, n), random_ncset(c2, rng, p1, m)};
    NCSpan s2{random_ncset(c2, rng, p2, m), random_ncset(c2, rng, p2, l)};
    NCSpan r1{forget_order(s1.in_leg).data(), forget_order(s1.out_leg).data()};
    NCSpan r2{forget_order(s2.in_leg).data(), forget_order(s2.out_leg).data()};
    CHECK(ncspan_equiv(SpanVariant::VV, pullback_span_compose(SpanVariant::VV, s2, s1),
                       pullback_span_compose(SpanVariant::VV, r2, r1)));
  }
}

TEST_CASE("span class keys separate classes") {
  auto c2 = FiniteGroup::cyclic(2);
  std::mt19937_64 rng(11);
  SpanContext ctx{CrossedFamily(Family::Symmetric, c2)};
  // ordered-ordered class keys agree with canonical triples
  for (int c = 0; c < 200; ++c) {
    int n = 1 + int(rng() % 2), m = 1 + int(rng() % 2);
    int p = int(rng() % 3);
    NCSpan a{random_ncset(c2, rng, p, n), random_ncset(c2, rng, p, m)};
    NCSpan b{random_ncset(c2, rng, p, n), random_ncset(c2, rng, p, m)};
    bool by_key = ncspan_equiv(SpanVariant::AA, a, b);
    CompositeMorphism ta = ctx.canonicalize(SpanMorphism{to_pair(a.in_leg), to_pair(a.out_leg)});
    CompositeMorphism tb = ctx.canonicalize(SpanMorphism{to_pair(b.in_leg), to_pair(b.out_leg)});
    CHECK(by_key == (ta == tb));
  }
}

TEST_CASE("fiber json format") {
  auto c2 = FiniteGroup::cyclic(2);
  std::mt19937_64 rng(13);
  for (int c = 0; c < 60; ++c) {
    NCSetMap f = random_ncset(c2, rng, int(rng() % 4), 1 + int(rng() % 3));
    CHECK(NCSetMap::from_json(c2, f.to_json()) == f);
  }
  // the documented shape: {"cod": m, "fibers": [[[elt, label], ...], ...]}
  nlohmann::json j = nlohmann::json::parse(R"({"cod":1,"fibers":[[[2,"g1"],[1,"g0"]]]})");
  NCSetMap f = NCSetMap::from_json(c2, j);
  CHECK(f.dom() == 2);
  CHECK(f.fiber(0) == std::vector<FiberEntry>{{1, 1}, {0, 0}});
}
