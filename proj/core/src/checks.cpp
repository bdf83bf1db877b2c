#include "gprop/checks.hpp"

#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace gprop {

namespace {

// Exhaustive associativity and identity via index-encoded composition tables;
// morphism values are compared through their table index, so the exhaustive
// triple loop is pure lookups.
template <typename M, typename Hom, typename Compose, typename Identity>
void table_axioms(CheckReport& rep, const std::string& name, int max_arity, const Hom& hom,
                  const Compose& comp, const Identity& ident) {
  std::vector<std::vector<std::vector<M>>> H(max_arity + 1);
  std::vector<std::vector<std::map<M, int>>> index(max_arity + 1);
  for (int a = 0; a <= max_arity; ++a) {
    H[a].resize(max_arity + 1);
    index[a].resize(max_arity + 1);
    for (int b = 0; b <= max_arity; ++b) {
      H[a][b] = hom(a, b);
      for (size_t i = 0; i < H[a][b].size(); ++i) index[a][b][H[a][b][i]] = static_cast<int>(i);
    }
  }
  // identity laws
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b)
      for (const auto& f : H[a][b]) {
        rep.note(comp(ident(b), f) == f, name + ": left identity");
        rep.note(comp(f, ident(a)) == f, name + ": right identity");
      }
  // composition tables
  std::vector<int> arities(max_arity + 1);
  for (int a = 0; a <= max_arity; ++a) arities[a] = a;
  std::map<std::tuple<int, int, int>, std::vector<int>> table;
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b)
      for (int c = 0; c <= max_arity; ++c) {
        auto& t = table[{a, b, c}];
        t.resize(H[a][b].size() * H[b][c].size());
        for (size_t i = 0; i < H[a][b].size(); ++i)
          for (size_t j = 0; j < H[b][c].size(); ++j) {
            M composed = comp(H[b][c][j], H[a][b][i]);
            t[i * H[b][c].size() + j] = index[a][c].at(composed);
          }
      }
  // associativity by lookups
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b)
      for (int c = 0; c <= max_arity; ++c)
        for (int d = 0; d <= max_arity; ++d) {
          const auto& t_ab_c = table.at({a, b, c});
          const auto& t_ac_d = table.at({a, c, d});
          const auto& t_bc_d = table.at({b, c, d});
          const auto& t_ab_d = table.at({a, b, d});
          size_t nab = H[a][b].size(), nbc = H[b][c].size(), ncd = H[c][d].size();
          long long bad = 0;
          for (size_t i = 0; i < nab; ++i)
            for (size_t j = 0; j < nbc; ++j) {
              int gf = t_ab_c[i * nbc + j];
              for (size_t k = 0; k < ncd; ++k) {
                int hg = t_bc_d[j * ncd + k];
                if (t_ac_d[gf * ncd + k] != t_ab_d[i * H[b][d].size() + hg]) ++bad;
              }
            }
          rep.checked += static_cast<long long>(nab) * nbc * ncd;
          if (bad)
            rep.note(false, name + ": associativity failures at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + "," +
                                std::to_string(d) + ")");
        }
}

}  // namespace

CheckReport run_category_suite(const GroupPtr& group, int exhaustive_arity, int sample_arity,
                               int samples, unsigned seed) {
  CheckReport rep;
  rep.name = "category axioms";
  std::mt19937_64 rng(seed);

  // monotone maps
  table_axioms<OrderedMap>(
      rep, "monotone", exhaustive_arity, [](int a, int b) { return enumerate_mono(a, b); },
      [](const OrderedMap& g, const OrderedMap& f) { return compose(g, f); },
      [](int n) { return OrderedMap::identity(n); });

  // labelled permutations
  {
    CrossedFamily fam(Family::Symmetric, group);
    struct Key {
      LabelledPermutation p;
      bool operator<(const Key& o) const {
        if (!(p.perm == o.p.perm)) return p.perm < o.p.perm;
        return p.labels.entries < o.p.labels.entries;
      }
      bool operator==(const Key& o) const { return p == o.p; }
    };
    table_axioms<Key>(
        rep, "labelled permutations", exhaustive_arity,
        [&](int a, int b) {
          std::vector<Key> v;
          if (a == b)
            for (auto& e : fam.enumerate(a)) v.push_back(Key{std::get<LabelledPermutation>(e)});
          return v;
        },
        [&](const Key& g, const Key& f) {
          return Key{std::get<LabelledPermutation>(fam.compose(g.p, f.p))};
        },
        [&](int n) { return Key{std::get<LabelledPermutation>(fam.identity(n))}; });
  }

  // (element, mono) pairs
  SpanContext ctx(CrossedFamily(Family::Symmetric, group));
  {
    struct Key {
      LabelledPermutation elt;
      OrderedMap mono;
      bool operator<(const Key& o) const {
        if (!(mono == o.mono)) return mono < o.mono;
        if (!(elt.perm == o.elt.perm)) return elt.perm < o.elt.perm;
        return elt.labels.entries < o.elt.labels.entries;
      }
      bool operator==(const Key& o) const { return mono == o.mono && elt == o.elt; }
    };
    const CrossedFamily& fam = ctx.family();
    table_axioms<Key>(
        rep, "pairs", exhaustive_arity,
        [&](int a, int b) {
          std::vector<Key> v;
          for (const auto& mono : enumerate_mono(a, b))
            for (const auto& e : fam.enumerate(a))
              v.push_back(Key{std::get<LabelledPermutation>(e), mono});
          return v;
        },
        [&](const Key& g, const Key& f) {
          DJGMorphism r = ctx.compose_djg(DJGMorphism{g.elt, g.mono}, DJGMorphism{f.elt, f.mono});
          return Key{std::get<LabelledPermutation>(r.elt), r.mono};
        },
        [&](int n) {
          DJGMorphism r = ctx.identity_djg(n);
          return Key{std::get<LabelledPermutation>(r.elt), r.mono};
        });
  }

  // ordered labelled set maps
  {
    struct Key {
      NCSetMap f;
      bool operator<(const Key& o) const {
        if (f.dom() != o.f.dom()) return f.dom() < o.f.dom();
        if (f.cod() != o.f.cod()) return f.cod() < o.f.cod();
        return f.fibers() < o.f.fibers();
      }
      bool operator==(const Key& o) const { return f == o.f; }
    };
    table_axioms<Key>(
        rep, "ordered labelled set maps", exhaustive_arity,
        [&](int a, int b) {
          std::vector<Key> v;
          for (auto& f : enumerate_ncset(group, a, b)) v.push_back(Key{std::move(f)});
          return v;
        },
        [&](const Key& g, const Key& f) { return Key{ncset_compose(g.f, f.f)}; },
        [&](int n) { return Key{NCSetMap::identity(group, n)}; });
  }

  // unordered labelled set maps
  {
    struct Key {
      GFMap f;
      bool operator<(const Key& o) const {
        if (f.dom() != o.f.dom()) return f.dom() < o.f.dom();
        if (f.cod() != o.f.cod()) return f.cod() < o.f.cod();
        return f.data().fibers() < o.f.data().fibers();
      }
      bool operator==(const Key& o) const { return f == o.f; }
    };
    table_axioms<Key>(
        rep, "unordered labelled set maps", exhaustive_arity,
        [&](int a, int b) {
          std::vector<Key> v;
          for (auto& f : enumerate_gf(group, a, b)) v.push_back(Key{std::move(f)});
          return v;
        },
        [&](const Key& g, const Key& f) { return Key{gf_compose(g.f, f.f)}; },
        [&](int n) { return Key{gf_identity(group, n)}; });
  }

  // sampled associativity and interchange at the larger arity
  const CrossedFamily& fam = ctx.family();
  std::uniform_int_distribution<int> ar(0, sample_arity);
  auto rand_mono = [&](int a, int b) {
    auto v = enumerate_mono(a, b);
    return v.empty() ? OrderedMap::identity(0) : v[rng() % v.size()];
  };
  for (int s = 0; s < samples; ++s) {
    int a = ar(rng), b = ar(rng), c = ar(rng), d = ar(rng);
    if ((b == 0 && a > 0) || (c == 0 && b > 0) || (d == 0 && c > 0)) continue;
    DJGMorphism f{fam.sample(rng, a, 4), rand_mono(a, b)};
    DJGMorphism g{fam.sample(rng, b, 4), rand_mono(b, c)};
    DJGMorphism h{fam.sample(rng, c, 4), rand_mono(c, d)};
    rep.note(ctx.djg_equal(ctx.compose_djg(h, ctx.compose_djg(g, f)),
                           ctx.compose_djg(ctx.compose_djg(h, g), f)),
             "pairs: sampled associativity");
    NCSetMap nf = random_ncset(group, rng, a, std::max(b, 1));
    NCSetMap ng = random_ncset(group, rng, std::max(b, 1), std::max(c, 1));
    NCSetMap nh = random_ncset(group, rng, std::max(c, 1), std::max(d, 1));
    rep.note(ncset_compose(nh, ncset_compose(ng, nf)) == ncset_compose(ncset_compose(nh, ng), nf),
             "labelled set maps: sampled associativity");
    // interchange
    int a2 = ar(rng), b2 = std::max(ar(rng), a2 > 0 ? 1 : 0), c2 = std::max(ar(rng), 1);
    DJGMorphism f1{fam.sample(rng, a, 4), rand_mono(a, std::max(b, 1))};
    DJGMorphism g1{fam.sample(rng, std::max(b, 1), 4), rand_mono(std::max(b, 1), std::max(c, 1))};
    DJGMorphism f2{fam.sample(rng, a2, 4), rand_mono(a2, b2)};
    DJGMorphism g2{fam.sample(rng, b2, 4), rand_mono(b2, c2)};
    rep.note(ctx.djg_equal(ctx.compose_djg(ctx.tensor_djg(g1, g2), ctx.tensor_djg(f1, f2)),
                           ctx.tensor_djg(ctx.compose_djg(g1, f1), ctx.compose_djg(g2, f2))),
             "pairs: interchange");
  }

  // block-permutation symmetry of the ordered maps: hexagon and naturality
  for (int s = 0; s < samples; ++s) {
    int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 2),
        c = 1 + static_cast<int>(rng() % 2);
    NCSetMap sym_ab = ncset_symmetry(group, a, b);
    NCSetMap sym_ac = ncset_symmetry(group, a, c);
    NCSetMap idb = NCSetMap::identity(group, b);
    NCSetMap ida = NCSetMap::identity(group, a);
    // hexagon: sym_{a,b+c} = (id_b (+) sym_ac) o (sym_ab (+) id_c)
    NCSetMap lhs = ncset_symmetry(group, a, b + c);
    NCSetMap rhs = ncset_compose(ncset_tensor(idb, sym_ac),
                                 ncset_tensor(sym_ab, NCSetMap::identity(group, c)));
    rep.note(lhs == rhs, "block symmetry hexagon");
    NCSetMap f = random_ncset(group, rng, a, c);
    NCSetMap g = random_ncset(group, rng, b, 1 + static_cast<int>(rng() % 2));
    // naturality: sym o (f (+) g) = (g (+) f) o sym
    NCSetMap nat_l = ncset_compose(ncset_symmetry(group, f.cod(), g.cod()), ncset_tensor(f, g));
    NCSetMap nat_r = ncset_compose(ncset_tensor(g, f), ncset_symmetry(group, f.dom(), g.dom()));
    rep.note(nat_l == nat_r, "block symmetry naturality");
  }

  return rep;
}

CheckReport run_iso_suite(const GroupPtr& group, unsigned seed) {
  CheckReport rep;
  rep.name = "pairs/labelled-sets isomorphism";
  SpanContext ctx(CrossedFamily(Family::Symmetric, group));

  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : enumerate_ncset(group, n, m)) {
        DJGMorphism d = to_pair(f);
        rep.note(from_pair(group, d) == f, "round trip at " + std::to_string(n) + "->" +
                                               std::to_string(m));
      }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l)
        for (const auto& f : enumerate_ncset(group, n, m))
          for (const auto& g : enumerate_ncset(group, m, l)) {
            rep.note(ctx.djg_equal(to_pair(ncset_compose(g, f)),
                                   ctx.compose_djg(to_pair(g), to_pair(f))),
                     "functoriality");
          }
  // monoidality
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 200; ++s) {
    int n1 = rng() % 3, m1 = 1 + rng() % 2, n2 = rng() % 3, m2 = 1 + rng() % 2;
    NCSetMap f = random_ncset(group, rng, n1, m1), g = random_ncset(group, rng, n2, m2);
    rep.note(ctx.djg_equal(to_pair(ncset_tensor(f, g)), ctx.tensor_djg(to_pair(f), to_pair(g))),
             "monoidality");
  }
  // hom counts: closed form, pair enumeration, set-map enumeration + formula
  for (int n = 0; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      long long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      long long gl = 1;
      for (int k = 0; k < n; ++k) gl *= group->order();
      long long closed = count_mono(n, m) * fact * gl;
      long long by_pairs = count_mono(n, m) * static_cast<long long>(all_labelled_perms(group, n, false).size());
      long long by_sets = static_cast<long long>(enumerate_ncset(group, n, m).size());
      long long by_formula = ncset_hom_count(n, m, group->order());
      rep.note(closed == by_pairs && by_pairs == by_sets && by_sets == by_formula,
               "hom count at (" + std::to_string(n) + "," + std::to_string(m) + "): " +
                   std::to_string(closed) + "/" + std::to_string(by_pairs) + "/" +
                   std::to_string(by_sets) + "/" + std::to_string(by_formula));
    }
  return rep;
}

CheckReport run_braid_suite(int words, int max_strands, int max_len, unsigned seed) {
  CheckReport rep;
  rep.name = "braid word problem";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> strand_d(2, max_strands);
  for (int c = 0; c < words; ++c) {
    int n = strand_d(rng);
    BraidWord w = random_braid_word(rng, n, max_len);
    rep.note(braid_normal_form(braid_concat(w, w.inverse())).is_identity(),
             "w * reverse-inverse(w) is trivial");
    GarsideNF nf = braid_normal_form(w);
    rep.note(braid_normal_form(nf.word()) == nf, "normal form idempotent");

    // free insertion and braid relation moves preserve the normal form
    std::vector<int> letters = w.letters();
    size_t at = letters.empty() ? 0 : rng() % (letters.size() + 1);
    int gen = 1 + static_cast<int>(rng() % (n - 1));
    letters.insert(letters.begin() + at, {gen, -gen});
    rep.note(braid_normal_form(BraidWord(n, letters)) == nf, "free insertion invariance");

    std::vector<int> rel = w.letters();
    if (n >= 3) {
      int i = 1 + static_cast<int>(rng() % (n - 2));
      size_t at2 = rel.empty() ? 0 : rng() % (rel.size() + 1);
      // insert sigma_i sigma_{i+1} sigma_i (sigma_{i+1} sigma_i sigma_{i+1})^-1
      std::vector<int> blob{i, i + 1, i, -(i + 1), -i, -(i + 1)};
      rel.insert(rel.begin() + at2, blob.begin(), blob.end());
      rep.note(braid_normal_form(BraidWord(n, rel)) == nf, "braid relation invariance");
    }
    BraidWord v = random_braid_word(rng, n, max_len);
    rep.note(compose(w.underlying_permutation(), v.underlying_permutation()) ==
                 braid_concat(w, v).underlying_permutation(),
             "permutation projection is a homomorphism");
  }
  return rep;
}

CheckReport run_strategy_suite(const GroupPtr& group, Family family, int samples, unsigned seed) {
  CheckReport rep;
  rep.name = "rewriting strategy independence (" + family_name(family) + ")";
  SpanContext ctx(CrossedFamily(family, group));
  const CrossedFamily& fam = ctx.family();
  std::mt19937_64 rng(seed);
  auto rand_mono = [&](int a, int b) {
    auto v = enumerate_mono(a, b);
    return v[rng() % v.size()];
  };
  for (int c = 0; c < samples; ++c) {
    int n = 1 + rng() % 3, m = 1 + rng() % 3, l = 1 + rng() % 3;
    int p1 = rng() % 4, p2 = rng() % 4;
    SpanMorphism f{DJGMorphism{fam.sample(rng, p1, 4), rand_mono(p1, n)},
                   DJGMorphism{fam.sample(rng, p1, 4), rand_mono(p1, m)}};
    SpanMorphism g{DJGMorphism{fam.sample(rng, p2, 4), rand_mono(p2, m)},
                   DJGMorphism{fam.sample(rng, p2, 4), rand_mono(p2, l)}};
    CompositeMorphism canon = ctx.span_compose(g, f);
    GeneratorWord word = random_generator_word(g.in_leg.mono, rng);
    bool word_ok = word.recompose(g.in_leg.mono.dom()) == g.in_leg.mono;
    CompositeMorphism alt = ctx.span_compose(g, f, &word);
    rep.note(word_ok && canon == alt, "strategy independence case " + std::to_string(c));
  }
  return rep;
}

namespace {

CompositeMorphism pullback_route(const SpanContext& ctx, const GroupPtr& group,
                                 const SpanMorphism& s1, const SpanMorphism& s2) {
  NCSpan n1{from_pair(group, s1.in_leg), from_pair(group, s1.out_leg)};
  NCSpan n2{from_pair(group, s2.in_leg), from_pair(group, s2.out_leg)};
  NCSpan comp = pullback_span_compose(SpanVariant::AA, n2, n1);
  return ctx.canonicalize(SpanMorphism{to_pair(comp.in_leg), to_pair(comp.out_leg)});
}

}  // namespace

CheckReport run_dual_oracle_sampled(const GroupPtr& group, int samples, int max_arity,
                                    unsigned seed) {
  CheckReport rep;
  rep.name = "span composition dual oracle (sampled)";
  SpanContext ctx(CrossedFamily(Family::Symmetric, group));
  const CrossedFamily& fam = ctx.family();
  std::mt19937_64 rng(seed);
  auto rand_mono = [&](int a, int b) {
    auto v = enumerate_mono(a, b);
    return v[rng() % v.size()];
  };
  std::uniform_int_distribution<int> ar(1, max_arity);
  std::uniform_int_distribution<int> mid(0, max_arity);
  for (int c = 0; c < samples; ++c) {
    int n = ar(rng), m = ar(rng), l = ar(rng), p1 = mid(rng), p2 = mid(rng);
    SpanMorphism s1{DJGMorphism{fam.sample(rng, p1, 4), rand_mono(p1, n)},
                    DJGMorphism{fam.sample(rng, p1, 4), rand_mono(p1, m)}};
    SpanMorphism s2{DJGMorphism{fam.sample(rng, p2, 4), rand_mono(p2, m)},
                    DJGMorphism{fam.sample(rng, p2, 4), rand_mono(p2, l)}};
    rep.note(ctx.span_compose(s2, s1) == pullback_route(ctx, group, s1, s2),
             "dual oracle case " + std::to_string(c));
  }
  return rep;
}

CheckReport run_dual_oracle_exhaustive(const GroupPtr& group, int max_arity, int threads) {
  CheckReport total;
  total.name = "span composition dual oracle (exhaustive)";
  SpanContext ctx(CrossedFamily(Family::Symmetric, group));
  const CrossedFamily& fam = ctx.family();

  std::vector<std::vector<Element>> elems(max_arity + 1);
  for (int p = 0; p <= max_arity; ++p) elems[p] = fam.enumerate(p);
  std::vector<std::vector<std::vector<OrderedMap>>> monos(max_arity + 1);
  for (int p = 0; p <= max_arity; ++p) {
    monos[p].resize(max_arity + 1);
    for (int n = 0; n <= max_arity; ++n) monos[p][n] = enumerate_mono(p, n);
  }

  struct InnerJob {
    int m, p1, p2;
    const Element* e1;
    const OrderedMap* phi1out;
    const OrderedMap* phi2in;
  };
  std::vector<InnerJob> jobs;
  for (int m = 0; m <= max_arity; ++m)
    for (int p1 = 0; p1 <= max_arity; ++p1)
      for (int p2 = 0; p2 <= max_arity; ++p2)
        for (const auto& phi1out : monos[p1][m])
          for (const auto& e1 : elems[p1])
            for (const auto& phi2in : monos[p2][m])
              jobs.push_back({m, p1, p2, &e1, &phi1out, &phi2in});

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;

  auto worker = [&](size_t lo, size_t hi) {
    CheckReport rep;
    for (size_t jidx = lo; jidx < hi; ++jidx) {
      const InnerJob& job = jobs[jidx];
      DJGMorphism alpha{*job.e1, *job.phi1out};
      DJGMorphism beta{fam.identity(job.p2), *job.phi2in};
      SpanMorphism inner = ctx.cospan_to_span(alpha, beta);
      Bimorphism pb = star_complete(from_pair(group, alpha), from_pair(group, beta), Ambient::AsAs);

      // The pair (i, o) agrees between the two routes iff the leg monos match
      // and out_pb^-1 out_rw == in_pb^-1 in_rw on middle elements, by
      // cancellation in the canonical triples; precompute both sides.
      std::vector<Element> right_i;
      std::vector<bool> mono_ok_i;
      for (int n = 0; n <= max_arity; ++n)
        for (const auto& phi1in : monos[job.p1][n]) {
          DJGMorphism leg{fam.identity(job.p1), phi1in};
          DJGMorphism in_rw = ctx.compose_djg(leg, inner.in_leg);
          DJGMorphism in_pb = to_pair(ncset_compose(from_pair(group, leg), pb.left));
          mono_ok_i.push_back(in_rw.mono == in_pb.mono);
          right_i.push_back(fam.compose(fam.inverse(in_pb.elt), in_rw.elt));
        }
      std::vector<Element> left_o;
      std::vector<bool> mono_ok_o;
      for (int l = 0; l <= max_arity; ++l)
        for (const auto& phi2out : monos[job.p2][l])
          for (const auto& e2 : elems[job.p2]) {
            DJGMorphism leg{e2, phi2out};
            DJGMorphism out_rw = ctx.compose_djg(leg, inner.out_leg);
            DJGMorphism out_pb = to_pair(ncset_compose(from_pair(group, leg), pb.top));
            mono_ok_o.push_back(out_rw.mono == out_pb.mono);
            left_o.push_back(fam.compose(fam.inverse(out_pb.elt), out_rw.elt));
          }
      for (size_t i = 0; i < right_i.size(); ++i) {
        const auto& ri = std::get<LabelledPermutation>(right_i[i]);
        for (size_t o = 0; o < left_o.size(); ++o) {
          bool ok = mono_ok_i[i] && mono_ok_o[o] && std::get<LabelledPermutation>(left_o[o]) == ri;
          if (ok) {
            ++rep.checked;
          } else {
            rep.note(false, "dual oracle disagreement (inner job " + std::to_string(jidx) +
                                ", pair " + std::to_string(i) + "," + std::to_string(o) + ")");
          }
        }
      }
    }
    return rep;
  };

  std::vector<std::future<CheckReport>> futs;
  size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    size_t lo = t * chunk, hi = std::min(jobs.size(), (t + 1) * chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, worker, lo, hi));
  }
  for (auto& f : futs) total.merge(f.get());
  return total;
}

std::vector<CheckReport> run_semantics_suite(int samples, int max_arity, unsigned seed) {
  std::vector<CheckReport> out;
  auto c2 = FiniteGroup::cyclic(2);
  auto s3 = FiniteGroup::symmetric(3);
  auto triv = FiniteGroup::trivial();

  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) == s3->identity()) {
      transposition = x;
      break;
    }
  BimonoidModel kc2 = group_algebra_model(5, c2, c2, {{0, 1}, {0, 1}});
  BimonoidModel ks3 =
      group_algebra_model(5, s3, c2, conjugation_action(*s3, {s3->identity(), transposition}));
  BimonoidModel odd = odd_generator_model(5);

  auto add_eval = [&](const EvalReport& er, const std::string& name) {
    CheckReport rep;
    rep.name = name;
    rep.checked = er.checked;
    for (const auto& f : er.failures)
      rep.failures.push_back(f.what + " (" + std::to_string(f.diff_entries) + " entries differ)");
    out.push_back(std::move(rep));
  };

  {
    CheckReport rep = verify_model(kc2);
    rep.name = "group algebra model axioms (order 2 carrier)";
    out.push_back(rep);
    CheckReport rep2 = verify_model(ks3);
    rep2.name = "group algebra model axioms (order 6 carrier, conjugation action)";
    out.push_back(rep2);
    CheckReport rep3 = verify_model(odd);
    rep3.name = "sign-braided odd generator model axioms";
    out.push_back(rep3);
  }

  CrossedFamily sym_c2(Family::Symmetric, c2);
  add_eval(check_functoriality(kc2, sym_c2, EvalCategory::DPG, samples, max_arity, seed + 1),
           "functoriality: pairs category on the order-2 carrier");
  add_eval(check_functoriality(kc2, sym_c2, EvalCategory::Spans, samples, max_arity, seed + 2),
           "functoriality: spans on the order-2 carrier");
  add_eval(check_functoriality(kc2, sym_c2, EvalCategory::NCSets, samples, max_arity, seed + 3),
           "functoriality: labelled set maps on the order-2 carrier");
  add_eval(check_functoriality(ks3, sym_c2, EvalCategory::DPG, samples, max_arity, seed + 4),
           "functoriality: pairs category on the order-6 carrier");
  add_eval(check_functoriality(ks3, sym_c2, EvalCategory::Spans, samples, max_arity, seed + 5),
           "functoriality: spans on the order-6 carrier");
  add_eval(check_functoriality(ks3, sym_c2, EvalCategory::NCSets, samples, max_arity, seed + 6),
           "functoriality: labelled set maps on the order-6 carrier");
  add_eval(check_rewrite_soundness(kc2, sym_c2, samples, seed + 7), "rewrite soundness (order-2 carrier)");
  add_eval(check_rewrite_soundness(ks3, sym_c2, samples, seed + 8), "rewrite soundness (order-6 carrier)");

  // mutation: a non-coassociative comultiplication must be caught
  {
    BimonoidModel bad = kc2;
    bad.comult.at(1 * 2 + 1, 1) = 0;
    bad.comult.at(1 * 2 + 0, 1) = 1;
    CheckReport rep;
    rep.name = "mutation detection (corrupted comultiplication)";
    bool verify_caught = !verify_model(bad).pass();
    EvalReport er = check_functoriality(bad, sym_c2, EvalCategory::Spans, samples, max_arity, seed + 9);
    rep.checked = er.checked + 1;
    if (!verify_caught) rep.failures.push_back("verifier accepted a non-coassociative model");
    if (er.pass()) rep.failures.push_back("functoriality failed to detect the corrupted model");
    out.push_back(std::move(rep));
  }

  // involutive suite on the order-6 carrier
  {
    CheckReport rep;
    rep.name = "involutive suite";
    const ZpMat& io = *ks3.involution;
    rep.note(matmul(io, io) == ZpMat::identity(5, 6), "involution squares to identity");
    ZpMat flip(5, 36, 36);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) flip.at(y * 6 + x, x * 6 + y) = 1;
    rep.note(matmul(io, ks3.mult) == matmul(ks3.mult, matmul(kron(io, io), flip)),
             "anti-automorphism matrix identity");
    out.push_back(rep);
    CrossedFamily hyp(Family::Hyperoctahedral, c2);
    add_eval(check_functoriality(ks3, hyp, EvalCategory::DPG, samples, max_arity, seed + 10),
             "functoriality: flagged pairs on the order-6 carrier");
    add_eval(check_functoriality(ks3, hyp, EvalCategory::Spans, samples, max_arity, seed + 11),
             "functoriality: flagged spans on the order-6 carrier");
    add_eval(check_rewrite_soundness(ks3, hyp, samples, seed + 12),
             "rewrite soundness (flagged, order-6 carrier)");
  }

  // balanced/ribbon suite
  {
    CrossedFamily rib_triv(Family::Ribbon, triv);
    add_eval(check_functoriality(odd, rib_triv, EvalCategory::DPG, samples, max_arity, seed + 13),
             "functoriality: ribbon pairs on the sign-braided model");
    add_eval(check_functoriality(odd, rib_triv, EvalCategory::Spans, samples, max_arity, seed + 14),
             "functoriality: ribbon spans on the sign-braided model");
    add_eval(check_rewrite_soundness(odd, rib_triv, samples, seed + 15),
             "rewrite soundness (ribbon, sign-braided model)");
    CrossedFamily rib_c2(Family::Ribbon, c2);
    add_eval(check_functoriality(kc2, rib_c2, EvalCategory::Spans, samples, max_arity, seed + 16),
             "functoriality: ribbon spans on the order-2 carrier (trivial twist)");

    // zero-twist ribbons evaluate like their underlying braids
    CheckReport rep;
    rep.name = "zero-twist ribbons match braids";
    std::mt19937_64 rng(seed + 17);
    CrossedFamily braid_c2(Family::Braid, c2);
    for (int s = 0; s < samples; ++s) {
      int n = 1 + static_cast<int>(rng() % max_arity);
      Element b = braid_c2.sample(rng, n, 6);
      const auto& lb = std::get<LabelledBraid>(b);
      LabelledBraid rb_elt{lb.labels, lb.braid, std::vector<int>(n, 0)};
      rep.note(eval_element(kc2, b) == eval_element(kc2, Element{rb_elt}),
               "zero-twist agreement case " + std::to_string(s));
    }
    out.push_back(std::move(rep));

    // sign braiding: crossings square to the identity and satisfy the hexagon
    CheckReport rep2;
    rep2.name = "sign braiding coherence";
    CrossedFamily rib2(Family::Ribbon, triv);
    Element cr = rib2.crossing(2, 1);
    ZpMat c_mat = eval_element(odd, cr);
    rep2.note(matmul(c_mat, c_mat) == ZpMat::identity(5, 4), "crossing squares to identity");
    // hexagon instance on three strands: c_{1,23} as two adjacent crossings
    Element c12 = rib2.tensor(cr, rib2.identity(1));
    Element c23 = rib2.tensor(rib2.identity(1), cr);
    Element block = rib2.from_permutation(
        Permutation({2, 0, 1}));  // strand 1 past the block (2,3)
    rep2.note(eval_element(odd, block) ==
                  matmul(eval_element(odd, c23), eval_element(odd, c12)),
              "hexagon instance");
    out.push_back(std::move(rep2));
  }

  // evaluation respects span equivalence
  {
    CheckReport rep;
    rep.name = "evaluation respects span equivalence";
    std::mt19937_64 rng(seed + 18);
    SpanContext ctx(sym_c2);
    const CrossedFamily& fam = ctx.family();
    auto rand_mono = [&](int a, int b) {
      auto v = enumerate_mono(a, b);
      return v[rng() % v.size()];
    };
    for (int s = 0; s < samples; ++s) {
      int n = 1 + static_cast<int>(rng() % max_arity), m = 1 + static_cast<int>(rng() % max_arity);
      int p = static_cast<int>(rng() % (max_arity + 1));
      SpanMorphism sp{DJGMorphism{fam.sample(rng, p, 4), rand_mono(p, n)},
                      DJGMorphism{fam.sample(rng, p, 4), rand_mono(p, m)}};
      Element h = fam.sample(rng, p, 4);
      SpanMorphism sp2{ctx.compose_djg(sp.in_leg, ctx.djg_from_element(h)),
                       ctx.compose_djg(sp.out_leg, ctx.djg_from_element(h))};
      bool equiv = ctx.span_equiv(sp, sp2);
      bool same_eval = eval_span_value(kc2, fam, sp) == eval_span_value(kc2, fam, sp2);
      rep.note(equiv && same_eval, "span equivalence / evaluation case " + std::to_string(s));
    }
    out.push_back(std::move(rep));
  }

  return out;
}

nlohmann::ordered_json report_to_json(const CheckReport& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures;
  j["pass"] = rep.pass();
  return j;
}

}  // namespace gprop
