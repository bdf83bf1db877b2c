#include "gprop/span.hpp"

#include <stdexcept>

namespace gprop {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Unzip permutation on 2b strands: 2t -> t, 2t+1 -> b+t (0-based). Its
// inverse interleaves two consecutive blocks of size b.
Permutation unzip_perm(int b) {
  std::vector<int> img(2 * b);
  for (int t = 0; t < b; ++t) {
    img[2 * t] = t;
    img[2 * t + 1] = b + t;
  }
  return Permutation(std::move(img));
}

}  // namespace

DJGMorphism SpanContext::identity_djg(int n) const {
  return DJGMorphism{fam_.identity(n), OrderedMap::identity(n)};
}

DJGMorphism SpanContext::djg_from_element(const Element& e) const {
  return DJGMorphism{e, OrderedMap::identity(element_size(e))};
}

DJGMorphism SpanContext::djg_from_mono(const OrderedMap& phi) const {
  return DJGMorphism{fam_.identity(phi.dom()), phi};
}

DJGMorphism SpanContext::compose_djg(const DJGMorphism& g, const DJGMorphism& f) const {
  if (f.cod() != g.dom()) fail("composite boundary mismatch");
  CrossedRewrite rw = fam_.rewrite_past_mono(g.elt, f.mono);
  return DJGMorphism{fam_.compose(rw.new_elt, f.elt), compose(g.mono, rw.new_mono)};
}

DJGMorphism SpanContext::tensor_djg(const DJGMorphism& a, const DJGMorphism& b) const {
  return DJGMorphism{fam_.tensor(a.elt, b.elt), tensor(a.mono, b.mono)};
}

bool SpanContext::djg_equal(const DJGMorphism& a, const DJGMorphism& b) const {
  return a.mono == b.mono && fam_.equal(a.elt, b.elt);
}

SpanMorphism SpanContext::identity_span(int n) const {
  return SpanMorphism{identity_djg(n), identity_djg(n)};
}

SpanMorphism SpanContext::span_of(const CompositeMorphism& t) const {
  return SpanMorphism{DJGMorphism{fam_.identity(t.middle()), t.in_mono},
                      DJGMorphism{t.elt, t.out_mono}};
}

SpanMorphism SpanContext::span_tensor(const SpanMorphism& a, const SpanMorphism& b) const {
  return SpanMorphism{tensor_djg(a.in_leg, b.in_leg), tensor_djg(a.out_leg, b.out_leg)};
}

SpanMorphism SpanContext::cospan_to_span(const DJGMorphism& right_out, const DJGMorphism& left_out,
                                         const GeneratorWord* word) const {
  if (right_out.cod() != left_out.cod()) fail("cospan codomain mismatch");

  GeneratorWord layers = word ? *word : decompose(left_out.mono);

  DJGMorphism cur = right_out;
  DJGMorphism in_acc = identity_djg(right_out.dom());

  // Consume the left_out mono one layer at a time, innermost (closest to the
  // shared codomain) first.
  for (auto it = layers.layers.rbegin(); it != layers.layers.rend(); ++it) {
    const std::vector<GenSym>& layer = *it;
    // Split cur's mono along the layer's output slots and apply the
    // per-generator rules; cur's element is pushed into the in-leg.
    std::vector<int> sizes = cur.mono.fiber_sizes();
    if (static_cast<int>(sizes.size()) != static_cast<int>(layer.size()))
      throw std::logic_error("layer boundary mismatch in cospan rewriting");

    DJGMorphism i_piece = identity_djg(0);
    DJGMorphism o_piece = identity_djg(0);
    for (size_t t = 0; t < layer.size(); ++t) {
      int b = sizes[t];
      switch (layer[t]) {
        case GenSym::Id1:
          i_piece = tensor_djg(i_piece, identity_djg(b));
          o_piece = tensor_djg(o_piece, DJGMorphism{fam_.identity(b), OrderedMap::fold(b)});
          break;
        case GenSym::Unit:
          i_piece = tensor_djg(i_piece, DJGMorphism{fam_.identity(0), OrderedMap(0, b, {})});
          break;
        case GenSym::Mult: {
          // The op side of the element evaluates inversely, so the in-leg
          // carries the inverse of the positive unzip lift.
          DJGMorphism unzip{fam_.inverse(fam_.from_permutation(unzip_perm(b))),
                            OrderedMap::from_fiber_sizes(std::vector<int>(b, 2))};
          i_piece = tensor_djg(i_piece, unzip);
          o_piece = tensor_djg(o_piece,
                               DJGMorphism{fam_.identity(2 * b),
                                           tensor(OrderedMap::fold(b), OrderedMap::fold(b))});
          break;
        }
      }
    }
    DJGMorphism strip = djg_from_element(fam_.inverse(cur.elt));
    in_acc = compose_djg(in_acc, compose_djg(strip, i_piece));
    cur = o_piece;
  }

  DJGMorphism out = compose_djg(djg_from_element(fam_.inverse(left_out.elt)), cur);
  return SpanMorphism{in_acc, out};
}

CompositeMorphism SpanContext::canonicalize(const SpanMorphism& s) const {
  Element h = fam_.inverse(s.in_leg.elt);
  Element elt = fam_.normalize(fam_.compose(s.out_leg.elt, h));
  return CompositeMorphism{s.in_leg.mono, std::move(elt), s.out_leg.mono};
}

CompositeMorphism SpanContext::span_compose(const SpanMorphism& s2, const SpanMorphism& s1,
                                            const GeneratorWord* inner_word) const {
  if (s1.cod() != s2.dom()) fail("span boundary mismatch");
  SpanMorphism inner = cospan_to_span(s1.out_leg, s2.in_leg, inner_word);
  return canonicalize(SpanMorphism{compose_djg(s1.in_leg, inner.in_leg),
                                   compose_djg(s2.out_leg, inner.out_leg)});
}

CompositeMorphism SpanContext::composite_compose(const CompositeMorphism& g,
                                                 const CompositeMorphism& f) const {
  return span_compose(span_of(g), span_of(f));
}

CompositeMorphism SpanContext::composite_tensor(const CompositeMorphism& a,
                                                const CompositeMorphism& b) const {
  return canonicalize(span_tensor(span_of(a), span_of(b)));
}

bool SpanContext::span_equiv(const SpanMorphism& a, const SpanMorphism& b) const {
  if (a.dom() != b.dom() || a.cod() != b.cod()) fail("span boundary mismatch");
  return canonicalize(a) == canonicalize(b);
}

nlohmann::ordered_json SpanContext::composite_to_json(const CompositeMorphism& t) const {
  nlohmann::ordered_json j;
  j["family"] = family_name(fam_.tag());
  j["dom"] = t.dom();
  j["cod"] = t.cod();
  j["middle"] = t.middle();
  j["in_mono"] = t.in_mono.to_json();
  j["elt"] = fam_.element_to_json(t.elt);
  j["out_mono"] = t.out_mono.to_json();
  return j;
}

CompositeMorphism SpanContext::composite_from_json(const nlohmann::json& j) const {
  return CompositeMorphism{OrderedMap::from_json(j.at("in_mono")),
                           fam_.element_from_json(j.at("elt")),
                           OrderedMap::from_json(j.at("out_mono"))};
}

GeneratorWord random_generator_word(const OrderedMap& mono, std::mt19937_64& rng) {
  GeneratorWord word;
  std::vector<std::vector<GenSym>> rev_layers;

  // Peel single-generator layers from the output side. A Mult peel splits a
  // fiber of size >= 2 into two nonempty parts, a Unit peel drops an empty
  // fiber; both strictly reduce the distance to the identity.
  std::vector<int> sizes = mono.fiber_sizes();
  while (true) {
    struct Move { int slot; bool is_mult; int split; };
    std::vector<Move> moves;
    for (size_t t = 0; t < sizes.size(); ++t) {
      if (sizes[t] >= 2)
        for (int k = 1; k < sizes[t]; ++k) moves.push_back({static_cast<int>(t), true, k});
      if (sizes[t] == 0) moves.push_back({static_cast<int>(t), false, 0});
    }
    if (moves.empty()) break;
    std::uniform_int_distribution<size_t> d(0, moves.size() - 1);
    Move mv = moves[d(rng)];
    std::vector<GenSym> layer;
    for (size_t t = 0; t < sizes.size(); ++t)
      layer.push_back(static_cast<int>(t) == mv.slot ? (mv.is_mult ? GenSym::Mult : GenSym::Unit)
                                                     : GenSym::Id1);
    rev_layers.push_back(std::move(layer));
    if (mv.is_mult) {
      sizes.insert(sizes.begin() + mv.slot + 1, sizes[mv.slot] - mv.split);
      sizes[mv.slot] = mv.split;
    } else {
      sizes.erase(sizes.begin() + mv.slot);
    }
  }
  word.layers.assign(rev_layers.rbegin(), rev_layers.rend());
  return word;
}

}  // namespace gprop
