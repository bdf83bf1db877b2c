#pragma once

// Morphisms of the composite categories built from monotone maps and labelled
// group elements: pairs (element, mono), spans of such pairs, composition of
// spans by generator rewriting, and canonical triples giving decidable
// equality of span classes.

#include <random>

#include "gprop/crossed.hpp"
#include "gprop/ordered_map.hpp"

namespace gprop {

// mono o elt : n -> m (the element is an automorphism of the domain).
struct DJGMorphism {
  Element elt;
  OrderedMap mono;

  int dom() const { return mono.dom(); }
  int cod() const { return mono.cod(); }
};

// Span n <- p -> m; both legs share the middle p as their domain.
struct SpanMorphism {
  DJGMorphism in_leg;   // p -> n
  DJGMorphism out_leg;  // p -> m

  int middle() const { return in_leg.dom(); }
  int dom() const { return in_leg.cod(); }
  int cod() const { return out_leg.cod(); }
};

// Canonical triple: the in-leg group part is absorbed into the middle
// element, which is stored in normal form. Triples compare syntactically.
struct CompositeMorphism {
  OrderedMap in_mono;  // p -> n
  Element elt;         // on p
  OrderedMap out_mono;  // p -> m

  int middle() const { return in_mono.dom(); }
  int dom() const { return in_mono.cod(); }
  int cod() const { return out_mono.cod(); }
  bool operator==(const CompositeMorphism& other) const {
    return in_mono == other.in_mono && out_mono == other.out_mono && elt == other.elt;
  }
};

class SpanContext {
 public:
  explicit SpanContext(CrossedFamily fam) : fam_(std::move(fam)) {}
  const CrossedFamily& family() const { return fam_; }

  DJGMorphism identity_djg(int n) const;
  DJGMorphism djg_from_element(const Element& e) const;
  DJGMorphism djg_from_mono(const OrderedMap& phi) const;
  // g o f via the distributive law; throws on boundary mismatch.
  DJGMorphism compose_djg(const DJGMorphism& g, const DJGMorphism& f) const;
  DJGMorphism tensor_djg(const DJGMorphism& a, const DJGMorphism& b) const;
  bool djg_equal(const DJGMorphism& a, const DJGMorphism& b) const;

  SpanMorphism identity_span(int n) const;
  SpanMorphism span_of(const CompositeMorphism& t) const;
  SpanMorphism span_tensor(const SpanMorphism& a, const SpanMorphism& b) const;

  // Rewrites the cospan (right_out: p -> m, left_out: q -> m) into a span
  // p <- r -> q by processing the left_out leg's generator word
  // innermost-first (one layer per step). A non-null word overrides the
  // canonical decomposition of left_out's mono part, so alternative
  // rewriting strategies are a choice of generator word.
  SpanMorphism cospan_to_span(const DJGMorphism& right_out, const DJGMorphism& left_out,
                              const GeneratorWord* word = nullptr) const;

  CompositeMorphism canonicalize(const SpanMorphism& s) const;
  CompositeMorphism span_compose(const SpanMorphism& s2, const SpanMorphism& s1,
                                 const GeneratorWord* inner_word = nullptr) const;
  CompositeMorphism composite_compose(const CompositeMorphism& g, const CompositeMorphism& f) const;
  CompositeMorphism composite_tensor(const CompositeMorphism& a, const CompositeMorphism& b) const;
  bool span_equiv(const SpanMorphism& a, const SpanMorphism& b) const;

  nlohmann::ordered_json composite_to_json(const CompositeMorphism& t) const;
  CompositeMorphism composite_from_json(const nlohmann::json& j) const;

 private:
  CrossedFamily fam_;
};

// A uniformly random single-generator-per-layer word for the given monotone
// map; recomposing it reproduces the map exactly.
GeneratorWord random_generator_word(const OrderedMap& mono, std::mt19937_64& rng);

}  // namespace gprop
