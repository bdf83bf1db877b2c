#pragma once

// G-labelled non-commutative sets: set maps whose fibers are ordered (NCSetMap)
// or unordered (GFMap) G-labelled sets, their composition, the isomorphism with
// (element, mono) pairs, star-condition pullback squares, and pullback-based
// span composition for the four span categories mixing the two kinds.

#include <random>

#include "gprop/span.hpp"

namespace gprop {

struct FiberEntry {
  int elt;    // 0-based element of the domain
  int label;  // group element index

  bool operator==(const FiberEntry&) const = default;
  auto operator<=>(const FiberEntry&) const = default;
};

// Map n -> m with an ordered G-labelled fiber over each output; fibers
// partition the domain. Hom(n, 0) is empty for n > 0.
class NCSetMap {
 public:
  NCSetMap() = default;
  NCSetMap(GroupPtr group, int dom, int cod, std::vector<std::vector<FiberEntry>> fibers);

  static NCSetMap identity(GroupPtr g, int n);

  const GroupPtr& group() const { return group_; }
  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const std::vector<FiberEntry>& fiber(int i) const { return fibers_[i]; }
  const std::vector<std::vector<FiberEntry>>& fibers() const { return fibers_; }
  int image_of(int e) const { return image_[e]; }

  bool operator==(const NCSetMap& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && fibers_ == other.fibers_;
  }

  nlohmann::ordered_json to_json() const;
  static NCSetMap from_json(GroupPtr g, const nlohmann::json& j);

 private:
  GroupPtr group_;
  int dom_ = 0, cod_ = 0;
  std::vector<std::vector<FiberEntry>> fibers_;
  std::vector<int> image_;
};

// Left multiplication of every label in an ordered fiber.
std::vector<FiberEntry> label_act(const FiniteGroup& g, int a, const std::vector<FiberEntry>& s);

NCSetMap ncset_compose(const NCSetMap& f2, const NCSetMap& f1);
NCSetMap ncset_tensor(const NCSetMap& a, const NCSetMap& b);
// Block permutation with trivial labels; the symmetry isomorphism.
NCSetMap ncset_symmetry(GroupPtr g, int a, int b);

// The unordered variant; fibers are kept sorted by element.
class GFMap {
 public:
  GFMap() = default;
  explicit GFMap(NCSetMap data);

  const NCSetMap& data() const { return data_; }
  int dom() const { return data_.dom(); }
  int cod() const { return data_.cod(); }

  bool operator==(const GFMap& other) const { return data_ == other.data_; }

 private:
  NCSetMap data_;
};

GFMap forget_order(const NCSetMap& f);
GFMap gf_identity(GroupPtr g, int n);
GFMap gf_compose(const GFMap& f2, const GFMap& f1);
GFMap gf_tensor(const GFMap& a, const GFMap& b);

// Prop-iso with (element, mono) pairs in the symmetric family: the mono part
// has the fiber sizes, the permutation sends each element to its slot in the
// block layout, and labels sit at slots (output-indexed).
DJGMorphism to_pair(const NCSetMap& f);
NCSetMap from_pair(const GroupPtr& g, const DJGMorphism& d);

std::vector<NCSetMap> enumerate_ncset(GroupPtr g, int n, int m);
std::vector<GFMap> enumerate_gf(GroupPtr g, int n, int m);
NCSetMap random_ncset(GroupPtr g, std::mt19937_64& rng, int n, int m);
// Sum over underlying set maps of prod |fiber|! * |G|^n.
long long ncset_hom_count(int n, int m, int group_order);

// A horizontal and a vertical morphism with common codomain complete to a
// unique square whose underlying sets form a pullback and whose fiber data is
// lifted through the two fiber-isomorphism conditions. The ambient double
// category fixes which edges carry order.
enum class Ambient { AsAs, V, H, GG };  // (horizontal, vertical) order data:
                                        // AsAs: both ordered; V: vertical only;
                                        // H: horizontal only; GG: neither

struct Bimorphism {
  // bottom: m -> q (horizontal), right: p -> q (vertical),
  // top: r -> p (horizontal), left: r -> m (vertical); r is the pullback.
  NCSetMap bottom, right, top, left;
};

Bimorphism star_complete(const NCSetMap& horizontal, const NCSetMap& vertical, Ambient ambient);

// Span n <- p -> m of labelled set maps; the variant fixes which legs carry
// fiber order: AA both (GF(as) on both sides), AV ordered in-leg only,
// VA ordered out-leg only, VV neither.
enum class SpanVariant { AA, AV, VA, VV };

struct NCSpan {
  NCSetMap in_leg;   // p -> n
  NCSetMap out_leg;  // p -> m

  int middle() const { return in_leg.dom(); }
  int dom() const { return in_leg.cod(); }
  int cod() const { return out_leg.cod(); }
};

NCSpan pullback_span_compose(SpanVariant variant, const NCSpan& s2, const NCSpan& s1);
// Complete invariant of the span class modulo labelled middle bijections.
std::string ncspan_class_key(SpanVariant variant, const NCSpan& s);
bool ncspan_equiv(SpanVariant variant, const NCSpan& a, const NCSpan& b);

}  // namespace gprop
