#pragma once

// Finite ordinals and order-preserving maps, with tensor (juxtaposition),
// composition, and the canonical decomposition of any such map into layers of
// the generators m: 2 -> 1 and u: 0 -> 1.

#include <string>
#include <vector>

#include <json.hpp>

namespace gprop {

class OrderedMap {
 public:
  OrderedMap() : dom_(0), cod_(0) {}
  // values are 0-based images, must be weakly increasing and < cod.
  OrderedMap(int dom, int cod, std::vector<int> values);

  static OrderedMap identity(int n);
  static OrderedMap mult();                  // 2 -> 1
  static OrderedMap unit();                  // 0 -> 1
  static OrderedMap fold(int b);             // the unique map b -> 1 (b >= 0)
  static OrderedMap from_fiber_sizes(const std::vector<int>& sizes);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  std::vector<int> fiber_sizes() const;
  bool is_identity() const;

  bool operator==(const OrderedMap& other) const = default;
  auto operator<=>(const OrderedMap& other) const = default;

  // Textual form "[v1,v2,...]:n->m" with 1-based values.
  std::string str() const;
  static OrderedMap parse(const std::string& text);

  nlohmann::ordered_json to_json() const;
  static OrderedMap from_json(const nlohmann::json& j);

 private:
  int dom_, cod_;
  std::vector<int> values_;
};

// compose(g, f) = g o f; throws on boundary mismatch.
OrderedMap compose(const OrderedMap& g, const OrderedMap& f);
OrderedMap tensor(const OrderedMap& f, const OrderedMap& g);

// All monotone maps n -> m, lexicographically ordered by value list.
std::vector<OrderedMap> enumerate_mono(int n, int m);
// C(n+m-1, n) for m >= 1; 1 if n == 0 and m == 0; 0 otherwise.
long long count_mono(int n, int m);

enum class GenSym : char { Id1, Mult, Unit };

// Layers of tensors of {id1, m, u}; layers are listed in application order
// (layers.front() is applied first). Recomposing reproduces the map exactly.
struct GeneratorWord {
  std::vector<std::vector<GenSym>> layers;

  static int sym_dom(GenSym s) { return s == GenSym::Mult ? 2 : (s == GenSym::Unit ? 0 : 1); }
  OrderedMap layer_map(int index) const;
  OrderedMap recompose(int dom) const;
  std::string str() const;
};

// Epi part first (one merge per fiber per layer), then a single layer of unit
// insertions. The word is empty exactly for identities.
GeneratorWord decompose(const OrderedMap& f);

}  // namespace gprop
