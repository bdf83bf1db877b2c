#pragma once

// The distributive law (j, phi) -> (j_star(phi), phi_star(j)) moving a
// labelled group element past an order-preserving map, for the symmetric,
// hyperoctahedral, braid and ribbon families with G-labels, plus the
// exhaustive/sampled identity checker for the law.

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "gprop/braid.hpp"
#include "gprop/group.hpp"
#include "gprop/ordered_map.hpp"

namespace gprop {

enum class Family { Symmetric, Hyperoctahedral, Braid, Ribbon };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Middle element of J (x) G on n strands. Symmetric and hyperoctahedral
// elements are labelled permutations (the latter with C2 flags); braid and
// ribbon elements are labelled braid words (the latter with twists).
using Element = std::variant<LabelledPermutation, LabelledBraid>;

int element_size(const Element& e);
Family element_family(const Element& e);

struct CrossedRewrite {
  OrderedMap new_mono;  // j_star(phi): n -> m
  Element new_elt;      // phi_star(j) on n
};

struct CheckReport {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  void note(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 32) failures.push_back(what);
  }
  void merge(const CheckReport& other);
};

// Context object fixing the family and the label group.
class CrossedFamily {
 public:
  CrossedFamily(Family tag, GroupPtr group) : tag_(tag), group_(std::move(group)) {}

  Family tag() const { return tag_; }
  const GroupPtr& group() const { return group_; }
  bool has_flags() const { return tag_ == Family::Hyperoctahedral; }
  bool has_twists() const { return tag_ == Family::Ribbon; }
  bool braid_like() const { return tag_ == Family::Braid || tag_ == Family::Ribbon; }

  Element identity(int n) const;
  Element compose(const Element& a, const Element& b) const;  // b applied first
  Element inverse(const Element& e) const;
  Element tensor(const Element& a, const Element& b) const;
  Permutation underlying_permutation(const Element& e) const;
  bool equal(const Element& a, const Element& b) const;  // braid parts by normal form
  // Canonical representative: braid parts replaced by their normal-form word.
  Element normalize(const Element& e) const;
  bool is_identity(const Element& e) const;
  void require_element(const Element& e) const;  // family/group agreement

  Element from_permutation(const Permutation& p) const;  // trivial decorations
  Element crossing(int n, int i) const;                  // family lift of sigma_i, 1-based i
  Element with_labels(const GroupTuple& labels, int n) const;

  // The distributive law. Underlying sets satisfy
  // pi(j) o phi = new_mono o pi(new_elt); labels, flags and twists pull back
  // along new_mono; braid cores are cabled along the fiber sizes of phi.
  CrossedRewrite rewrite_past_mono(const Element& j, const OrderedMap& phi) const;

  // All elements on n strands (finite families only).
  std::vector<Element> enumerate(int n) const;
  Element sample(std::mt19937_64& rng, int n, int max_len) const;

  // Unit, multiplicativity, mono-composition and tensor compatibility of the
  // law; exhaustive for finite families, sampled for braid families.
  CheckReport check_crossed_identities(int max_n, int samples, unsigned seed) const;

  nlohmann::ordered_json element_to_json(const Element& e) const;
  Element element_from_json(const nlohmann::json& j) const;

 private:
  Family tag_;
  GroupPtr group_;
};

}  // namespace gprop
