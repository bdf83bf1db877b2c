#pragma once

// Finite groups as multiplication tables, permutations, and G-labelled
// permutations (elements of G^n x| Sigma_n, optionally with C2 flags for the
// hyperoctahedral variant).
//
// Composition convention, used everywhere in this library: compose(a, b)
// applies b first and a second, exactly like function composition a o b.
// Permutations act on tuples by (sigma . x)_i = x_{sigma^-1(i)}, i.e. the
// entry at position j moves to position sigma(j); this is a left action for
// the convention above. Labels on a labelled permutation are indexed by
// output position: (x, sigma) permutes by sigma and then multiplies the
// strand arriving at position k by x_k on the left.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gprop {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  // Validates that the table is a Latin square with two-sided identity,
  // inverses and associativity; throws std::invalid_argument otherwise.
  FiniteGroup(int order, std::vector<int> table_row_major,
              std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  // Index of a named element, or -1.
  int element_by_name(const std::string& s) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  static GroupPtr trivial();
  static GroupPtr cyclic(int k);
  static GroupPtr klein();
  static GroupPtr symmetric(int k);  // k <= 5
  // Accepts {"order": k, "table": rows or flat row-major, "names": [...]}.
  static GroupPtr from_json(const nlohmann::json& j);
  // Named presets ("trivial", "c2", "c3", "c4", "klein", "s3", "s4") or a
  // path to a JSON file.
  static GroupPtr resolve(const std::string& name_or_path);

  nlohmann::ordered_json to_json() const;

 private:
  int order_;
  int identity_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

// Bijection on {0..n-1}; img_[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // swaps i and i+1, 0-based
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;
  Permutation tensor(const Permutation& other) const;

  bool operator==(const Permutation& other) const { return img_ == other.img_; }
  auto operator<=>(const Permutation& other) const { return img_ <=> other.img_; }

 private:
  std::vector<int> img_;
};

// compose(p, q) = p o q (q applied first).
Permutation compose(const Permutation& p, const Permutation& q);

// The block permutation induced by sigma on consecutive blocks of the given
// sizes: block i (of size sizes[i]) moves, order-preserved, to the slot
// sigma(i) of the output layout.
Permutation block_permutation(const Permutation& sigma, const std::vector<int>& sizes);

// As above but the block landing at output slot k is reversed when
// reverse_at_output[k] is true.
Permutation flagged_block_permutation(const Permutation& sigma, const std::vector<int>& sizes,
                                      const std::vector<std::uint8_t>& reverse_at_output);

std::vector<Permutation> all_permutations(int n);

// Tuple of group element indices.
struct GroupTuple {
  GroupPtr group;
  std::vector<int> entries;

  GroupTuple() = default;
  GroupTuple(GroupPtr g, std::vector<int> e);
  static GroupTuple identity(GroupPtr g, int n);

  int size() const { return static_cast<int>(entries.size()); }
  bool is_identity() const;
  bool operator==(const GroupTuple& other) const { return entries == other.entries; }
};

// Componentwise product; tuples must have equal length and the same group.
GroupTuple tuple_mul(const GroupTuple& a, const GroupTuple& b);
GroupTuple tuple_inv(const GroupTuple& a);
// (sigma . x)_i = x_{sigma^-1(i)}.
GroupTuple tuple_act(const Permutation& sigma, const GroupTuple& x);
// Pullback along an arbitrary set map f: n -> m (0-based images): result_i = x_{f(i)}.
GroupTuple skeletal_relabel(const std::vector<int>& f, const GroupTuple& x);
GroupTuple tuple_concat(const GroupTuple& a, const GroupTuple& b);

using FlagTuple = std::vector<std::uint8_t>;  // 1 = involution flag ("minus")

// Element of G^n x| Sigma_n; in hyperoctahedral mode also carries C2 flags,
// making it an element of G^n x| H_n. Flags, like labels, are indexed by
// output position and multiply componentwise after the permutation action.
struct LabelledPermutation {
  GroupTuple labels;
  Permutation perm;
  std::optional<FlagTuple> flags;

  int size() const { return perm.size(); }
  bool is_identity() const;
  bool operator==(const LabelledPermutation& other) const;
};

LabelledPermutation labelled_perm_identity(GroupPtr g, int n, bool with_flags);
// Semidirect product (x,sigma)(y,tau) = (x . sigma*y, sigma o tau); flags
// combine the same way. Throws on arity, group, or flag-mode mismatch.
LabelledPermutation labelled_perm_compose(const LabelledPermutation& p,
                                          const LabelledPermutation& q);
LabelledPermutation labelled_perm_inverse(const LabelledPermutation& p);
LabelledPermutation labelled_perm_tensor(const LabelledPermutation& p,
                                         const LabelledPermutation& q);

std::vector<LabelledPermutation> all_labelled_perms(GroupPtr g, int n, bool with_flags);
std::vector<GroupTuple> all_group_tuples(GroupPtr g, int n);

}  // namespace gprop
