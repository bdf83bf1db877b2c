#pragma once

// Braid words with decidable equality via the left-greedy (Garside) normal
// form, cabling, ribbon braids (integer twists per strand), and G-labelled
// braids. Words multiply by concatenation; the projection to permutations is
// a homomorphism for the library-wide composition convention, so in a word
// the rightmost letter acts first on strand positions.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gprop/group.hpp"

namespace gprop {

class BraidWord {
 public:
  BraidWord() : strands_(0) {}
  // letters are signed 1-based generator indices: +i is sigma_i, -i its inverse.
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int n) { return BraidWord(n, {}); }
  static BraidWord generator(int n, int i, bool positive = true);
  // Positive permutation braid realizing p (each strand pair crosses at most
  // once); the word is the canonical smallest-divisor-first reduced word.
  static BraidWord permutation_braid(const Permutation& p);
  static BraidWord half_twist(int n);               // Delta_n
  static BraidWord full_twist_power(int n, int t);  // Delta_n^{2t}, t may be negative

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord tensor(const BraidWord& other) const;
  Permutation underlying_permutation() const;

  bool operator==(const BraidWord& other) const = default;

  // Textual form "s1 s2' s1" (prime marks an inverse letter); empty words
  // print as "e".
  std::string str() const;
  static BraidWord parse(const std::string& text, int strands);

 private:
  int strands_;
  std::vector<int> letters_;
};

// Concatenation w1 * w2 (group multiplication); strand counts must agree.
BraidWord braid_concat(const BraidWord& w1, const BraidWord& w2);
// compose(g, f) = g * f under the library convention (f applied first);
// identical to braid_concat(g, f) since words multiply by concatenation.
inline BraidWord compose(const BraidWord& g, const BraidWord& f) { return braid_concat(g, f); }

// Left-greedy normal form Delta^power A_1 ... A_k with permutation-braid
// factors, id < A_i < Delta and the pair condition S(A_{i+1}) <= F(A_i).
struct GarsideNF {
  int strands = 0;
  int power = 0;
  std::vector<Permutation> factors;

  bool is_identity() const { return power == 0 && factors.empty(); }
  bool operator==(const GarsideNF& other) const = default;
  // Canonical word: Delta^power followed by the factors' canonical words.
  BraidWord word() const;
};

GarsideNF braid_normal_form(const BraidWord& w);
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Each strand i is replaced by mult[i] parallel strands; crossings become
// block crossings and strands with mult[i] == 0 are deleted. The underlying
// permutation of the result is the block permutation of the input's.
BraidWord cable(const BraidWord& w, const std::vector<int>& mult);

// Signed crossing counts per unordered strand pair of the closures' strands,
// indexed by initial strand positions. Used as a cabling oracle.
std::vector<std::vector<int>> crossing_matrix(const BraidWord& w);

struct RibbonBraid {
  BraidWord braid;
  std::vector<int> twists;  // indexed by output position

  RibbonBraid() = default;
  RibbonBraid(BraidWord b, std::vector<int> t);
  static RibbonBraid identity(int n) { return RibbonBraid(BraidWord::identity(n), std::vector<int>(n, 0)); }

  int strands() const { return braid.strands(); }
  bool operator==(const RibbonBraid& other) const = default;

  std::string str() const;
  static RibbonBraid parse(const std::string& text, int strands);
};

// (t, b)(s, c) = (t + pi(b).s, b c).
RibbonBraid ribbon_compose(const RibbonBraid& r1, const RibbonBraid& r2);
RibbonBraid ribbon_inverse(const RibbonBraid& r);
RibbonBraid ribbon_tensor(const RibbonBraid& r1, const RibbonBraid& r2);
bool ribbon_equal(const RibbonBraid& a, const RibbonBraid& b);

// Cabling with full-twist insertion: a strand with twist t cabled into k
// strands yields k strands of twist t and the block braid Delta_k^{2t}.
RibbonBraid ribbon_cable(const RibbonBraid& r, const std::vector<int>& mult);

// Labelled braid (G^n x| B_n) or labelled ribbon braid (ribbon mode when
// twists is set). Labels are output-indexed as for labelled permutations.
struct LabelledBraid {
  GroupTuple labels;
  BraidWord braid;
  std::optional<std::vector<int>> twists;

  int size() const { return braid.strands(); }
  bool operator==(const LabelledBraid& other) const = default;
};

LabelledBraid labelled_braid_identity(GroupPtr g, int n, bool ribbon);
LabelledBraid labelled_braid_compose(const LabelledBraid& p, const LabelledBraid& q);
LabelledBraid labelled_braid_inverse(const LabelledBraid& p);
LabelledBraid labelled_braid_tensor(const LabelledBraid& p, const LabelledBraid& q);
bool labelled_braid_equal(const LabelledBraid& a, const LabelledBraid& b);

BraidWord random_braid_word(std::mt19937_64& rng, int strands, int max_len);

}  // namespace gprop
