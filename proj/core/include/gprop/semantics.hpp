#pragma once

// Finite free-module models of G-bimonoids over Z/p and exact matrix
// evaluation of morphisms: monotone maps act by iterated (co)multiplication,
// middle elements by (signed) permutations, actions, involutions and twists.
// Evaluation is a sparse column pushforward, so group-algebra models stay
// cheap even at wide middles.

#include <optional>
#include <string>
#include <vector>

#include "gprop/ncset.hpp"
#include "gprop/span.hpp"

namespace gprop {

class ZpMat {
 public:
  ZpMat() : p_(2), rows_(0), cols_(0) {}
  ZpMat(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ZpMat identity(int p, int n);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& at(int r, int c) { return a_[r * cols_ + c]; }
  int at(int r, int c) const { return a_[r * cols_ + c]; }

  bool operator==(const ZpMat& other) const = default;
  long long diff_entries(const ZpMat& other) const;

  nlohmann::ordered_json to_json() const;
  static ZpMat from_json(int p, const nlohmann::json& j);

 private:
  int p_, rows_, cols_;
  std::vector<int> a_;
};

ZpMat matmul(const ZpMat& a, const ZpMat& b);
ZpMat kron(const ZpMat& a, const ZpMat& b);

struct BimonoidModel {
  enum class Braiding { Flip, Sign };

  int p = 5;
  int dim = 1;
  ZpMat mult;    // d x d^2
  ZpMat comult;  // d^2 x d
  ZpMat unit;    // d x 1
  ZpMat counit;  // 1 x d
  GroupPtr group;
  std::vector<ZpMat> action;  // indexed by group element
  Braiding braiding = Braiding::Flip;
  std::vector<int> parity;      // per basis vector, braiding signs
  std::vector<int> twist_diag;  // diagonal twist, unit entries
  std::optional<ZpMat> involution;

  nlohmann::ordered_json to_json() const;
  static BimonoidModel from_json(const nlohmann::json& j, GroupPtr group);
};

// Carrier k[H]: basis H, multiplication from the table, group-like
// comultiplication, counit 1, G acting by the linear extensions of the given
// automorphisms, involution h -> h^-1, identity twist.
BimonoidModel group_algebra_model(int p, const GroupPtr& H, const GroupPtr& G,
                                  const std::vector<std::vector<int>>& action_on_H);
// Conjugation automorphism table x -> h x h^-1 for each listed h.
std::vector<std::vector<int>> conjugation_action(const FiniteGroup& H, const std::vector<int>& hs);
// Two-dimensional sign-braided model with one odd primitive generator and
// twist diag(1, -1); the default nontrivially-balanced test target.
BimonoidModel odd_generator_model(int p);

// All (co)monoid, compatibility, action, involution and twist axioms, by
// direct matrix computation.
CheckReport verify_model(const BimonoidModel& model);

ZpMat eval_mono(const BimonoidModel& m, const OrderedMap& f);     // monoid side
ZpMat eval_mono_op(const BimonoidModel& m, const OrderedMap& f);  // comonoid side
ZpMat eval_element(const BimonoidModel& m, const Element& e);
ZpMat eval_djg(const BimonoidModel& m, const DJGMorphism& d);
// Contravariant value of a leg used op-side: eval(elt)^-1 after the mono op-side.
ZpMat eval_djg_op(const BimonoidModel& m, const CrossedFamily& fam, const DJGMorphism& d);
ZpMat eval_composite(const BimonoidModel& m, const CompositeMorphism& t);
ZpMat eval_ncset(const BimonoidModel& m, const NCSetMap& f);
ZpMat eval_gf(const BimonoidModel& m, const GFMap& f);
// Whole-span and whole-cospan values evaluated as one fused program, so wide
// middles never materialize as dense factors.
ZpMat eval_span_value(const BimonoidModel& m, const CrossedFamily& fam, const SpanMorphism& sp);
ZpMat eval_cospan_value(const BimonoidModel& m, const CrossedFamily& fam, const DJGMorphism& alpha,
                        const DJGMorphism& beta);

struct EvalFailure {
  std::string what;
  long long diff_entries = 0;
};

struct EvalReport {
  std::string name;
  long long checked = 0;
  std::vector<EvalFailure> failures;

  bool pass() const { return failures.empty(); }
  void note(const std::string& what, long long diff) {
    ++checked;
    if (diff != 0 && failures.size() < 32) failures.push_back({what, diff});
  }
};

enum class EvalCategory { DPG, Spans, NCSets, GFCat };

// eval(g o f) == eval(g) eval(f) and eval(f (+) g) == eval(f) (x) eval(g) on
// sampled pairs in the chosen category.
EvalReport check_functoriality(const BimonoidModel& model, const CrossedFamily& fam,
                               EvalCategory cat, int samples, int max_arity, unsigned seed);

// Every cospan rewrite is evaluation-sound: the op-side composite of the
// cospan equals the value of the rewritten span.
EvalReport check_rewrite_soundness(const BimonoidModel& model, const CrossedFamily& fam,
                                   int samples, unsigned seed);

}  // namespace gprop
