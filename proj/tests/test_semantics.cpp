#include <doctest.h>

#include "gprop/checks.hpp"
#include "gprop/semantics.hpp"

using namespace gprop;

namespace {

BimonoidModel model_kc2() {
  auto c2 = FiniteGroup::cyclic(2);
  return group_algebra_model(5, c2, c2, {{0, 1}, {0, 1}});
}

BimonoidModel model_ks3() {
  auto s3 = FiniteGroup::symmetric(3);
  auto c2 = FiniteGroup::cyclic(2);
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) == s3->identity()) {
      transposition = x;
      break;
    }
  return group_algebra_model(5, s3, c2,
                             conjugation_action(*s3, {s3->identity(), transposition}));
}

}  // namespace

TEST_CASE("group algebra models verify") {
  BimonoidModel kc2 = model_kc2();
  CHECK(verify_model(kc2).pass());

  BimonoidModel ks3 = model_ks3();
  CHECK(verify_model(ks3).pass());

  // trivial carrier: one-dimensional, everything scalar one
  auto triv = FiniteGroup::trivial();
  BimonoidModel one = group_algebra_model(5, triv, triv, {{0}});
  CHECK(one.dim == 1);
  CHECK(verify_model(one).pass());
  CHECK(one.mult.at(0, 0) == 1);
  CHECK(one.counit.at(0, 0) == 1);

  // invalid automorphism tables are rejected
  auto c2 = FiniteGroup::cyclic(2);
  auto c3 = FiniteGroup::cyclic(3);
  CHECK_THROWS(group_algebra_model(5, c3, c2, {{0, 1, 2}, {1, 0, 2}}));  // not an automorphism
  CHECK_THROWS(group_algebra_model(5, c3, c2, {{0, 1, 2}}));             // wrong count
}

TEST_CASE("sign model verifies only with the sign braiding") {
  BimonoidModel odd = odd_generator_model(5);
  CHECK(verify_model(odd).pass());
  BimonoidModel flip = odd;
  flip.braiding = BimonoidModel::Braiding::Flip;
  CHECK(!verify_model(flip).pass());
}

TEST_CASE("evaluation basics") {
  BimonoidModel kc2 = model_kc2();
  auto c2 = FiniteGroup::cyclic(2);
  CrossedFamily fam(Family::Symmetric, c2);

  CHECK(eval_mono(kc2, OrderedMap::identity(2)) == ZpMat::identity(5, 4));
  CHECK(eval_element(kc2, fam.identity(2)) == ZpMat::identity(5, 4));

  // the flip on two strands is the basis permutation matrix
  ZpMat flip = eval_element(kc2, fam.crossing(2, 1));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(flip.at(y * 2 + x, x * 2 + y) == 1);
  CHECK(matmul(flip, flip) == ZpMat::identity(5, 4));

  // mu after delta is multiplication after the diagonal: h -> h*h
  CompositeMorphism md{OrderedMap::mult(), fam.identity(2), OrderedMap::mult()};
  ZpMat v = eval_composite(kc2, md);
  ZpMat expect(5, 2, 2);
  expect.at(0, 0) = 1;  // e*e = e
  expect.at(0, 1) = 1;  // x*x = e
  CHECK(v == expect);
  CHECK(v == matmul(eval_mono(kc2, OrderedMap::mult()), eval_mono_op(kc2, OrderedMap::mult())));

  // labels evaluate through the action
  BimonoidModel ks3 = model_ks3();
  GroupTuple lab(c2, {1});
  ZpMat av = eval_element(ks3, CrossedFamily(Family::Symmetric, c2).with_labels(lab, 1));
  CHECK(av == ks3.action[1]);
}

TEST_CASE("dimension and model guards") {
  BimonoidModel kc2 = model_kc2();
  auto s3 = FiniteGroup::symmetric(3);
  CrossedFamily fam(Family::Symmetric, s3);
  std::mt19937_64 rng(1);
  Element e = fam.with_labels(GroupTuple(s3, {4}), 1);
  CHECK_THROWS(eval_element(kc2, e));  // action table does not cover S3 labels
}

TEST_CASE("functoriality and soundness, full sweep") {
  auto c2 = FiniteGroup::cyclic(2);
  BimonoidModel kc2 = model_kc2();
  BimonoidModel ks3 = model_ks3();
  CrossedFamily sym(Family::Symmetric, c2);

  for (const BimonoidModel* m : {&kc2, &ks3}) {
    CHECK(check_functoriality(*m, sym, EvalCategory::DPG, 80, 3, 11).pass());
    CHECK(check_functoriality(*m, sym, EvalCategory::Spans, 60, 3, 12).pass());
    CHECK(check_functoriality(*m, sym, EvalCategory::NCSets, 80, 3, 13).pass());
    CHECK(check_rewrite_soundness(*m, sym, 50, 14).pass());
  }
  // unordered maps on the commutative carrier
  CHECK(check_functoriality(kc2, sym, EvalCategory::GFCat, 80, 3, 15).pass());

  // braid family spans on the flip model
  CrossedFamily braid(Family::Braid, c2);
  CHECK(check_functoriality(kc2, braid, EvalCategory::Spans, 50, 3, 16).pass());
  CHECK(check_rewrite_soundness(kc2, braid, 40, 17).pass());
}

TEST_CASE("mutation detection") {
  BimonoidModel bad = model_kc2();
  bad.comult.at(1 * 2 + 1, 1) = 0;
  bad.comult.at(1 * 2 + 0, 1) = 1;  // delta(x) = x (x) e
  CHECK(!verify_model(bad).pass());
  auto c2 = FiniteGroup::cyclic(2);
  CrossedFamily sym(Family::Symmetric, c2);
  EvalReport rep = check_functoriality(bad, sym, EvalCategory::Spans, 200, 3, 19);
  CHECK(!rep.pass());
}

TEST_CASE("involutive structure") {
  BimonoidModel ks3 = model_ks3();
  const ZpMat& io = *ks3.involution;
  CHECK(matmul(io, io) == ZpMat::identity(5, 6));

  ZpMat flip(5, 36, 36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) flip.at(y * 6 + x, x * 6 + y) = 1;
  CHECK(matmul(io, ks3.mult) == matmul(ks3.mult, matmul(kron(io, io), flip)));

  auto c2 = FiniteGroup::cyclic(2);
  CrossedFamily hyp(Family::Hyperoctahedral, c2);
  CHECK(check_functoriality(ks3, hyp, EvalCategory::DPG, 80, 3, 23).pass());
  CHECK(check_functoriality(ks3, hyp, EvalCategory::Spans, 50, 3, 29).pass());
  CHECK(check_rewrite_soundness(ks3, hyp, 40, 31).pass());

  // a lone involution flag evaluates to the inversion matrix
  LabelledPermutation fl = std::get<LabelledPermutation>(hyp.identity(1));
  (*fl.flags)[0] = 1;
  CHECK(eval_element(ks3, Element{fl}) == io);
}

TEST_CASE("balanced structure") {
  BimonoidModel odd = odd_generator_model(5);
  auto triv = FiniteGroup::trivial();
  CrossedFamily rib(Family::Ribbon, triv);

  // a single twist evaluates to the diagonal
  LabelledBraid tw = std::get<LabelledBraid>(rib.identity(1));
  (*tw.twists)[0] = 1;
  ZpMat th = eval_element(odd, Element{tw});
  CHECK(th.at(0, 0) == 1);
  CHECK(th.at(1, 1) == 4);  // -1 mod 5

  // negative twists invert
  (*tw.twists)[0] = -1;
  CHECK(matmul(eval_element(odd, Element{tw}), th) == ZpMat::identity(5, 2));

  CHECK(check_functoriality(odd, rib, EvalCategory::DPG, 80, 3, 37).pass());
  CHECK(check_functoriality(odd, rib, EvalCategory::Spans, 50, 3, 41).pass());
  CHECK(check_rewrite_soundness(odd, rib, 40, 43).pass());
}

TEST_CASE("semantics suite umbrella") {
  for (const auto& rep : run_semantics_suite(60, 3, 301)) {
    INFO(rep.name);
    CHECK(rep.pass());
  }
}

TEST_CASE("model json round trip") {
  BimonoidModel ks3 = model_ks3();
  nlohmann::ordered_json j = ks3.to_json();
  BimonoidModel back = BimonoidModel::from_json(j, ks3.group);
  CHECK(back.mult == ks3.mult);
  CHECK(back.comult == ks3.comult);
  CHECK(back.unit == ks3.unit);
  CHECK(back.counit == ks3.counit);
  CHECK(back.twist_diag == ks3.twist_diag);
  CHECK(*back.involution == *ks3.involution);
  CHECK(verify_model(back).pass());
}

TEST_CASE("the modulus must be prime") {
  auto c2 = FiniteGroup::cyclic(2);
  CHECK_THROWS(group_algebra_model(6, c2, c2, {{0, 1}, {0, 1}}));
  CHECK_THROWS(odd_generator_model(9));
  CHECK_NOTHROW(group_algebra_model(7, c2, c2, {{0, 1}, {0, 1}}));
}
