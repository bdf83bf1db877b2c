#include <doctest.h>

#include <map>
#include <random>

#include "gprop/group.hpp"

using namespace gprop;

TEST_CASE("group table validation") {
  CHECK_THROWS(FiniteGroup(2, {0, 0, 0, 0}));          // not a Latin square
  CHECK_THROWS(FiniteGroup(3, {0, 1, 2, 2, 0, 1, 1, 2, 0}));  // Latin but no two-sided identity
  CHECK_THROWS(FiniteGroup(2, {0, 1, 1}));             // wrong size
  CHECK_THROWS(FiniteGroup(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}));  // column repeats
  // a Latin square with identity and inverses that is not associative
  CHECK_THROWS(FiniteGroup(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1,
                               3, 4, 1, 2, 0, 4, 2, 0, 1, 3}));
  CHECK_NOTHROW(FiniteGroup(2, {0, 1, 1, 0}));
  // the same group with the identity at index 1 is still valid
  CHECK(FiniteGroup(2, {1, 0, 0, 1}).identity() == 1);

  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3->order() == 6);
  for (int a = 0; a < 6; ++a) CHECK(s3->mul(a, s3->inv(a)) == s3->identity());

  auto k = FiniteGroup::klein();
  for (int a = 0; a < 4; ++a) CHECK(k->mul(a, a) == k->identity());
}

TEST_CASE("group json round trip") {
  auto s3 = FiniteGroup::symmetric(3);
  auto back = FiniteGroup::from_json(s3->to_json());
  CHECK(*back == *s3);
  // flat row-major form is also accepted
  nlohmann::json j;
  j["order"] = 2;
  j["table"] = std::vector<int>{0, 1, 1, 0};
  CHECK(FiniteGroup::from_json(j)->order() == 2);
}

TEST_CASE("tuple_act examples and left action") {
  auto c3 = FiniteGroup::cyclic(3);
  GroupTuple x(c3, {0, 1, 2});  // (a, b, c)

  CHECK(tuple_act(Permutation::identity(3), x) == x);

  GroupTuple two(c3, {0, 1});
  CHECK(tuple_act(Permutation::transposition(2, 0), two) == GroupTuple(c3, {1, 0}));

  // three-cycle 1->2->3->1 sends (a,b,c) to (c,a,b)
  Permutation cyc({1, 2, 0});
  CHECK(tuple_act(cyc, x) == GroupTuple(c3, {2, 0, 1}));

  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    for (int n = 0; n <= 4; ++n) {
      auto perms = all_permutations(n);
      auto tuples = all_group_tuples(g, n);
      for (const auto& s : perms)
        for (const auto& t : perms)
          for (const auto& v : tuples)
            CHECK(tuple_act(compose(s, t), v) == tuple_act(s, tuple_act(t, v)));
    }
  }
}

TEST_CASE("labelled permutation composition") {
  auto c2 = FiniteGroup::cyclic(2);

  // identity element is neutral
  for (const auto& p : all_labelled_perms(c2, 2, false)) {
    LabelledPermutation e = labelled_perm_identity(c2, 2, false);
    CHECK(labelled_perm_compose(e, p) == p);
    CHECK(labelled_perm_compose(p, e) == p);
  }

  // ((a,b),(1 2)) o ((c,d),(1 2)) = ((a d, b c), id)
  Permutation swap = Permutation::transposition(2, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          LabelledPermutation p{GroupTuple(c2, {a, b}), swap, {}};
          LabelledPermutation q{GroupTuple(c2, {c, d}), swap, {}};
          LabelledPermutation r = labelled_perm_compose(p, q);
          CHECK(r.perm.is_identity());
          CHECK(r.labels == GroupTuple(c2, {c2->mul(a, d), c2->mul(b, c)}));
        }

  // arity / flag mode errors
  LabelledPermutation p2 = labelled_perm_identity(c2, 2, false);
  LabelledPermutation p3 = labelled_perm_identity(c2, 3, false);
  LabelledPermutation h2 = labelled_perm_identity(c2, 2, true);
  CHECK_THROWS(labelled_perm_compose(p2, p3));
  CHECK_THROWS(labelled_perm_compose(p2, h2));
}

TEST_CASE("labelled permutation group axioms, exhaustive") {
  // direct triple loops for small element counts, index tables for the rest
  for (const auto& [g, max_n] :
       std::vector<std::pair<GroupPtr, int>>{{FiniteGroup::cyclic(2), 3},
                                             {FiniteGroup::cyclic(3), 3},
                                             {FiniteGroup::symmetric(3), 3}}) {
    for (int n = 0; n <= max_n; ++n) {
      auto elems = all_labelled_perms(g, n, false);
      long long expect = 1;
      for (int k = 0; k < n; ++k) expect *= g->order();
      for (int k = 2; k <= n; ++k) expect *= k;
      CHECK(static_cast<long long>(elems.size()) == expect);

      LabelledPermutation e = labelled_perm_identity(g, n, false);
      for (const auto& a : elems) {
        CHECK(labelled_perm_compose(a, labelled_perm_inverse(a)) == e);
        CHECK(labelled_perm_compose(labelled_perm_inverse(a), a) == e);
      }

      size_t sz = elems.size();
      if (sz == 0 || sz > 1400) continue;
      std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
      for (size_t i = 0; i < sz; ++i)
        index[{elems[i].perm.images(), elems[i].labels.entries}] = static_cast<int>(i);
      std::vector<std::uint16_t> table(sz * sz);
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
          LabelledPermutation c = labelled_perm_compose(elems[i], elems[j]);
          table[i * sz + j] =
              static_cast<std::uint16_t>(index.at({c.perm.images(), c.labels.entries}));
        }
      long long bad = 0;
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
          std::uint16_t ij = table[i * sz + j];
          for (size_t k = 0; k < sz; ++k)
            if (table[ij * sz + k] != table[i * sz + table[j * sz + k]]) ++bad;
        }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("hyperoctahedral flags") {
  auto triv = FiniteGroup::trivial();
  auto elems = all_labelled_perms(triv, 2, true);
  CHECK(elems.size() == 8);  // |H_2| = 2^2 * 2!

  // Cayley oracle: associativity, identity, inverses over all of H_2
  LabelledPermutation e = labelled_perm_identity(triv, 2, true);
  for (const auto& a : elems) {
    CHECK(labelled_perm_compose(a, e) == a);
    CHECK(labelled_perm_compose(labelled_perm_inverse(a), a) == e);
    for (const auto& b : elems)
      for (const auto& c : elems)
        CHECK(labelled_perm_compose(labelled_perm_compose(a, b), c) ==
              labelled_perm_compose(a, labelled_perm_compose(b, c)));
  }

  // ((-,+),(1 2)) o ((-,+),(1 2)) resolved by the Cayley structure
  LabelledPermutation fl{GroupTuple(triv, {0, 0}), Permutation::transposition(2, 0),
                         FlagTuple{1, 0}};
  LabelledPermutation sq = labelled_perm_compose(fl, fl);
  CHECK(sq.perm.is_identity());
  CHECK(*sq.flags == FlagTuple{1, 1});
}

TEST_CASE("skeletal relabel") {
  auto c3 = FiniteGroup::cyclic(3);
  GroupTuple x(c3, {1, 2, 0});
  std::vector<int> idmap{0, 1, 2};
  CHECK(skeletal_relabel(idmap, x) == x);

  GroupTuple single(c3, {2});
  CHECK(skeletal_relabel({0, 0}, single) == GroupTuple(c3, {2, 2}));
  CHECK(skeletal_relabel({}, x) == GroupTuple(c3, {}));
  CHECK_THROWS(skeletal_relabel({5}, x));

  // contravariant functoriality: relabel(f o g, x) = relabel(g, relabel(f, x))
  std::mt19937_64 rng(5);
  for (int c = 0; c < 200; ++c) {
    int n = 1 + int(rng() % 4), m = 1 + int(rng() % 4), l = 1 + int(rng() % 4);
    std::vector<int> f(n), g(m);
    for (int& v : f) v = int(rng() % m);
    for (int& v : g) v = int(rng() % l);
    auto tuples = all_group_tuples(c3, l);
    const GroupTuple& t = tuples[rng() % tuples.size()];
    std::vector<int> gf(n);
    for (int i = 0; i < n; ++i) gf[i] = g[f[i]];
    CHECK(skeletal_relabel(gf, t) == skeletal_relabel(f, skeletal_relabel(g, t)));
  }
}

TEST_CASE("block permutations") {
  // blocks (2, 1) swapped by the transposition
  Permutation bp = block_permutation(Permutation::transposition(2, 0), {2, 1});
  CHECK(bp == Permutation({1, 2, 0}));
  // reversal of the landing block
  Permutation fbp =
      flagged_block_permutation(Permutation::identity(1), {2}, FlagTuple{1});
  CHECK(fbp == Permutation({1, 0}));
}
