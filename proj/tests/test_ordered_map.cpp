#include <doctest.h>

#include <random>

#include "gprop/ordered_map.hpp"

using namespace gprop;

TEST_CASE("construction and validation") {
  CHECK_THROWS(OrderedMap(2, 1, {0}));       // length mismatch
  CHECK_THROWS(OrderedMap(2, 2, {1, 0}));    // not weakly increasing
  CHECK_THROWS(OrderedMap(1, 1, {1}));       // out of range
  CHECK_NOTHROW(OrderedMap(3, 2, {0, 1, 1}));
}

TEST_CASE("composition examples") {
  OrderedMap f(3, 2, {0, 1, 1});
  CHECK(compose(OrderedMap::identity(2), f) == f);
  CHECK(compose(f, OrderedMap::identity(3)) == f);
  CHECK(compose(OrderedMap::mult(), f) == OrderedMap(3, 1, {0, 0, 0}));

  // u then any map out of 1 gives the empty map into the codomain
  OrderedMap g(1, 3, {1});
  CHECK(compose(g, OrderedMap::unit()) == OrderedMap(0, 3, {}));
  CHECK_THROWS(compose(f, f));
}

TEST_CASE("tensor") {
  OrderedMap f(3, 2, {0, 1, 1});
  CHECK(tensor(f, OrderedMap::identity(0)) == f);
  CHECK(tensor(OrderedMap::identity(0), f) == f);
  CHECK(tensor(OrderedMap::mult(), OrderedMap::mult()) == OrderedMap(4, 2, {0, 0, 1, 1}));

  std::mt19937_64 rng(3);
  for (int c = 0; c < 100; ++c) {
    auto rnd = [&] {
      int n = int(rng() % 3), m = 1 + int(rng() % 3);
      auto v = enumerate_mono(n, m);
      return v[rng() % v.size()];
    };
    OrderedMap a = rnd(), b = rnd(), d = rnd();
    CHECK(tensor(tensor(a, b), d) == tensor(a, tensor(b, d)));
  }
}

TEST_CASE("interchange, exhaustive to arity 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int a2 = 0; a2 <= 3; ++a2)
          for (int b2 = 0; b2 <= 3; ++b2)
            for (int c2 = 0; c2 <= 3; ++c2)
              for (const auto& f : enumerate_mono(b, c))
                for (const auto& fp : enumerate_mono(a, b))
                  for (const auto& g : enumerate_mono(b2, c2))
                    for (const auto& gp : enumerate_mono(a2, b2))
                      CHECK(compose(tensor(f, g), tensor(fp, gp)) ==
                            tensor(compose(f, fp), compose(g, gp)));
}

TEST_CASE("generator decomposition") {
  GeneratorWord w = decompose(OrderedMap::mult());
  REQUIRE(w.layers.size() == 1);
  CHECK(w.layers[0] == std::vector<GenSym>{GenSym::Mult});

  GeneratorWord w2 = decompose(OrderedMap(3, 2, {0, 1, 1}));
  REQUIRE(w2.layers.size() == 1);
  CHECK(w2.layers[0] == std::vector<GenSym>{GenSym::Id1, GenSym::Mult});

  GeneratorWord w3 = decompose(OrderedMap(1, 2, {1}));
  REQUIRE(w3.layers.size() == 1);
  CHECK(w3.layers[0] == std::vector<GenSym>{GenSym::Unit, GenSym::Id1});

  CHECK(decompose(OrderedMap::identity(4)).layers.empty());

  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (const auto& f : enumerate_mono(n, m)) CHECK(decompose(f).recompose(n) == f);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_mono(0, 4).size() == 1);
  CHECK(enumerate_mono(1, 3).size() == 3);
  auto two_two = enumerate_mono(2, 2);
  REQUIRE(two_two.size() == 3);
  CHECK(two_two[0] == OrderedMap(2, 2, {0, 0}));
  CHECK(two_two[1] == OrderedMap(2, 2, {0, 1}));
  CHECK(two_two[2] == OrderedMap(2, 2, {1, 1}));
  CHECK(enumerate_mono(2, 0).empty());

  for (int m = 1; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      CHECK(static_cast<long long>(enumerate_mono(n, m).size()) == count_mono(n, m));
}

TEST_CASE("textual form") {
  OrderedMap f(3, 2, {0, 1, 1});
  CHECK(f.str() == "[1,2,2]:3->2");
  CHECK(OrderedMap::parse("[1,2,2]:3->2") == f);
  CHECK(OrderedMap::parse("[]:0->3") == OrderedMap(0, 3, {}));
  CHECK_THROWS(OrderedMap::parse("1,2,2:3->2"));
  CHECK_THROWS(OrderedMap::parse("[2,1]:2->2"));

  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& g : enumerate_mono(n, m)) CHECK(OrderedMap::parse(g.str()) == g);
}
