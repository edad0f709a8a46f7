#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace sylsplit;
using oracle::P;

TEST(PermGroup, A6OnSixPoints) {
  PermGroup G(6, {P("(1,2,3,4,5)", 6), P("(4,5,6)", 6)});
  EXPECT_EQ(G.order(), 360u);
  EXPECT_EQ(oracle::closure(G).size(), 360u);
}

TEST(PermGroup, EmptyGeneratorList) {
  PermGroup G = group_generate(3, {});
  EXPECT_EQ(G.order(), 1u);
  EXPECT_TRUE(G.is_trivial());
  EXPECT_TRUE(G.contains(Permutation(3)));
  EXPECT_FALSE(G.contains(P("(1,2)", 3)));
}

TEST(PermGroup, ExampleGroupOrder) {
  PermGroup G(10, {P("(1,2,3,4,5)", 10), P("(4,5,6)", 10), P("(5,6)(7,8,9,10)", 10)});
  EXPECT_EQ(G.order(), 1440u);
  EXPECT_EQ(oracle::closure(G).size(), 1440u);
}

TEST(PermGroup, DegreeMismatchThrows) {
  EXPECT_THROW(group_generate({P("(1,2)", 3), P("(1,2)", 4)}), std::invalid_argument);
  EXPECT_THROW(PermGroup(5, {P("(1,2)", 4)}), std::invalid_argument);
}

TEST(PermGroup, DeterministicForSameGenerators) {
  auto gens = oracle::catalog_group("m11").generators();
  PermGroup a(11, gens), b(11, gens);
  EXPECT_EQ(a.base(), b.base());
  EXPECT_EQ(a.elements(), b.elements());
}

TEST(PermGroup, ElementsEnumeratedOnce) {
  PermGroup G = oracle::catalog_group("s5");
  auto xs = G.elements();
  EXPECT_EQ(xs.size(), 120u);
  EXPECT_EQ(oracle::sorted(xs).size(), 120u);
}

TEST(PermGroup, CatalogOrdersMatchNaiveClosure) {
  for (const auto& gf : load_catalog(SYLSPLIT_CATALOG_DIR)) {
    PermGroup G = gf.group();
    if (G.order() > 5000)
      continue;
    auto naive = oracle::closure(G);
    EXPECT_EQ(G.order(), naive.size()) << gf.name;
    for (const auto& x : naive)
      ASSERT_TRUE(G.contains(x)) << gf.name << " " << x;
  }
}

TEST(PermGroup, MembershipAgreesWithNaiveClosureOnRandomPermutations) {
  std::mt19937 rng(11);
  for (auto name : {"s4", "a5", "d16", "sl2-3", "a6-c4-example", "c2wrc2wrc2", "f20"}) {
    PermGroup G = oracle::catalog_group(name);
    auto naive = oracle::closure(G);
    std::vector<Point> images(G.degree());
    std::iota(images.begin(), images.end(), Point{0});
    for (int i = 0; i < 300; ++i) {
      std::shuffle(images.begin(), images.end(), rng);
      Permutation x(images);
      EXPECT_EQ(G.contains(x), oracle::has(naive, x)) << name << " " << x;
    }
  }
}

TEST(PermGroup, KnownOrderAgrees) {
  PermGroup G = oracle::catalog_group("a7");
  PermGroup H(G.degree(), G.generators(), 2520);
  EXPECT_EQ(H.order(), 2520u);
}

TEST(PermGroup, SubgroupAndEquality) {
  PermGroup S4 = oracle::catalog_group("s4");
  PermGroup V(4, {P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)});
  EXPECT_TRUE(V.is_subgroup_of(S4));
  EXPECT_FALSE(S4.is_subgroup_of(V));
  EXPECT_TRUE(V.is_abelian());
  EXPECT_FALSE(S4.is_abelian());
  PermGroup V2(4, {P("(1,4)(2,3)", 4), P("(1,2)(3,4)", 4)});
  EXPECT_EQ(V, V2);
}
