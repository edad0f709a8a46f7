#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace sylsplit;
using oracle::P;

namespace {

PermGroup example_sylow() {
  return PermGroup(10, {P("(1,3)(2,4)", 10), P("(1,2)(5,6)", 10), P("(5,6)(7,8,9,10)", 10)});
}

PermGroup d8() { return PermGroup(4, {P("(1,2,3,4)", 4), P("(1,3)", 4)}); }

// Intersection of all Sylow p-subgroups, the Sylows being the G-conjugates of S.
oracle::ElementList sylow_intersection(const PermGroup& G, const PermGroup& S) {
  auto elems = oracle::closure(G);
  auto acc = oracle::to_list(S);
  for (const auto& g : elems)
    acc = oracle::intersection(acc, oracle::conjugate_set(oracle::to_list(S), g));
  return acc;
}

// Largest normal subgroup whose order satisfies `ok`, by full enumeration.
template <class Pred>
oracle::ElementList largest_normal(const PermGroup& G, Pred ok) {
  oracle::ElementList best{G.identity()};
  for (auto& N : oracle::normal_subgroups(oracle::closure(G)))
    if (ok(N.size()) && N.size() > best.size())
      best = N;
  return best;
}

} // namespace

TEST(Center, AbelianGroupIsItsOwnCenter) {
  PermGroup C(7, {P("(1,2,3)", 7), P("(4,5,6,7)", 7)});
  EXPECT_EQ(center(C), C);
}

TEST(Center, D8HasOrderTwo) {
  PermGroup Z = center(d8());
  EXPECT_EQ(Z.order(), 2u);
  EXPECT_EQ(oracle::to_list(Z), oracle::center(oracle::closure(d8())));
}

TEST(Center, ExampleSylowCenter) {
  PermGroup S = example_sylow();
  PermGroup Z = center(S);
  EXPECT_EQ(Z.order(), 8u);
  PermGroup expected(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)});
  EXPECT_EQ(Z, expected);
  EXPECT_EQ(abelian_decomp(Z).invariant_factors, (std::vector<std::uint64_t>{2, 4}));
}

TEST(Sylow, ExampleGroupAtTwo) {
  PermGroup G(10, {P("(1,2,3,4,5)", 10), P("(4,5,6)", 10), P("(5,6)(7,8,9,10)", 10)});
  PermGroup S = sylow(G, 2);
  EXPECT_EQ(S.order(), 32u);
  EXPECT_TRUE(S.is_subgroup_of(G));
  EXPECT_EQ(example_sylow().order(), 32u);
  EXPECT_TRUE(example_sylow().is_subgroup_of(G));
}

TEST(Sylow, PGroupIsItsOwnSylow) {
  PermGroup S = oracle::catalog_group("c2wrc2wrc2");
  EXPECT_EQ(sylow(S, 2), S);
  EXPECT_TRUE(sylow(S, 3).is_trivial());
}

TEST(Sylow, S4AtThree) {
  PermGroup S4 = oracle::catalog_group("s4");
  PermGroup S = sylow(S4, 3);
  EXPECT_EQ(S.order(), 3u);
  // Oracle: the 3-subgroups of S4 are exactly the four <3-cycle>.
  int count = 0;
  for (const auto& H : oracle::all_subgroups(oracle::closure(S4)))
    if (H.size() == 3) {
      ++count;
      EXPECT_TRUE(std::all_of(H.begin(), H.end(), [](const Permutation& x) { return x.order() != 2; }));
    }
  EXPECT_EQ(count, 4);
  EXPECT_TRUE(S.contains(S.generators()[0]) && S.generators()[0].order() == 3);
}

TEST(Sylow, FullPPartAcrossCatalog) {
  for (const auto& gf : load_catalog(SYLSPLIT_CATALOG_DIR)) {
    PermGroup G = gf.group();
    for (std::uint64_t p : prime_divisors(G.order())) {
      PermGroup S = sylow(G, p);
      EXPECT_EQ(S.order(), p_part(G.order(), p)) << gf.name << " p=" << p;
      EXPECT_TRUE(S.is_subgroup_of(G));
    }
  }
}

TEST(Sylow, NonPrimeThrows) { EXPECT_THROW(sylow(d8(), 4), std::invalid_argument); }

TEST(RadicalSeries, S4AtTwo) {
  PermGroup S4 = oracle::catalog_group("s4");
  RadicalSeries rs = radical_series(S4, 2);
  EXPECT_EQ(rs.o_p, PermGroup(4, {P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)}));
  EXPECT_TRUE(rs.o_p_prime.is_trivial());
  EXPECT_EQ(oracle::to_list(rs.o_p), largest_normal(S4, [](std::size_t n) { return oracle::is_p_power(n, 2); }));
}

TEST(RadicalSeries, PGroup) {
  PermGroup S = oracle::catalog_group("d16");
  RadicalSeries rs = radical_series(S, 2);
  EXPECT_EQ(rs.o_p, S);
  EXPECT_TRUE(rs.o_p_prime.is_trivial());
  EXPECT_EQ(rs.z_p_star, center(S));
}

TEST(RadicalSeries, ExampleGroupAtTwo) {
  PermGroup G(10, {P("(1,2,3,4,5)", 10), P("(4,5,6)", 10), P("(5,6)(7,8,9,10)", 10)});
  RadicalSeries rs = radical_series(G, 2);
  PermGroup a2(10, {P("(7,9)(8,10)", 10)});
  EXPECT_TRUE(rs.o_p_prime.is_trivial());
  EXPECT_EQ(rs.z_p_star, a2);
  EXPECT_EQ(rs.o_p_prime_p, a2);
  EXPECT_EQ(rs.o_p, a2);
}

TEST(RadicalSeries, InvariantsAcrossSmallCatalog) {
  for (const auto& gf : load_catalog(SYLSPLIT_CATALOG_DIR)) {
    PermGroup G = gf.group();
    if (G.order() > 5000)
      continue;
    for (std::uint64_t p : prime_divisors(G.order())) {
      SCOPED_TRACE(gf.name + " p=" + std::to_string(p));
      RadicalSeries rs = radical_series(G, p);
      for (const PermGroup* N : {&rs.o_p, &rs.o_p_prime, &rs.o_p_prime_p, &rs.z_p_star})
        EXPECT_TRUE(is_normal(*N, G));
      EXPECT_TRUE(is_p_power(rs.o_p.order(), p));
      EXPECT_NE(rs.o_p_prime.order() % p, 0u);
      EXPECT_TRUE(rs.o_p.is_subgroup_of(rs.o_p_prime_p));
      EXPECT_TRUE(is_p_power(rs.o_p_prime_p.order() / rs.o_p_prime.order(), p));
      EXPECT_EQ(oracle::to_list(rs.o_p), sylow_intersection(G, sylow(G, p)));
      // Z_p^*/O_p' is the center of G/O_p': commutators with G land in O_p'.
      for (const auto& z : rs.z_p_star.generators())
        for (const auto& g : G.generators())
          EXPECT_TRUE(rs.o_p_prime.contains(commutator(z, g)));
    }
  }
}

TEST(RadicalSeries, PPrimeCoreAgreesWithNormalSubgroupEnumeration) {
  for (auto name : {"s4", "sl2-3", "q8xc3", "d12", "a4", "s3xs3", "f20", "d20", "a5xc3", "d8xs3", "gl2-3"}) {
    PermGroup G = oracle::catalog_group(name);
    for (std::uint64_t p : prime_divisors(G.order())) {
      auto expected = largest_normal(G, [p](std::size_t n) { return n % p != 0; });
      EXPECT_EQ(oracle::to_list(p_prime_core(G, p)), expected) << name << " p=" << p;
      auto op = largest_normal(G, [p](std::size_t n) { return oracle::is_p_power(n, p); });
      EXPECT_EQ(oracle::to_list(p_core(G, p)), op) << name << " p=" << p;
    }
  }
}

TEST(Thompson, AbelianGroup) {
  PermGroup A(8, {P("(1,2)", 8), P("(3,4,5,6)", 8)});
  ThompsonData td = thompson(A);
  EXPECT_EQ(td.d, 8u);
  ASSERT_EQ(td.witnesses.size(), 1u);
  EXPECT_EQ(td.witnesses[0], A);
  EXPECT_EQ(td.j, A);
}

TEST(Thompson, D8) {
  ThompsonData td = thompson(d8());
  EXPECT_EQ(td.d, 4u);
  EXPECT_EQ(td.witnesses.size(), 3u);
  int cyclic = 0;
  for (const auto& W : td.witnesses) {
    EXPECT_TRUE(W.is_abelian());
    cyclic += abelian_decomp(W).invariant_factors.size() == 1;
  }
  EXPECT_EQ(cyclic, 1);
  EXPECT_EQ(td.j, d8());
}

TEST(Thompson, Q8) {
  PermGroup Q = oracle::catalog_group("q8");
  ThompsonData td = thompson(Q);
  EXPECT_EQ(td.d, 4u);
  ASSERT_EQ(td.witnesses.size(), 3u);
  for (const auto& W : td.witnesses)
    EXPECT_EQ(abelian_decomp(W).invariant_factors, std::vector<std::uint64_t>{4});
  EXPECT_EQ(td.j, Q);
}

TEST(Thompson, AgreesWithSubgroupEnumeration) {
  for (auto name : {"d16", "q8", "d32", "d8xs3"}) {
    PermGroup S = sylow(oracle::catalog_group(name), 2);
    auto subs = oracle::all_subgroups(oracle::closure(S));
    std::size_t d = 0;
    for (const auto& H : subs)
      if (oracle::is_abelian(H))
        d = std::max(d, H.size());
    std::size_t count = 0;
    for (const auto& H : subs)
      count += oracle::is_abelian(H) && H.size() == d;
    ThompsonData td = thompson(S);
    EXPECT_EQ(td.d, d) << name;
    EXPECT_EQ(td.witnesses.size(), count) << name;
  }
}

TEST(Thompson, CenterInsideZJAcrossCatalog) {
  for (const auto& gf : load_catalog(SYLSPLIT_CATALOG_DIR)) {
    PermGroup G = gf.group();
    for (std::uint64_t p : prime_divisors(G.order())) {
      PermGroup S = sylow(G, p);
      ThompsonData td = thompson(S);
      PermGroup ZJ = center(td.j);
      EXPECT_TRUE(center(S).is_subgroup_of(ZJ)) << gf.name << " p=" << p;
      EXPECT_EQ(centralizer(S, td.j), ZJ) << gf.name << " p=" << p;
      for (const auto& W : td.witnesses)
        EXPECT_TRUE(W.is_subgroup_of(td.j));
    }
  }
}

TEST(Thompson, CapRaisesResourceError) {
  Caps caps;
  caps.subgroup_enumeration = 16;
  EXPECT_THROW(thompson(oracle::catalog_group("d32"), caps), ResourceError);
}

TEST(AbelianDecomp, Trivial) { EXPECT_TRUE(abelian_decomp(PermGroup::trivial(3)).invariant_factors.empty()); }

TEST(AbelianDecomp, ElementaryAbelianOfOrderEight) {
  PermGroup E(6, {P("(1,2)", 6), P("(3,4)", 6), P("(5,6)", 6)});
  EXPECT_EQ(abelian_decomp(E).invariant_factors, (std::vector<std::uint64_t>{2, 2, 2}));
}

TEST(AbelianDecomp, MixedPrimes) {
  // C2 x C4 x C3 x C9 -> [6, 36]
  PermGroup A(18, {P("(1,2)", 18), P("(3,4,5,6)", 18), P("(7,8,9)", 18), P("(10,11,12,13,14,15,16,17,18)", 18)});
  AbelianDecomp d = abelian_decomp(A);
  EXPECT_EQ(d.invariant_factors, (std::vector<std::uint64_t>{6, 36}));
  EXPECT_EQ(d.order(), A.order());
}

TEST(AbelianDecomp, BasisIsAnInternalDirectProduct) {
  std::vector<PermGroup> groups{
      PermGroup(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)}),
      PermGroup(12, {P("(1,2,3,4)", 12), P("(5,6,7,8)", 12), P("(9,10)", 12), P("(11,12)", 12)}),
      PermGroup(9, {P("(1,2,3)", 9), P("(4,5,6,7,8)", 9)}),
  };
  for (const auto& A : groups) {
    ASSERT_TRUE(A.is_abelian());
    AbelianDecomp d = abelian_decomp(A);
    ASSERT_EQ(d.basis.size(), d.invariant_factors.size());
    for (std::size_t i = 0; i < d.basis.size(); ++i) {
      EXPECT_EQ(d.basis[i].order(), d.invariant_factors[i]);
      if (i)
        EXPECT_EQ(d.invariant_factors[i] % d.invariant_factors[i - 1], 0u);
    }
    EXPECT_EQ(d.order(), A.order());
    EXPECT_EQ(oracle::closure(A.degree(), d.basis).size(), A.order());
  }
}

TEST(AbelianDecomp, RejectsNonAbelian) { EXPECT_THROW(abelian_decomp(d8()), std::invalid_argument); }

TEST(CommutatorWith, CentralizedIsTrivial) {
  PermGroup A(6, {P("(1,2,3)", 6)});
  PermGroup G(6, {P("(4,5)", 6), P("(1,2,3)", 6)});
  EXPECT_TRUE(commutator_with(A, G).is_trivial());
}

TEST(CommutatorWith, Q8InSL23) {
  PermGroup G = oracle::catalog_group("sl2-3");
  PermGroup S = sylow(G, 2);
  PermGroup ZS = center(S);
  EXPECT_TRUE(commutator_with(ZS, G).is_trivial());
  EXPECT_EQ(subgroup_intersection(ZS, center(G)), ZS);
}

TEST(CommutatorWith, V4InA4) {
  PermGroup A4 = oracle::catalog_group("a4");
  PermGroup V = sylow(A4, 2);
  EXPECT_EQ(commutator_with(V, A4), V);
  // Brute force: <a^-1 a^g>.
  std::vector<Permutation> gens;
  for (const auto& a : oracle::to_list(V))
    for (const auto& g : oracle::closure(A4))
      gens.push_back(a.inverse() * a.conjugate_by(g));
  EXPECT_EQ(oracle::closure(4, gens), oracle::to_list(V));
}

TEST(CommutatorWith, RequiresNormalizing) {
  PermGroup S4 = oracle::catalog_group("s4");
  EXPECT_THROW(commutator_with(PermGroup(4, {P("(1,2)", 4)}), S4), std::invalid_argument);
}

TEST(ComplementSearch, TrivialW) {
  PermGroup A(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)});
  auto r = complement_search(A, PermGroup::trivial(10));
  ASSERT_TRUE(r.complement);
  EXPECT_EQ(*r.complement, A);
}

TEST(ComplementSearch, WholeGroup) {
  PermGroup A(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)});
  auto r = complement_search(A, A);
  ASSERT_TRUE(r.complement);
  EXPECT_TRUE(r.complement->is_trivial());
}

TEST(ComplementSearch, ExampleCenterDoesNotSplit) {
  PermGroup A(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)});
  PermGroup W(10, {P("(7,9)(8,10)", 10)});
  auto r = complement_search(A, W);
  EXPECT_FALSE(r.complement);
  EXPECT_GT(r.subgroups_scanned, 0u);
  EXPECT_LT(r.largest_avoiding, 4u);
  // Oracle: every order-4 subgroup of A contains a^2.
  int order_four = 0;
  for (const auto& B : oracle::all_subgroups(oracle::to_list(A)))
    if (B.size() == 4) {
      ++order_four;
      EXPECT_TRUE(oracle::has(B, P("(7,9)(8,10)", 10)));
    }
  EXPECT_EQ(order_four, 3);
}

TEST(ComplementSearch, AgreesWithBruteForce) {
  std::vector<PermGroup> As{
      PermGroup(12, {P("(1,2,3,4)", 12), P("(5,6,7,8)", 12), P("(9,10)", 12)}),
      PermGroup(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)}),
      PermGroup(11, {P("(1,2,3,4,5,6,7,8)", 11), P("(9,10)", 11)}),
  };
  for (const auto& A : As) {
    auto subs = oracle::all_subgroups(oracle::to_list(A));
    for (const auto& Wl : subs) {
      PermGroup W(A.degree(), Wl);
      bool exists = false;
      for (const auto& B : subs)
        exists = exists || (B.size() * W.order() == A.order() && oracle::intersection(B, Wl).size() == 1);
      auto r = complement_search(A, W);
      ASSERT_EQ(r.complement.has_value(), exists);
      if (r.complement) {
        EXPECT_EQ(r.complement->order() * W.order(), A.order());
        EXPECT_TRUE(subgroup_intersection(*r.complement, W).is_trivial());
        EXPECT_TRUE(r.complement->is_subgroup_of(A));
      }
    }
  }
}

TEST(ComplementSearch, CapRaisesResourceError) {
  Caps caps;
  caps.complement_order = 4;
  PermGroup A(10, {P("(1,2)(3,4)", 10), P("(5,6)(7,8,9,10)", 10)});
  EXPECT_THROW(complement_search(A, PermGroup::trivial(10), caps), ResourceError);
}
