#ifndef SYLSPLIT_FUSION_HPP
#define SYLSPLIT_FUSION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theorem.hpp"

namespace sylsplit {

/// The fusion system F_S(G): morphisms between subgroups of S are the
/// restrictions of conjugation maps x -> x^g landing in S.
struct FusionContext {
  PermGroup G;
  PermGroup S;
  std::uint64_t p = 2;

  static FusionContext from(const Setting& st) { return {st.G, st.S, st.p}; }
};

/// Every morphism of F_S(G) is a restriction of c_g on its largest domain
/// S ∩ S^(g^-1); one g per double coset S g S suffices, since pre- and
/// post-composing with inner automorphisms of S preserves extendability.
struct MaximalMorphism {
  Permutation g;
  PermGroup domain; // {x in S : x^g in S}
};

inline std::vector<MaximalMorphism> maximal_morphisms(const FusionContext& ctx) {
  std::vector<Permutation> left = transversal(ctx.G, ctx.S); // cosets tS
  std::unordered_map<Permutation, std::size_t, PermutationHash> slot;
  for (std::size_t i = 0; i < left.size(); ++i)
    slot.emplace(left_coset_key(ctx.S, left[i]), i);
  std::vector<bool> seen(left.size(), false);
  std::vector<MaximalMorphism> out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : ctx.S.generators()) {
        std::size_t j = slot.at(left_coset_key(ctx.S, s * left[queue[k]]));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    const Permutation& g = left[i];
    std::vector<Permutation> dom;
    ctx.S.for_each_element([&](const Permutation& x) {
      if (ctx.S.contains(x.conjugate_by(g)))
        dom.push_back(x);
    });
    out.push_back({g, PermGroup(ctx.G.degree(), std::move(dom))});
  }
  return out;
}

/// Whether c_g restricted to `domain` extends to some g' in X, i.e. whether
/// C_G(domain) g meets X. Iterates over X, testing agreement on generators.
inline bool extends_into(const MaximalMorphism& m, const PermGroup& X) {
  std::vector<std::pair<Permutation, Permutation>> targets;
  for (const auto& x : m.domain.generators())
    targets.emplace_back(x, x.conjugate_by(m.g));
  if (X.contains(m.g))
    return true;
  return X.find_element([&](const Permutation& c) {
    for (const auto& [x, y] : targets)
      if (x.conjugate_by(c) != y)
        return false;
    return true;
  });
}

/// Aut_F(Q) and Aut_S(Q) as permutation groups on the sorted elements of Q.
struct AutGroups {
  PermGroup q;
  std::shared_ptr<const ElementIndex> elements;
  PermGroup aut_f;
  PermGroup aut_s;
};

namespace detail {

inline Permutation induced_on(const ElementIndex& idx, const Permutation& n) {
  std::vector<Point> images(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    images[i] = static_cast<Point>(idx.index(idx.at(i).conjugate_by(n)));
  return Permutation(std::move(images));
}

inline PermGroup induced_group(const ElementIndex& idx, const PermGroup& N) {
  std::vector<Permutation> gens;
  for (const auto& n : N.generators())
    gens.push_back(induced_on(idx, n));
  return PermGroup(idx.size(), std::move(gens));
}

} // namespace detail

inline AutGroups aut_fusion(const FusionContext& ctx, const PermGroup& Q) {
  if (!Q.is_subgroup_of(ctx.S))
    throw std::invalid_argument("aut_fusion: Q is not a subgroup of S");
  AutGroups out;
  out.q = Q;
  out.elements = std::make_shared<const ElementIndex>(Q);
  out.aut_f = detail::induced_group(*out.elements, normalizer(ctx.G, Q));
  out.aut_s = detail::induced_group(*out.elements, normalizer(ctx.S, Q));
  return out;
}

/// A morphism with no extension fixing z, for z in Z(S) outside Z(F).
struct ZRefutation {
  Permutation z;
  Permutation g;
  PermGroup domain;
};

struct ZFusionResult {
  PermGroup z_f;
  std::vector<ZRefutation> refutations;
};

/// Z(F) from the definition, checked against W_G(S). For each z in Z(S):
/// every maximal morphism c_g on Q must extend to Q<z> fixing z, i.e. agree
/// on Q with some element of C_G(z).
inline ZFusionResult z_fusion(const FusionContext& ctx) {
  PermGroup ZS = center(ctx.S);
  auto morphisms = maximal_morphisms(ctx);
  ZFusionResult out;
  std::vector<Permutation> members;
  ZS.for_each_element([&](const Permutation& z) {
    PermGroup Cz = centralizer(ctx.G, z);
    for (const auto& m : morphisms)
      if (!extends_into(m, Cz)) {
        out.refutations.push_back({z, m.g, m.domain});
        return;
      }
    members.push_back(z);
  });
  out.z_f = PermGroup(ctx.G.degree(), members);
  if (out.z_f.order() != members.size())
    throw InternalInconsistency("Z(F) computed from the definition is not a subgroup");
  PermGroup W = weakly_closed_subgroup(ctx.G, ctx.S);
  if (!(W == out.z_f))
    throw InternalInconsistency("Z(F) (order " + std::to_string(out.z_f.order()) + ") differs from W_G(S) (order " +
                                std::to_string(W.order()) + ")");
  return out;
}

/// P <= S is normal in F iff every maximal morphism extends to PQ with P invariant.
inline bool is_normal_in_fusion(const FusionContext& ctx, const PermGroup& P,
                                const std::vector<MaximalMorphism>& morphisms) {
  if (!is_normal(P, ctx.S))
    return false;
  PermGroup NP = normalizer(ctx.G, P);
  for (const auto& m : morphisms)
    if (!extends_into(m, NP))
      return false;
  return true;
}

/// O_p(F): the largest subgroup of S normal in F, by scanning the normal
/// subgroups of S in decreasing order.
inline PermGroup op_fusion(const FusionContext& ctx, const Caps& caps = default_caps()) {
  CayleyTable table(ctx.S, caps.subgroup_enumeration);
  auto morphisms = maximal_morphisms(ctx);
  for (const auto& P : table.normal_subgroups()) {
    PermGroup group = table.to_group(P);
    if (is_normal_in_fusion(ctx, group, morphisms))
      return group;
  }
  return PermGroup::trivial(ctx.G.degree());
}

/// F-conjugates of P inside S (P^g <= S for g in G), each listed once.
inline std::vector<PermGroup> fusion_conjugates(const FusionContext& ctx, const PermGroup& P) {
  std::vector<PermGroup> out;
  for (const auto& t : transversal(ctx.G, normalizer(ctx.G, P))) {
    Permutation g = t.inverse(); // right cosets N g
    std::vector<Permutation> gens;
    bool inside = true;
    for (const auto& x : P.generators()) {
      gens.push_back(x.conjugate_by(g));
      inside = inside && ctx.S.contains(gens.back());
    }
    if (inside)
      out.emplace_back(ctx.G.degree(), std::move(gens));
  }
  return out;
}

inline bool is_fully_normalized(const FusionContext& ctx, const PermGroup& P) {
  std::uint64_t n = normalizer(ctx.S, P).order();
  for (const auto& R : fusion_conjugates(ctx, P))
    if (normalizer(ctx.S, R).order() > n)
      return false;
  return true;
}

inline bool is_centric(const FusionContext& ctx, const PermGroup& P) {
  for (const auto& R : fusion_conjugates(ctx, P))
    if (!centralizer(ctx.S, R).is_subgroup_of(R))
      return false;
  return true;
}

/// Aut_S(P) is a Sylow p-subgroup of Aut_F(P).
inline bool is_fully_automized(const FusionContext& ctx, const PermGroup& P) {
  AutGroups a = aut_fusion(ctx, P);
  return a.aut_s.order() == p_part(a.aut_f.order(), ctx.p);
}

/// The transfer computation of the constrained case on a subgroup Q normal
/// in the fusion system: M = Z(Q), H = Aut_F(Q), T = Aut_S(Q).
struct FusionSplit {
  TransferDecomposition decomposition;
  SplitWitness witness;
  std::uint64_t index = 1;
};

inline FusionSplit fusion_split(const FusionContext& ctx, const PermGroup& Q, const PermGroup& expected_center) {
  AutGroups a = aut_fusion(ctx, Q);
  if (a.aut_f.order() / a.aut_s.order() % ctx.p == 0)
    throw InternalInconsistency("|Aut_F(Q) : Aut_S(Q)| is divisible by p");
  ConjugationModule<IndexAction> mod(center(Q), a.aut_f, IndexAction{a.elements});
  FusionSplit out;
  out.decomposition = decompose_transfer(mod, a.aut_s);
  out.index = out.decomposition.index;
  PermGroup ZS = center(ctx.S);
  if (!(out.decomposition.fixed_by_k == ZS))
    throw InternalInconsistency("C_{Z(Q)}(Aut_S(Q)) differs from Z(S)");
  if (!(out.decomposition.fixed_by_h == expected_center))
    throw InternalInconsistency("C_{Z(Q)}(Aut_F(Q)) differs from Z(F)");
  out.witness.w = expected_center;
  out.witness.kernel = out.decomposition.kernel;
  out.witness.image = out.decomposition.image;
  certify_direct_product(out.witness, ZS);
  return out;
}

/// Checks that F_S(N_G(J)) can stand in for N_F(J): S is Sylow in N_G(J),
/// every generator leaves J invariant, and Aut(J) agrees in both systems.
inline bool normalizer_system_matches(const FusionContext& ctx, const FusionContext& sub, const PermGroup& J) {
  if (sub.S.order() != p_part(sub.G.order(), ctx.p) || !ctx.S.is_subgroup_of(sub.G))
    return false;
  for (const auto& g : sub.G.generators())
    for (const auto& x : J.generators())
      if (!J.contains(x.conjugate_by(g)))
        return false;
  return aut_fusion(ctx, J).aut_f.order() == aut_fusion(sub, J).aut_f.order();
}

/// The odd-p route: split Z(S) over Z(N_F(J(S))) through Aut_F(J(S)), and
/// check Z(F) = Z(N_F(J(S))).
inline SplitWitness zf_via_thompson(const FusionContext& ctx, const PermGroup& ZF, const Caps& caps = default_caps()) {
  PermGroup ZS = center(ctx.S);
  PermGroup J = thompson(ctx.S, caps).j;
  if (!ZS.is_subgroup_of(center(J)))
    throw InternalInconsistency("Z(S) is not contained in Z(J(S))");
  FusionContext sub{normalizer(ctx.G, J), ctx.S, ctx.p};
  if (!normalizer_system_matches(ctx, sub, J))
    throw InternalInconsistency("F_S(N_G(J(S))) does not match N_F(J(S))");
  PermGroup ZNF = z_fusion(sub).z_f;
  if (!(ZNF == ZF))
    throw InternalInconsistency("Z(F) differs from Z(N_F(J(S)))");
  return fusion_split(sub, J, ZNF).witness;
}

/// Decides whether Z(F) is a direct factor of Z(S), via O_p(F) when
/// Z(S) <= O_p(F) and via N_F(J(S)) when p is odd.
inline SplitReport verify_zf(const FusionContext& ctx, bool diagnostic = true, const Caps& caps = default_caps()) {
  SplitReport r;
  r.p = ctx.p;
  PermGroup ZS = center(ctx.S);
  PermGroup ZF = z_fusion(ctx).z_f;
  PermGroup Q = op_fusion(ctx, caps);

  if (ZS.is_subgroup_of(Q)) {
    r.case_tag = CaseTag::z_in_opf;
    r.chosen_h = "Aut_F(O_p(F))";
    r.witness = fusion_split(ctx, Q, ZF).witness;
  } else if (ctx.p % 2 == 1) {
    r.case_tag = CaseTag::odd_p;
    r.chosen_h = "Aut_F(J(S)) in N_F(J(S))";
    r.witness = zf_via_thompson(ctx, ZF, caps);
  } else {
    if (!diagnostic)
      throw HypothesisError("neither p odd nor Z(S) <= O_p(F)");
    Setting st{ctx.G, ctx.p, ctx.S, ZS};
    return detail::diagnose(st, ZF, std::move(r), caps);
  }
  if (!r.witness.holds())
    throw InternalInconsistency("fusion direct-product certificate failed under the hypotheses");
  r.verdict = Verdict::verified;
  detail::finish_types(r, ZS);
  return r;
}

} // namespace sylsplit

#endif // SYLSPLIT_FUSION_HPP
