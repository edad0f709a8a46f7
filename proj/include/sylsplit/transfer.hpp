#ifndef SYLSPLIT_TRANSFER_HPP
#define SYLSPLIT_TRANSFER_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weak_closure.hpp"

namespace sylsplit {

/// Left conjugation ^h m = h m h^-1 of a permutation group on permutations
/// of the same degree.
struct ConjugationAction {
  Permutation operator()(const Permutation& h, const Permutation& m) const { return m.conjugate_by(h.inverse()); }
};

/// Sorted element list of a small group with index lookup.
class ElementIndex {
public:
  explicit ElementIndex(const PermGroup& Q) : elements_(Q.elements()) {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      slots_.emplace(elements_[i], i);
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& at(std::size_t i) const { return elements_[i]; }
  std::size_t index(const Permutation& x) const { return slots_.at(x); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> slots_;
};

/// Automorphisms given as permutations of the element indices of a group Q,
/// acting on the left: ^s m = Q[s^-1(index(m))].
struct IndexAction {
  std::shared_ptr<const ElementIndex> table;

  Permutation operator()(const Permutation& s, const Permutation& m) const {
    return table->at(s.inverse()(static_cast<Point>(table->index(m))));
  }
};

/// An abelian group M, written multiplicatively, with a left action of H.
template <class Action = ConjugationAction>
class ConjugationModule {
public:
  ConjugationModule(PermGroup M, PermGroup H, Action action = Action{})
    : M_(std::move(M)), H_(std::move(H)), act_(std::move(action)) {
    if (!M_.is_abelian())
      throw std::invalid_argument("ConjugationModule: M is not abelian");
  }

  const PermGroup& module() const noexcept { return M_; }
  const PermGroup& actor() const noexcept { return H_; }
  Permutation act(const Permutation& h, const Permutation& m) const { return act_(h, m); }

  bool is_fixed(const PermGroup& K, const Permutation& m) const {
    for (const auto& k : K.generators())
      if (act_(k, m) != m)
        return false;
    return true;
  }

  /// C_M(K)
  PermGroup fixed_points(const PermGroup& K) const {
    return subgroup_search(M_, [&](const Permutation& m) { return is_fixed(K, m); });
  }

  /// Product of ^t m over the given left-coset representatives.
  Permutation transfer_with(const std::vector<Permutation>& reps, const Permutation& m) const {
    Permutation acc = M_.identity();
    for (const auto& t : reps)
      acc *= act_(t, m);
    return acc;
  }

private:
  PermGroup M_;
  PermGroup H_;
  Action act_;
};

/// tr_K^H(m) = prod over t in [H/K] of ^t m, for m in C_M(K).
template <class Action>
Permutation transfer_fixed_points(const ConjugationModule<Action>& mod, const PermGroup& K, const Permutation& m) {
  if (!K.is_subgroup_of(mod.actor()))
    throw std::invalid_argument("transfer: K is not a subgroup of H");
  if (!mod.module().contains(m))
    throw std::invalid_argument("transfer: m is not an element of M");
  if (!mod.is_fixed(K, m))
    throw std::invalid_argument("transfer: m is not fixed by K");
  return mod.transfer_with(transversal(mod.actor(), K), m);
}

/// Kernel and image of tr_K^H on C_M(K).
struct TransferDecomposition {
  PermGroup fixed_by_k;   // C_M(K)
  PermGroup fixed_by_h;   // C_M(H)
  PermGroup kernel;
  PermGroup image;
  std::uint64_t index = 1; // |H:K|
};

template <class Action>
TransferDecomposition decompose_transfer(const ConjugationModule<Action>& mod, const PermGroup& K) {
  TransferDecomposition out;
  out.fixed_by_k = mod.fixed_points(K);
  out.fixed_by_h = mod.fixed_points(mod.actor());
  out.index = mod.actor().order() / K.order();
  auto reps = transversal(mod.actor(), K);
  std::vector<Permutation> kernel, image;
  out.fixed_by_k.for_each_element([&](const Permutation& m) {
    Permutation t = mod.transfer_with(reps, m);
    if (!out.fixed_by_h.contains(t))
      throw InternalInconsistency("transfer value is not H-fixed");
    if (t.is_identity())
      kernel.push_back(m);
    else
      image.push_back(std::move(t));
  });
  out.kernel = PermGroup(mod.module().degree(), std::move(kernel));
  out.image = PermGroup(mod.module().degree(), std::move(image));
  return out;
}

/// Certificate for Z(S) = w x kernel.
struct SplitWitness {
  PermGroup w;
  PermGroup kernel;
  PermGroup image;                  // im(tr), pulled back into Z(S)
  bool product_ok = false;          // w * kernel = Z(S)
  bool intersection_trivial = false;
  bool image_matches_w = false;

  bool holds() const noexcept { return product_ok && intersection_trivial && image_matches_w; }
};

/// Fills the certificate booleans for subgroups w, kernel of an abelian Z.
inline void certify_direct_product(SplitWitness& wit, const PermGroup& Z) {
  bool inside = wit.w.is_subgroup_of(Z) && wit.kernel.is_subgroup_of(Z);
  PermGroup meet = subgroup_intersection(wit.w, wit.kernel);
  wit.intersection_trivial = meet.is_trivial();
  wit.product_ok = inside && wit.w.order() * wit.kernel.order() / meet.order() == Z.order();
  wit.image_matches_w = wit.image == wit.w;
}

/// Splits Z(S) over W_H(S) through the fixed-point transfer, assuming
/// Z(S) <= O_{p',p}(H). Works in H/O_{p'}(H) with M = Z(O_p), then pulls
/// kernel and image back along z -> zN.
inline SplitWitness split_via_transfer(const PermGroup& H, const PermGroup& S, std::uint64_t p,
                                       const Caps& caps = default_caps()) {
  if (!S.is_subgroup_of(H) || S.order() != p_part(H.order(), p))
    throw std::invalid_argument("split_via_transfer: S is not a Sylow p-subgroup of H");
  PermGroup ZS = center(S);
  Quotient q(H, p_prime_core(H, p), caps);
  const PermGroup& Hq = q.group();
  PermGroup Sq = q.image(S);
  PermGroup Qq = p_core(Hq, p, sylow(Hq, p));
  PermGroup ZSq = q.image(ZS);
  if (!Qq.contains_all(ZSq.generators()))
    throw HypothesisError("split_via_transfer: Z(S) is not contained in O_{p',p}(H)");

  // Z(S) -> Z(SN/N) is injective since S ∩ N = 1.
  std::unordered_map<Permutation, Permutation, PermutationHash> pullback;
  ZS.for_each_element([&](const Permutation& z) {
    if (!pullback.emplace(q.image(z), z).second)
      throw InternalInconsistency("quotient map is not injective on Z(S)");
  });
  auto pull = [&](const PermGroup& X) {
    std::vector<Permutation> gens;
    for (const auto& x : X.generators()) {
      auto it = pullback.find(x);
      if (it == pullback.end())
        throw InternalInconsistency("transfer output lies outside the image of Z(S)");
      gens.push_back(it->second);
    }
    return PermGroup(H.degree(), std::move(gens));
  };

  ConjugationModule<> mod(center(Qq), Hq);
  TransferDecomposition dec = decompose_transfer(mod, Sq);
  if (!(dec.fixed_by_k == ZSq))
    throw InternalInconsistency("C_M(S) differs from Z(S) in the reduced group");

  SplitWitness wit;
  wit.w = weakly_closed_subgroup(H, S);
  wit.kernel = pull(dec.kernel);
  wit.image = pull(dec.image);
  certify_direct_product(wit, ZS);
  return wit;
}

} // namespace sylsplit

#endif // SYLSPLIT_TRANSFER_HPP
