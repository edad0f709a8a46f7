#ifndef SYLSPLIT_WEAK_CLOSURE_HPP
#define SYLSPLIT_WEAK_CLOSURE_HPP

#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "structure.hpp"

namespace sylsplit {

/// True iff the G-class of x meets S only in x. Requires x in S.
inline bool is_weakly_closed(const PermGroup& G, const PermGroup& S, const Permutation& x) {
  if (!S.contains(x))
    throw std::invalid_argument("is_weakly_closed: x is not an element of S");
  std::vector<Permutation> orbit{x};
  std::unordered_set<Permutation, PermutationHash> seen{x};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : G.generators()) {
      Permutation y = orbit[i].conjugate_by(g);
      if (!seen.insert(y).second)
        continue;
      if (S.contains(y))
        return false;
      orbit.push_back(std::move(y));
    }
  return true;
}

/// W_G(S): the weakly closed elements of S, tested over Z(S). Throws
/// InternalInconsistency if the set fails to be a subgroup.
inline PermGroup weakly_closed_subgroup(const PermGroup& G, const PermGroup& S) {
  PermGroup ZS = center(S);
  std::vector<Permutation> members;
  ZS.for_each_element([&](const Permutation& z) {
    if (is_weakly_closed(G, S, z))
      members.push_back(z);
  });
  std::unordered_set<Permutation, PermutationHash> set(members.begin(), members.end());
  for (const auto& a : members) {
    if (!set.count(a.inverse()))
      throw InternalInconsistency("weakly closed elements not closed under inverses");
    for (const auto& b : members)
      if (!set.count(a * b))
        throw InternalInconsistency("weakly closed elements not closed under products");
  }
  PermGroup W(G.degree(), members);
  if (W.order() != members.size())
    throw InternalInconsistency("weakly closed set does not match the group it generates");
  return W;
}

} // namespace sylsplit

#endif // SYLSPLIT_WEAK_CLOSURE_HPP
