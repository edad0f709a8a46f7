#ifndef SYLSPLIT_SEARCH_HPP
#define SYLSPLIT_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "perm_group.hpp"

namespace sylsplit {

inline void require_same_degree(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

inline void require_same_degree(const PermGroup& a, const Permutation& x) {
  if (a.degree() != x.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(x.degree()));
}

/// Returns {g in G : pred(g)}, where `pred` must cut out a subgroup.
///
/// Walks the stabilizer chain bottom-up. At level l the result found so far
/// is R ∩ G^(l+1); a coset of G^(l+1) is searched only when its base image
/// lies outside the current orbit of the partial result, so each coset of
/// every stabilizer is visited at most once.
template <class Pred>
PermGroup subgroup_search(const PermGroup& G, Pred&& pred) {
  const auto& chain = G.chain();
  std::vector<Permutation> found;
  for (std::size_t l = chain.size(); l-- > 0;) {
    const ChainLevel& level = chain[l];
    std::vector<bool> covered(G.degree(), false);
    auto refresh = [&] {
      std::fill(covered.begin(), covered.end(), false);
      std::vector<Point> queue{level.base};
      covered[level.base] = true;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& s : found) {
          Point q = s(queue[i]);
          if (!covered[q]) {
            covered[q] = true;
            queue.push_back(q);
          }
        }
    };
    refresh();
    for (Point gamma : level.orbit) {
      if (covered[gamma])
        continue;
      std::optional<Permutation> hit;
      G.find_in_stabilizer_coset(l + 1, level.rep(gamma), [&](const Permutation& g) {
        if (!pred(g))
          return false;
        hit = g;
        return true;
      });
      if (hit) {
        found.push_back(std::move(*hit));
        refresh();
      }
    }
  }
  return PermGroup(G.degree(), std::move(found));
}

/// C_G(x)
inline PermGroup centralizer(const PermGroup& G, const Permutation& x) {
  require_same_degree(G, x);
  return subgroup_search(G, [&](const Permutation& g) { return x * g == g * x; });
}

/// C_G(H): elements of G commuting with every generator of H.
inline PermGroup centralizer(const PermGroup& G, const PermGroup& H) {
  require_same_degree(G, H);
  const auto& gens = H.generators();
  return subgroup_search(G, [&](const Permutation& g) {
    for (const auto& h : gens)
      if (h * g != g * h)
        return false;
    return true;
  });
}

/// N_G(H). H need not lie in G.
inline PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  require_same_degree(G, H);
  const auto& gens = H.generators();
  // Small H: hash its elements instead of sifting every conjugate.
  if (H.order() <= 4096) {
    std::unordered_set<Permutation, PermutationHash> members;
    H.for_each_element([&](const Permutation& h) { members.insert(h); });
    return subgroup_search(G, [&](const Permutation& g) {
      for (const auto& h : gens)
        if (!members.count(h.conjugate_by(g)))
          return false;
      return true;
    });
  }
  return subgroup_search(G, [&](const Permutation& g) {
    for (const auto& h : gens)
      if (!H.contains(h.conjugate_by(g)))
        return false;
    return true;
  });
}

inline PermGroup subgroup_intersection(const PermGroup& A, const PermGroup& B) {
  require_same_degree(A, B);
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& large = A.order() <= B.order() ? B : A;
  return subgroup_search(small, [&](const Permutation& g) { return large.contains(g); });
}

/// The subgroup generated by two groups' generators.
inline PermGroup join(const PermGroup& A, const PermGroup& B) {
  require_same_degree(A, B);
  std::vector<Permutation> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return PermGroup(A.degree(), std::move(gens));
}

inline bool is_normal(const PermGroup& N, const PermGroup& G) {
  if (!N.is_subgroup_of(G))
    return false;
  for (const auto& n : N.generators())
    for (const auto& g : G.generators())
      if (!N.contains(n.conjugate_by(g)))
        return false;
  return true;
}

/// Smallest normal subgroup of G containing `seed`.
inline PermGroup normal_closure(const PermGroup& G, std::vector<Permutation> seed) {
  PermGroup N(G.degree(), seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < N.generators().size() && !grew; ++i)
      for (const auto& g : G.generators()) {
        Permutation c = N.generators()[i].conjugate_by(g);
        if (!N.contains(c)) {
          std::vector<Permutation> gens = N.generators();
          gens.push_back(std::move(c));
          N = PermGroup(G.degree(), std::move(gens));
          grew = true;
          break;
        }
      }
  }
  return N;
}

/// [a, b] = a^-1 b^-1 a b
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

inline PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Permutation> seed;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seed.push_back(commutator(gens[i], gens[j]));
  return normal_closure(G, std::move(seed));
}

struct DerivedSeries {
  std::vector<PermGroup> terms; // G = terms[0] > terms[1] > ... (last term repeats nothing)
  bool solvable = false;
};

/// G ⊇ G' ⊇ G'' ... until the series stabilizes; the stable term is listed once.
inline DerivedSeries derived_series(const PermGroup& G) {
  DerivedSeries series;
  series.terms.push_back(G);
  while (!series.terms.back().is_trivial()) {
    PermGroup next = derived_subgroup(series.terms.back());
    if (next.order() == series.terms.back().order())
      break;
    series.terms.push_back(std::move(next));
  }
  series.solvable = series.terms.back().is_trivial();
  return series;
}

inline bool is_solvable(const PermGroup& G) { return derived_series(G).solvable; }

/// Conjugation orbit of x under G, with a conjugating element for each
/// member: result[i].second satisfies x^g = result[i].first.
inline std::vector<std::pair<Permutation, Permutation>> conjugation_orbit_with_witnesses(
    const PermGroup& G, const Permutation& x) {
  require_same_degree(G, x);
  std::vector<std::pair<Permutation, Permutation>> orbit{{x, G.identity()}};
  std::unordered_set<Permutation, PermutationHash> seen{x};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : G.generators()) {
      Permutation y = orbit[i].first.conjugate_by(s);
      if (seen.insert(y).second)
        orbit.emplace_back(std::move(y), orbit[i].second * s);
    }
  return orbit;
}

/// x^G, in breadth-first discovery order.
inline std::vector<Permutation> conjugacy_class(const PermGroup& G, const Permutation& x) {
  require_same_degree(G, x);
  std::vector<Permutation> orbit{x};
  std::unordered_set<Permutation, PermutationHash> seen{x};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : G.generators()) {
      Permutation y = orbit[i].conjugate_by(s);
      if (seen.insert(y).second)
        orbit.push_back(std::move(y));
    }
  return orbit;
}

/// Some g in G with x^g = y, or nothing when x and y are not G-conjugate.
inline std::optional<Permutation> conjugator(const PermGroup& G, const Permutation& x, const Permutation& y) {
  require_same_degree(G, x);
  require_same_degree(G, y);
  if (x.cycle_type() != y.cycle_type())
    return std::nullopt;
  for (auto& [member, g] : conjugation_orbit_with_witnesses(G, x))
    if (member == y)
      return g;
  return std::nullopt;
}

/// All conjugacy classes, ordered by first appearance in element order.
inline std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& G) {
  std::vector<std::vector<Permutation>> classes;
  std::unordered_set<Permutation, PermutationHash> seen;
  G.for_each_element([&](const Permutation& g) {
    if (seen.count(g))
      return;
    classes.push_back(conjugacy_class(G, g));
    seen.insert(classes.back().begin(), classes.back().end());
  });
  return classes;
}

/// Canonical element of the right coset K*h: base images of K minimized
/// level by level. Two elements share a right coset iff their keys agree.
inline Permutation canonical_right_coset_rep(const PermGroup& K, Permutation h) {
  for (const auto& level : K.chain()) {
    Point best = static_cast<Point>(K.degree());
    Point best_gamma = level.base;
    for (Point gamma : level.orbit) {
      Point image = h(gamma);
      if (image < best) {
        best = image;
        best_gamma = gamma;
      }
    }
    h = level.rep(best_gamma) * h;
  }
  return h;
}

/// Key identifying the left coset g*K.
inline Permutation left_coset_key(const PermGroup& K, const Permutation& g) {
  return canonical_right_coset_rep(K, g.inverse());
}

/// Representatives of the left cosets tK of K in G, beginning with the
/// identity, in breadth-first order over G's generators.
inline std::vector<Permutation> transversal(const PermGroup& G, const PermGroup& K) {
  require_same_degree(G, K);
  if (!K.is_subgroup_of(G))
    throw std::invalid_argument("transversal: K is not a subgroup of G");
  std::vector<Permutation> reps{G.identity()};
  std::unordered_set<Permutation, PermutationHash> keys{left_coset_key(K, G.identity())};
  const std::uint64_t index = G.order() / K.order();
  for (std::size_t i = 0; i < reps.size() && reps.size() < index; ++i)
    for (const auto& s : G.generators()) {
      Permutation t = s * reps[i];
      if (keys.insert(left_coset_key(K, t)).second)
        reps.push_back(std::move(t));
    }
  if (reps.size() != index)
    throw std::logic_error("transversal: found " + std::to_string(reps.size()) + " cosets, expected " +
                           std::to_string(index));
  return reps;
}

/// Cheap order-only test for p-groups.
inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace sylsplit

#endif // SYLSPLIT_SEARCH_HPP
