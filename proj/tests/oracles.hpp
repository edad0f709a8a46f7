// Brute-force reference implementations. They rely only on Permutation
// arithmetic, never on stabilizer chains or library searches.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <sylsplit/sylsplit.hpp>

namespace oracle {

using sylsplit::Permutation;
using ElementList = std::vector<Permutation>;

/// All products of generators, sorted.
inline ElementList closure(std::size_t degree, const ElementList& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  ElementList frontier{Permutation(degree)};
  while (!frontier.empty()) {
    ElementList next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second)
          next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline ElementList closure(const sylsplit::PermGroup& G) { return closure(G.degree(), G.generators()); }

inline ElementList sorted(ElementList xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline bool has(const ElementList& sorted_set, const Permutation& x) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

inline bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

inline ElementList centralizer(const ElementList& G, const ElementList& X) {
  ElementList out;
  for (const auto& g : G)
    if (std::all_of(X.begin(), X.end(), [&](const Permutation& x) { return commute(g, x); }))
      out.push_back(g);
  return out;
}

inline ElementList center(const ElementList& G) { return centralizer(G, G); }

inline ElementList normalizer(const ElementList& G, const ElementList& H) {
  ElementList out;
  for (const auto& g : G)
    if (std::all_of(H.begin(), H.end(), [&](const Permutation& h) { return has(H, h.conjugate_by(g)); }))
      out.push_back(g);
  return out;
}

inline ElementList intersection(const ElementList& A, const ElementList& B) {
  ElementList out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

inline ElementList conjugates(const ElementList& G, const Permutation& x) {
  ElementList out;
  for (const auto& g : G)
    out.push_back(x.conjugate_by(g));
  return sorted(out);
}

inline ElementList conjugate_set(const ElementList& H, const Permutation& g) {
  ElementList out;
  for (const auto& h : H)
    out.push_back(h.conjugate_by(g));
  return sorted(out);
}

inline bool is_subgroup(const ElementList& H) {
  if (H.empty())
    return false;
  for (const auto& a : H)
    for (const auto& b : H)
      if (!has(H, a * b.inverse()))
        return false;
  return true;
}

inline bool is_normal(const ElementList& H, const ElementList& G) {
  for (const auto& g : G)
    for (const auto& h : H)
      if (!has(H, h.conjugate_by(g)))
        return false;
  return true;
}

inline bool is_abelian(const ElementList& H) {
  for (const auto& a : H)
    for (const auto& b : H)
      if (!commute(a, b))
        return false;
  return true;
}

/// Every subgroup of a small group, by repeatedly adjoining one element.
inline std::vector<ElementList> all_subgroups(const ElementList& G) {
  std::size_t degree = G.front().degree();
  std::set<ElementList> found{ElementList{Permutation(degree)}};
  std::vector<ElementList> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElementList> next;
    for (const auto& H : frontier)
      for (const auto& g : G) {
        if (has(H, g))
          continue;
        ElementList gens = H;
        gens.push_back(g);
        ElementList K = closure(degree, gens);
        if (found.insert(K).second)
          next.push_back(K);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::vector<ElementList> normal_subgroups(const ElementList& G) {
  std::vector<ElementList> out;
  for (auto& H : all_subgroups(G))
    if (is_normal(H, G))
      out.push_back(std::move(H));
  return out;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

/// Left cosets gK as sorted element lists, one per coset.
inline std::vector<ElementList> left_cosets(const ElementList& G, const ElementList& K) {
  std::set<ElementList> cosets;
  for (const auto& g : G) {
    ElementList c;
    for (const auto& k : K)
      c.push_back(g * k);
    cosets.insert(sorted(c));
  }
  return {cosets.begin(), cosets.end()};
}

/// Elements of Z(S) whose G-class meets S only in themselves.
inline ElementList weakly_closed(const ElementList& G, const ElementList& S) {
  ElementList out;
  for (const auto& z : center(S)) {
    ElementList in_s = intersection(conjugates(G, z), S);
    if (in_s.size() == 1)
      out.push_back(z);
  }
  return out;
}

inline ElementList to_list(const sylsplit::PermGroup& G) { return sorted(G.elements()); }

inline sylsplit::PermGroup catalog_group(const std::string& name) {
  return sylsplit::load_group_file(std::string(SYLSPLIT_CATALOG_DIR) + "/" + name + ".json").group();
}

inline Permutation P(std::string_view text, std::size_t degree) { return sylsplit::parse_cycles(text, degree); }

} // namespace oracle
