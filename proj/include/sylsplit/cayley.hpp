#ifndef SYLSPLIT_CAYLEY_HPP
#define SYLSPLIT_CAYLEY_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "caps.hpp"
#include "perm_group.hpp"

namespace sylsplit {

/// Subset of a CayleyTable's elements, as a bitset over element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t universe() const noexcept { return n_; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] = words_[i] & other.words_[i];
    return out;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(i))
        out.push_back(i);
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_)
      h = (h ^ w) * 0x100000001b3ull + (h >> 31);
    return static_cast<std::size_t>(h);
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Multiplication table of a small permutation group, with elements in
/// lexicographic order of their image arrays (index 0 is the identity).
class CayleyTable {
public:
  explicit CayleyTable(const PermGroup& G, std::uint64_t cap = default_caps().subgroup_enumeration)
    : degree_(G.degree()) {
    if (G.order() > cap)
      throw ResourceError("subgroup_enumeration", cap, G.order());
    elements_ = G.elements();
    std::sort(elements_.begin(), elements_.end());
    n_ = elements_.size();
    for (std::size_t i = 0; i < n_; ++i)
      index_.emplace(elements_[i], i);
    mul_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        mul_[i * n_ + j] = static_cast<std::uint32_t>(index_.at(elements_[i] * elements_[j]));
    inv_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      inv_[i] = index_.at(elements_[i].inverse());
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index(const Permutation& g) const { return index_.at(g); }
  bool has(const Permutation& g) const { return index_.count(g) != 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  /// a^b = b^-1 a b
  std::size_t conj(std::size_t a, std::size_t b) const { return mul(mul(inv_[b], a), b); }
  bool commute(std::size_t a, std::size_t b) const { return mul(a, b) == mul(b, a); }

  ElementSet empty_set() const { return ElementSet(n_); }

  ElementSet full_set() const {
    ElementSet s(n_);
    for (std::size_t i = 0; i < n_; ++i)
      s.insert(i);
    return s;
  }

  ElementSet set_of(const PermGroup& H) const {
    ElementSet s(n_);
    H.for_each_element([&](const Permutation& h) { s.insert(index(h)); });
    return s;
  }

  /// Subgroup generated by `base` (assumed closed) together with `extra`.
  ElementSet closure(const ElementSet& base, const std::vector<std::size_t>& extra) const {
    std::vector<std::size_t> gens = generators_of(base);
    gens.insert(gens.end(), extra.begin(), extra.end());
    ElementSet out(n_);
    std::vector<std::size_t> queue{0};
    out.insert(0);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t g : gens) {
        std::size_t x = mul(queue[i], g);
        if (!out.contains(x)) {
          out.insert(x);
          queue.push_back(x);
        }
      }
    return out;
  }

  ElementSet generate(const std::vector<std::size_t>& gens) const { return closure(trivial(), gens); }

  ElementSet trivial() const {
    ElementSet s(n_);
    s.insert(0);
    return s;
  }

  /// Greedy generating set: members in index order not already generated.
  std::vector<std::size_t> generators_of(const ElementSet& H) const {
    std::vector<std::size_t> gens;
    ElementSet reached = trivial();
    for (std::size_t i : H.members()) {
      if (reached.contains(i))
        continue;
      gens.push_back(i);
      // extend `reached` by closing under the new generator
      std::vector<std::size_t> queue = reached.members();
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (std::size_t g : gens) {
          std::size_t x = mul(queue[k], g);
          if (!reached.contains(x)) {
            reached.insert(x);
            queue.push_back(x);
          }
        }
    }
    return gens;
  }

  PermGroup to_group(const ElementSet& H) const {
    std::vector<Permutation> gens;
    for (std::size_t i : generators_of(H))
      gens.push_back(elements_[i]);
    return PermGroup(degree_, std::move(gens));
  }

  bool is_abelian(const ElementSet& H) const {
    auto gens = generators_of(H);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!commute(gens[i], gens[j]))
          return false;
    return true;
  }

  bool is_normal(const ElementSet& H, const ElementSet& in) const {
    auto gens = generators_of(in);
    for (std::size_t h : H.members())
      for (std::size_t g : gens)
        if (!H.contains(conj(h, g)))
          return false;
    return true;
  }

  /// C_in(H)
  ElementSet centralizer(const ElementSet& H, const ElementSet& in) const {
    auto gens = generators_of(H);
    ElementSet out(n_);
    for (std::size_t x : in.members()) {
      bool ok = true;
      for (std::size_t g : gens)
        if (!commute(x, g)) {
          ok = false;
          break;
        }
      if (ok)
        out.insert(x);
    }
    return out;
  }

  /// Product set HK (a subgroup when one factor normalizes the other).
  ElementSet product(const ElementSet& H, const ElementSet& K) const {
    ElementSet out(n_);
    for (std::size_t h : H.members())
      for (std::size_t k : K.members())
        out.insert(mul(h, k));
    return out;
  }

  std::vector<ElementSet> conjugacy_classes() const {
    std::vector<ElementSet> classes;
    std::vector<bool> seen(n_, false);
    auto gens = generators_of(full_set());
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i])
        continue;
      ElementSet cls(n_);
      std::vector<std::size_t> queue{i};
      cls.insert(i);
      seen[i] = true;
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (std::size_t g : gens) {
          std::size_t x = conj(queue[k], g);
          if (!cls.contains(x)) {
            cls.insert(x);
            seen[x] = true;
            queue.push_back(x);
          }
        }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  /// Every subgroup, by closure under adjoining single elements. Ordered by
  /// decreasing order, ties broken by element bitset order of discovery.
  std::vector<ElementSet> all_subgroups() const {
    return enumerate([](const ElementSet&, std::size_t) { return true; });
  }

  /// Normal subgroups, as unions of conjugacy classes closed under products.
  std::vector<ElementSet> normal_subgroups() const {
    auto classes = conjugacy_classes();
    std::vector<ElementSet> found{trivial()};
    std::unordered_set<ElementSet, ElementSetHash> seen{trivial()};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto& cls : classes) {
        if (cls.is_subset_of(found[i]))
          continue;
        ElementSet next = closure(found[i], cls.members());
        if (seen.insert(next).second)
          found.push_back(std::move(next));
      }
    }
    sort_by_order_desc(found);
    return found;
  }

  /// Abelian subgroups: closure of an abelian subgroup with an element of
  /// its centralizer stays abelian.
  std::vector<ElementSet> abelian_subgroups() const {
    std::vector<ElementSet> found{trivial()};
    std::unordered_set<ElementSet, ElementSetHash> seen{trivial()};
    for (std::size_t i = 0; i < found.size(); ++i) {
      ElementSet cent = centralizer(found[i], full_set());
      for (std::size_t x : cent.members()) {
        if (found[i].contains(x))
          continue;
        ElementSet next = closure(found[i], {x});
        if (seen.insert(next).second)
          found.push_back(std::move(next));
      }
    }
    sort_by_order_desc(found);
    return found;
  }

private:
  template <class Allow>
  std::vector<ElementSet> enumerate(Allow&& allow) const {
    std::vector<ElementSet> found{trivial()};
    std::unordered_set<ElementSet, ElementSetHash> seen{trivial()};
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t x = 0; x < n_; ++x) {
        if (found[i].contains(x) || !allow(found[i], x))
          continue;
        ElementSet next = closure(found[i], {x});
        if (seen.insert(next).second)
          found.push_back(std::move(next));
      }
    sort_by_order_desc(found);
    return found;
  }

  static void sort_by_order_desc(std::vector<ElementSet>& sets) {
    std::stable_sort(sets.begin(), sets.end(),
                     [](const ElementSet& a, const ElementSet& b) { return a.size() > b.size(); });
  }

  std::size_t degree_ = 0;
  std::size_t n_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::size_t> inv_;
};

} // namespace sylsplit

#endif // SYLSPLIT_CAYLEY_HPP
