#ifndef SYLSPLIT_PERM_GROUP_HPP
#define SYLSPLIT_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace sylsplit {

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// stabilizer of all earlier base points, with a transversal element per
/// orbit point mapping `base` to it.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> strong_generators;
  std::vector<Point> orbit;                   // in discovery order
  std::vector<std::int32_t> slot;             // point -> index into orbit, or -1
  std::vector<Permutation> transversal;       // parallel to orbit
  std::vector<Permutation> inverse_transversal;

  bool in_orbit(Point p) const { return slot[p] >= 0; }
  const Permutation& rep(Point p) const { return transversal[static_cast<std::size_t>(slot[p])]; }
  const Permutation& rep_inverse(Point p) const { return inverse_transversal[static_cast<std::size_t>(slot[p])]; }
};

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain. Immutable once constructed.
class PermGroup {
public:
  PermGroup() : PermGroup(0, {}) {}

  /// `known_order`, when supplied, lets the chain construction stop as soon
  /// as the orbit product reaches it.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::optional<std::uint64_t> known_order = std::nullopt)
    : degree_(degree) {
    for (auto& g : generators) {
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                    " does not match group degree " + std::to_string(degree));
      if (!g.is_identity())
        generators_.push_back(std::move(g));
    }
    build_chain(known_order);
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ChainLevel>& chain() const noexcept { return chain_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  Permutation identity() const { return Permutation(degree_); }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& level : chain_)
      b.push_back(level.base);
    return b;
  }

  /// Sifts `g` through the chain from `from_level`. Returns the residue and
  /// the level where sifting stopped (chain().size() on success).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level = 0) const {
    for (std::size_t i = from_level; i < chain_.size(); ++i) {
      const ChainLevel& level = chain_[i];
      Point image = g(level.base);
      if (!level.in_orbit(image))
        return {std::move(g), i};
      g *= level.rep_inverse(image);
    }
    return {std::move(g), chain_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_)
      return false;
    auto [residue, level] = strip(g);
    return level == chain_.size() && residue.is_identity();
  }

  bool contains_all(const std::vector<Permutation>& gs) const {
    for (const auto& g : gs)
      if (!contains(g))
        return false;
    return true;
  }

  bool is_subgroup_of(const PermGroup& other) const {
    return degree_ == other.degree_ && other.contains_all(generators_);
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
          return false;
    return true;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.order_ == b.order_ && a.contains_all(b.generators_);
  }

  /// Visits every element exactly once, as products u_k...u_1 u_0 of
  /// transversal elements taken in orbit order.
  template <class Visitor>
  void for_each_element(Visitor&& visit) const {
    find_element([&](const Permutation& g) {
      visit(g);
      return false;
    });
  }

  /// Like for_each_element, but the visitor returns true to stop early.
  /// Returns whether it stopped.
  template <class Visitor>
  bool find_element(Visitor&& visit) const {
    if (chain_.empty())
      return visit(identity());
    return walk(chain_.size() - 1, 0, identity(), nullptr, visit);
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order_));
    for_each_element([&](const Permutation& g) { out.push_back(g); });
    return out;
  }

  /// Searches the coset G^(level) * rep, where G^(level) is the pointwise
  /// stabilizer of the first `level` base points. Stops when `visit` returns true.
  template <class Visitor>
  bool find_in_stabilizer_coset(std::size_t level, const Permutation& rep, Visitor&& visit) const {
    if (level >= chain_.size())
      return visit(rep);
    return walk(chain_.size() - 1, level, identity(), &rep, visit);
  }

private:
  template <class Visitor>
  bool walk(std::size_t level, std::size_t stop, const Permutation& prefix, const Permutation* suffix,
            Visitor& visit) const {
    for (const auto& u : chain_[level].transversal) {
      Permutation g = prefix * u;
      if (level == stop) {
        if (suffix ? visit(g * *suffix) : visit(g))
          return true;
      } else if (walk(level - 1, stop, g, suffix, visit)) {
        return true;
      }
    }
    return false;
  }

  void recompute_orbit(std::size_t i) {
    ChainLevel& level = chain_[i];
    level.orbit.clear();
    level.transversal.clear();
    level.inverse_transversal.clear();
    level.slot.assign(degree_, -1);
    level.orbit.push_back(level.base);
    level.slot[level.base] = 0;
    level.transversal.push_back(identity());
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      Point p = level.orbit[k];
      for (const auto& s : level.strong_generators) {
        Point q = s(p);
        if (level.slot[q] >= 0)
          continue;
        level.slot[q] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(q);
        level.transversal.push_back(level.transversal[k] * s);
      }
    }
    level.inverse_transversal.reserve(level.transversal.size());
    for (const auto& u : level.transversal)
      level.inverse_transversal.push_back(u.inverse());
  }

  std::uint64_t chain_order() const {
    std::uint64_t n = 1;
    for (const auto& level : chain_)
      n *= level.orbit.size();
    return n;
  }

  void append_level(Point base) {
    ChainLevel level;
    level.base = base;
    chain_.push_back(std::move(level));
  }

  // Adds `g` as a strong generator at levels [from, to], extending the base
  // when `to` is past the end.
  void add_strong_generator(const Permutation& g, std::size_t from, std::size_t to) {
    if (to == chain_.size())
      append_level(g.least_moved_point());
    for (std::size_t j = from; j <= to; ++j)
      chain_[j].strong_generators.push_back(g);
    for (std::size_t j = from; j <= to; ++j)
      recompute_orbit(j);
  }

  void build_chain(std::optional<std::uint64_t> known_order) {
    chain_.clear();
    for (const auto& g : generators_) {
      bool fixes_base = true;
      for (const auto& level : chain_)
        if (g(level.base) != level.base) {
          fixes_base = false;
          break;
        }
      if (fixes_base)
        append_level(g.least_moved_point());
    }
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      for (const auto& g : generators_) {
        bool fixes_prefix = true;
        for (std::size_t j = 0; j < i && fixes_prefix; ++j)
          fixes_prefix = g(chain_[j].base) == chain_[j].base;
        if (fixes_prefix)
          chain_[i].strong_generators.push_back(g);
      }
      recompute_orbit(i);
    }

    auto done = [&] { return known_order && chain_order() == *known_order; };

    // Schreier-Sims: check every Schreier generator at each level, bottom up.
    std::size_t i = chain_.size();
    while (i > 0 && !done()) {
      --i;
      bool restarted = false;
      for (std::size_t k = 0; k < chain_[i].orbit.size() && !restarted; ++k) {
        Point p = chain_[i].orbit[k];
        for (std::size_t s = 0; s < chain_[i].strong_generators.size(); ++s) {
          const Permutation& gen = chain_[i].strong_generators[s];
          Point q = gen(p);
          Permutation schreier = chain_[i].transversal[k] * gen * chain_[i].rep_inverse(q);
          if (schreier.is_identity())
            continue;
          auto [residue, stop] = strip(schreier, i + 1);
          if (stop == chain_.size() && residue.is_identity())
            continue;
          add_strong_generator(residue, i + 1, stop);
          i = stop + 1;
          restarted = true;
          break;
        }
        if (done())
          break;
      }
    }
    order_ = chain_order();
    if (known_order && order_ != *known_order)
      throw std::logic_error("stabilizer chain order " + std::to_string(order_) +
                             " disagrees with known order " + std::to_string(*known_order));
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  std::uint64_t order_ = 1;
};

/// group_generate: the subgroup generated by `gens` inside Sym(degree).
inline PermGroup group_generate(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

/// Generators must be nonempty to infer the degree.
inline PermGroup group_generate(std::vector<Permutation> gens) {
  if (gens.empty())
    throw std::invalid_argument("cannot infer degree from an empty generator list");
  std::size_t degree = gens.front().degree();
  return PermGroup(degree, std::move(gens));
}

} // namespace sylsplit

#endif // SYLSPLIT_PERM_GROUP_HPP
