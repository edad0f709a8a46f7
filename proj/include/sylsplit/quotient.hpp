#ifndef SYLSPLIT_QUOTIENT_HPP
#define SYLSPLIT_QUOTIENT_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "caps.hpp"
#include "search.hpp"

namespace sylsplit {

/// G/N realized as the action of G on the right cosets Ng (equal to the
/// left cosets since N is normal). Coset 0 is N itself.
class Quotient {
public:
  Quotient(PermGroup G, PermGroup N, const Caps& caps = default_caps())
    : source_(std::move(G)), kernel_(std::move(N)) {
    if (!is_normal(kernel_, source_))
      throw std::invalid_argument("quotient: N is not a normal subgroup of G");
    const std::uint64_t index = source_.order() / kernel_.order();
    if (kernel_.is_trivial()) {
      image_ = source_;
      return;
    }
    if (index > caps.quotient_index)
      throw ResourceError("quotient_index", caps.quotient_index, index);

    reps_.push_back(source_.identity());
    slots_.emplace(canonical_right_coset_rep(kernel_, source_.identity()), 0);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      for (const auto& s : source_.generators()) {
        Permutation t = reps_[i] * s;
        auto [it, inserted] = slots_.emplace(canonical_right_coset_rep(kernel_, t), reps_.size());
        if (inserted)
          reps_.push_back(std::move(t));
      }
    if (reps_.size() != index)
      throw std::logic_error("quotient: coset enumeration found " + std::to_string(reps_.size()) +
                             " cosets, expected " + std::to_string(index));

    std::vector<Permutation> gens;
    for (const auto& s : source_.generators())
      gens.push_back(image(s));
    image_ = PermGroup(reps_.size(), std::move(gens), index);
  }

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& kernel() const noexcept { return kernel_; }
  const PermGroup& group() const noexcept { return image_; }
  std::size_t index() const noexcept { return static_cast<std::size_t>(image_.order()); }
  bool is_identity_map() const noexcept { return reps_.empty(); }

  /// Index of the coset N*g.
  std::size_t coset_of(const Permutation& g) const {
    if (is_identity_map())
      throw std::logic_error("coset_of on the identity quotient");
    return slots_.at(canonical_right_coset_rep(kernel_, g));
  }

  /// The epimorphism G -> G/N.
  Permutation image(const Permutation& g) const {
    if (is_identity_map())
      return g;
    std::vector<Point> images(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
      images[i] = static_cast<Point>(coset_of(reps_[i] * g));
    return Permutation(std::move(images));
  }

  PermGroup image(const PermGroup& H) const {
    if (is_identity_map())
      return H;
    std::vector<Permutation> gens;
    for (const auto& h : H.generators())
      gens.push_back(image(h));
    return PermGroup(image_.degree(), std::move(gens));
  }

  /// A preimage of q (the coset representative of the coset q sends N to).
  Permutation lift(const Permutation& q) const {
    if (is_identity_map())
      return q;
    return reps_.at(q(0));
  }

  /// Full preimage of a subgroup of G/N.
  PermGroup preimage(const PermGroup& X) const {
    if (is_identity_map())
      return X;
    std::vector<Permutation> gens = kernel_.generators();
    for (const auto& x : X.generators())
      gens.push_back(lift(x));
    return PermGroup(source_.degree(), std::move(gens));
  }

private:
  PermGroup source_;
  PermGroup kernel_;
  PermGroup image_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> slots_;
};

inline Quotient quotient(const PermGroup& G, const PermGroup& N, const Caps& caps = default_caps()) {
  return Quotient(G, N, caps);
}

} // namespace sylsplit

#endif // SYLSPLIT_QUOTIENT_HPP
