#ifndef SYLSPLIT_PERMUTATION_HPP
#define SYLSPLIT_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace sylsplit {

/// Internal point index. Points are stored 0-based; text I/O is 1-based.
using Point = std::uint32_t;

/// A bijection of {0..degree-1}. Products act on the right, so
/// `(a * b)(x) = b(a(x))` and `x^g = g^-1 * x * g`.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes 0-based images. Throws if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw std::invalid_argument("image array is not a permutation");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  Permutation operator*(const Permutation& rhs) const {
    check_degree(rhs);
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation& operator*=(const Permutation& rhs) { return *this = *this * rhs; }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  /// x^g = g^-1 x g
  Permutation conjugate_by(const Permutation& g) const {
    check_degree(g);
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[g.images_[i]] = g.images_[images_[i]];
    return out;
  }

  Permutation pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Permutation acc(degree());
    while (n) {
      if (n & 1u)
        acc *= base;
      base *= base;
      n >>= 1u;
    }
    return acc;
  }

  /// Cycle lengths of nontrivial cycles, sorted ascending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len > 1)
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (std::size_t len : cycle_type())
      result = std::lcm(result, static_cast<std::uint64_t>(len));
    return result;
  }

  /// Least moved point, or degree() for the identity.
  Point least_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return static_cast<Point>(i);
    return static_cast<Point>(images_.size());
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : images_) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

private:
  void check_degree(const Permutation& other) const {
    if (other.images_.size() != images_.size())
      throw std::invalid_argument("degree mismatch: " + std::to_string(images_.size()) + " vs " +
                                  std::to_string(other.images_.size()));
  }

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// Canonical cycle notation: cycles ordered by least moved point, each
/// starting at its least point, 1-based, no whitespace. Identity is "()".
inline std::string format_cycles(const Permutation& g) {
  std::string out;
  std::vector<bool> seen(g.degree(), false);
  for (Point i = 0; i < g.degree(); ++i) {
    if (seen[i] || g(i) == i)
      continue;
    out += '(';
    for (Point j = i; !seen[j]; j = g(j)) {
      seen[j] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& g) { return os << format_cycles(g); }

/// Parses `permutation := "()" | cycle+`, `cycle := "(" int ("," int)+ ")"`.
/// Points are 1-based decimals at most `degree`; cycles must be disjoint.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  auto fail = [&](const std::string& why, std::size_t pos, std::size_t len = 1) -> ParseError {
    std::string token(text.substr(pos, len));
    return ParseError(why + " at position " + std::to_string(pos) + " (token '" + token + "')", token, pos);
  };

  if (text == "()")
    return Permutation(degree);
  if (text.empty())
    throw ParseError("empty permutation text; identity is written \"()\"", "", 0);

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw fail("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        ++pos;
      if (pos == start)
        throw fail("expected a point", start);
      std::string_view digits = text.substr(start, pos - start);
      if (digits.size() > 9)
        throw fail("point out of range", start, digits.size());
      unsigned long value = std::stoul(std::string(digits));
      if (value == 0 || value > degree)
        throw fail("point out of range 1.." + std::to_string(degree), start, digits.size());
      Point p = static_cast<Point>(value - 1);
      if (used[p])
        throw fail("repeated point", start, digits.size());
      used[p] = true;
      cycle.push_back(p);
      if (pos >= text.size())
        throw fail("unterminated cycle", text.size() - 1);
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')')
        break;
      throw fail("unexpected character", pos);
    }
    if (cycle.size() < 2)
      throw fail("cycle needs at least two points", pos);
    ++pos;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

} // namespace sylsplit

template <>
struct std::hash<sylsplit::Permutation> {
  std::size_t operator()(const sylsplit::Permutation& p) const noexcept { return p.hash(); }
};

#endif // SYLSPLIT_PERMUTATION_HPP
