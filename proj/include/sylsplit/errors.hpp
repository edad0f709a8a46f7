#ifndef SYLSPLIT_ERRORS_HPP
#define SYLSPLIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylsplit {

/// Malformed cycle notation or catalog input. `position` is a 0-based offset
/// into the offending text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::string token, std::size_t position)
    : std::runtime_error(what), token_(std::move(token)), position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string token_;
  std::size_t position_;
};

/// A configured size cap was exceeded.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& cap_name, unsigned long long cap, unsigned long long requested)
    : std::runtime_error("resource cap '" + cap_name + "' = " + std::to_string(cap) +
                         " exceeded (requested " + std::to_string(requested) + ")"),
      cap_name_(cap_name) {}

  const std::string& cap_name() const noexcept { return cap_name_; }

private:
  std::string cap_name_;
};

/// The input does not satisfy the hypothesis an operation requires.
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computed identity that must hold failed. Never valid output.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sylsplit

#endif // SYLSPLIT_ERRORS_HPP
