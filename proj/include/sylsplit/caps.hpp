#ifndef SYLSPLIT_CAPS_HPP
#define SYLSPLIT_CAPS_HPP

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sylsplit {

struct Caps {
  std::uint64_t brute_force_order = 10000;   // searches may enumerate below this
  std::uint64_t quotient_index = 20000;      // largest |G:N| realized as a coset action
  std::uint64_t subgroup_enumeration = 4096; // largest |S| for exhaustive subgroup scans
  std::uint64_t complement_order = 4096;     // largest |A| for complement search

  /// Parses "a,b,c,d"; missing trailing fields keep their defaults.
  static Caps parse(const std::string& text) {
    Caps caps;
    std::uint64_t* fields[] = {&caps.brute_force_order, &caps.quotient_index,
                               &caps.subgroup_enumeration, &caps.complement_order};
    std::stringstream in(text);
    std::string item;
    std::size_t i = 0;
    std::size_t offset = 0;
    while (std::getline(in, item, ',')) {
      if (i == 4)
        throw ParseError("too many cap values", item, offset);
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("cap value is not a positive integer: '" + item + "'", item, offset);
      *fields[i++] = std::stoull(item);
      offset += item.size() + 1;
    }
    return caps;
  }

  /// Defaults overridden by SYLSPLIT_CAPS when set.
  static Caps from_environment() {
    const char* env = std::getenv("SYLSPLIT_CAPS");
    return env ? parse(env) : Caps{};
  }
};

inline const Caps& default_caps() {
  static const Caps caps = Caps::from_environment();
  return caps;
}

} // namespace sylsplit

#endif // SYLSPLIT_CAPS_HPP
