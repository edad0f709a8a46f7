#ifndef SYLSPLIT_CATALOG_HPP
#define SYLSPLIT_CATALOG_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "perm_group.hpp"

namespace sylsplit {

/// One catalog entry: a named permutation group given by cycle-notation
/// generators at a fixed degree.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::string> tags;
  std::string source; // file path, for messages

  bool has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

  std::vector<Permutation> parsed_generators() const {
    std::vector<Permutation> out;
    for (const auto& g : generators)
      out.push_back(parse_cycles(g, degree));
    return out;
  }

  PermGroup group() const { return PermGroup(degree, parsed_generators()); }
};

namespace detail {

// 1-based line of the first occurrence of `needle` in `text`, or 0.
inline std::size_t line_of(const std::string& text, const std::string& needle) {
  auto pos = text.find(needle);
  if (pos == std::string::npos)
    return 0;
  return static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n')) + 1;
}

} // namespace detail

/// Parses and validates a group file. Errors name the file, line and token.
inline GroupFile parse_group_file(const std::string& text, const std::string& source = "<memory>") {
  auto fail = [&](const std::string& why, const std::string& token, std::size_t line) -> ParseError {
    return ParseError(source + ":" + std::to_string(line) + ": " + why, token, line);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what(), "", e.byte);
  }
  if (!j.is_object())
    throw fail("group file must be a JSON object", "", 1);
  for (const char* key : {"name", "degree", "generators"})
    if (!j.contains(key))
      throw fail(std::string("missing field '") + key + "'", key, 1);
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "degree" && key != "generators" && key != "tags")
      throw fail("unknown field '" + key + "'", key, detail::line_of(text, "\"" + key + "\""));

  GroupFile gf;
  gf.source = source;
  if (!j["name"].is_string() || j["name"].get<std::string>().empty())
    throw fail("'name' must be a nonempty string", "name", detail::line_of(text, "\"name\""));
  gf.name = j["name"].get<std::string>();
  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0)
    throw fail("'degree' must be a positive integer", "degree", detail::line_of(text, "\"degree\""));
  gf.degree = j["degree"].get<std::size_t>();
  if (!j["generators"].is_array())
    throw fail("'generators' must be an array of strings", "generators", detail::line_of(text, "\"generators\""));
  for (const auto& g : j["generators"]) {
    if (!g.is_string())
      throw fail("generator must be a string", g.dump(), detail::line_of(text, "\"generators\""));
    gf.generators.push_back(g.get<std::string>());
  }
  if (j.contains("tags")) {
    if (!j["tags"].is_array())
      throw fail("'tags' must be an array of strings", "tags", detail::line_of(text, "\"tags\""));
    for (const auto& t : j["tags"]) {
      if (!t.is_string())
        throw fail("tag must be a string", t.dump(), detail::line_of(text, "\"tags\""));
      gf.tags.push_back(t.get<std::string>());
    }
  }
  for (const auto& g : gf.generators) {
    try {
      (void)parse_cycles(g, gf.degree);
    } catch (const ParseError& e) {
      throw ParseError(source + ":" + std::to_string(detail::line_of(text, "\"" + g + "\"")) + ": generator \"" +
                           g + "\": " + e.what(),
                       e.token(), e.position());
    }
  }
  return gf;
}

inline GroupFile load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_file(buffer.str(), path.string());
}

/// A single .json file, or every .json file in a directory; sorted by name.
inline std::vector<GroupFile> load_catalog(const std::filesystem::path& path) {
  std::vector<GroupFile> out;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        out.push_back(load_group_file(entry.path()));
  } else {
    out.push_back(load_group_file(path));
  }
  std::sort(out.begin(), out.end(), [](const GroupFile& a, const GroupFile& b) { return a.name < b.name; });
  std::set<std::string> names;
  for (const auto& gf : out)
    if (!names.insert(gf.name).second)
      throw ParseError(gf.source + ": duplicate group name '" + gf.name + "'", gf.name, 0);
  return out;
}

} // namespace sylsplit

#endif // SYLSPLIT_CATALOG_HPP
