#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

/// Parsed contents of a group definition file:
///
///   # comment
///   name heis27
///   p 3
///   degree 27
///   gen (0 1 2)(3 4 5)
struct GroupDefinition {
  std::string name;
  unsigned p = 0;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Throws ParseError carrying the 1-based line number.
GroupDefinition parse_group_definition(std::string_view text);

/// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" is the identity.
/// Throws InvalidPermutation on malformed input.
Permutation parse_cycles(std::string_view text, std::size_t degree);

std::string format_group_definition(const Group& g);

GroupPtr load_group_file(const std::filesystem::path& path, const Caps& caps = {});
void write_group_file(const Group& g, const std::filesystem::path& path);

}  // namespace pgroup
