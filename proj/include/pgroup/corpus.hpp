#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

enum class Family {
  kCyclic,
  kElemAbelian,
  kDirectProduct,
  kWreathCpCp,
  kExtraspecialExpP,
  kExtraspecialExpP2,
  kUnitriangular,
  kFromFile,
};

const char* to_string(Family f);

struct GroupSpec {
  std::string name;
  Family family = Family::kCyclic;
  unsigned p = 3;  // from_file: 0 accepts whatever the file declares
  // cyclic: order p^n; elem_abelian: rank n; unitriangular: n x n matrices.
  unsigned n = 1;
  std::vector<GroupSpec> factors;  // direct_product only
  std::filesystem::path source;    // from_file only
};

/// Order of the group a spec describes, computed from the family formula.
/// nullopt for from_file specs.
std::optional<std::size_t> expected_order(const GroupSpec& spec);

/// Permutation generators for a spec (not from_file). Throws InvalidSpec.
std::vector<Permutation> family_generators(const GroupSpec& spec);

/// Builds and enumerates the group. Throws InvalidSpec, OrderCapExceeded.
GroupPtr build(const GroupSpec& spec, const Caps& caps = {});

/// The fixed manifest, restricted to groups of order at most `limit`.
std::vector<GroupSpec> default_corpus(std::size_t limit = 20000);

/// Looks a name up in the unfiltered manifest.
std::optional<GroupSpec> find_in_corpus(const std::string& name);

}  // namespace pgroup
