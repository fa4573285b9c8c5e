#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace pgroup {

/// Index of an element in a Group's element table. Index 0 is the identity.
using Elem = std::uint32_t;

/// A point of the permutation domain {0, ..., degree-1}.
using Point = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

/// Resource limits. Exceeding any of them raises a CapExceeded error.
struct Caps {
  std::size_t max_order = 20000;
  std::size_t normal_lattice_cap = 729;
  std::size_t subgroup_lattice_cap = 243;
  std::size_t oracle_cap = 729;
  // Quotient order above which intermediate subgroups are not enumerated.
  std::size_t interval_cap = 243;
  // Coset-action degree limit for quotient groups.
  std::size_t max_quotient_degree = 4096;
  std::uint64_t search_budget = 10'000'000;
};

}  // namespace pgroup
