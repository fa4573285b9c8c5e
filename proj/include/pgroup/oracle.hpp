#pragma once

#include <vector>

#include "pgroup/kernel.hpp"

namespace pgroup {

/// Brute-force reference implementations. Slow, simple, and independent of
/// the search strategies in charsub.

/// Every admissible normal subgroup (endpoint of a valid chain) and the
/// unique largest one.
struct AdmissibleSet {
  std::vector<Subgroup> members;
  Subgroup maximal;
};

/// Fixpoint over the normal subgroup lattice: 1 is admissible, and N becomes
/// admissible once some admissible K <= N has [Omega1(C_G(K)), N; p-1] = 1.
/// Throws OrderCapExceeded above caps.oracle_cap and NonUniqueMaximal if the
/// admissible set has more than one maximal member.
AdmissibleSet oracle_X(const Group& g, const Caps& caps = {});

/// Join of the maximal-rank elementary abelian subgroups found by scanning the
/// full subgroup lattice. Throws OrderCapExceeded above
/// min(caps.oracle_cap, caps.subgroup_lattice_cap).
Subgroup oracle_J(const Group& g, const Caps& caps = {});

}  // namespace pgroup
