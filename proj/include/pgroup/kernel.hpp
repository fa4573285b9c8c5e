#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// Smallest subgroup containing `seed`; the seed (duplicates dropped) is kept
/// as the generator witness.
Subgroup generated_subgroup(const Group& g, std::span<const Elem> seed);

/// Subgroup with the given member set, which must already be closed. A small
/// generating set is chosen greedily in ascending element order.
Subgroup subgroup_from_members(const Group& g, const ElementSet& members);

std::size_t element_order(const Group& g, Elem x);

/// Elements of G commuting with every generator of H.
Subgroup centralizer(const Group& g, const Subgroup& h);

/// Z(G).
Subgroup center(const Group& g);
/// Z(H) for a subgroup H.
Subgroup center(const Group& g, const Subgroup& h);

bool is_abelian(const Group& g, const Subgroup& h);

/// True iff every conjugate of a generator of H by a generator of G lies in H.
bool is_normal(const Group& g, const Subgroup& h);

/// Smallest normal subgroup of G containing `seed`.
Subgroup normal_closure(const Group& g, std::span<const Elem> seed);
Subgroup normal_closure(const Group& g, const Subgroup& h);

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup meet(const Group& g, const Subgroup& a, const Subgroup& b);

/// [A, B], generated by all a^-1 b^-1 a b with a in A and b in B.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);

/// Left-normed [A, B; k]: [A, B; 1] = [A, B] and [A, B; k] = [[A, B; k-1], B].
Subgroup iterated_commutator(const Group& g, const Subgroup& a, const Subgroup& b, unsigned k);

/// Subgroup generated by the elements of H whose order divides p.
Subgroup omega1(const Group& g, const Subgroup& h);

/// Rank when H is elementary abelian, otherwise nullopt.
std::optional<unsigned> elementary_abelian_rank(const Group& g, const Subgroup& h);

/// All normal subgroups, ordered by (order, member bit vector).
/// Throws OrderCapExceeded above caps.normal_lattice_cap.
std::vector<Subgroup> list_normal_subgroups(const Group& g, const Caps& caps = {});

/// All subgroups, ordered by (order, member bit vector).
/// Throws OrderCapExceeded above caps.subgroup_lattice_cap.
std::vector<Subgroup> list_subgroups(const Group& g, const Caps& caps = {});

/// Sorts and deduplicates by (order, member bit vector).
void sort_subgroups(std::vector<Subgroup>& subs);

/// G / N realized on the cosets of N, with the projection G -> G/N.
struct Quotient {
  const Group* source = nullptr;
  Subgroup kernel;
  GroupPtr group;
  std::vector<Elem> projection;
};

/// Throws NotNormal when N is not normal in G.
Quotient quotient(const Group& g, const Subgroup& n, const Caps& caps = {});

/// Image of a subgroup of G in G/N.
Subgroup image(const Quotient& q, const Subgroup& h);

/// Full preimage in G of a subgroup of G/N.
Subgroup preimage(const Quotient& q, const Subgroup& k);

/// A subgroup re-enumerated as a group in its own right, from the permutations
/// of its generators in G.
struct Standalone {
  GroupPtr group;
  /// Element of the standalone group -> element of the parent.
  std::vector<Elem> to_parent;
};

Standalone standalone(const Group& g, const Subgroup& h, const Caps& caps = {});

/// Subgroup of the parent corresponding to a subgroup of a standalone group.
Subgroup to_parent(const Group& parent, const Standalone& s, const Subgroup& k);

}  // namespace pgroup
