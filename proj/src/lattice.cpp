#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "pgroup/error.hpp"
#include "pgroup/kernel.hpp"

namespace pgroup {

namespace {

// Every subgroup in the family is a join of atoms, so closing {1} ∪ atoms
// under "join with an atom" reaches the whole family.
std::vector<Subgroup> join_closure(const Group& g, const std::vector<Subgroup>& atoms) {
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::unordered_set<ElementSet, ElementSetHash> seen{out.front().members()};
  for (const auto& a : atoms)
    if (seen.insert(a.members()).second) out.push_back(a);

  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& a : atoms) {
      if (a.is_subgroup_of(out[i])) continue;
      SubgroupBuilder b(g, out[i]);
      b.add_all(a.gens());
      Subgroup j = b.build();
      if (seen.insert(j.members()).second) out.push_back(std::move(j));
    }
  }
  sort_subgroups(out);
  return out;
}

}  // namespace

void sort_subgroups(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
}

std::vector<Subgroup> list_normal_subgroups(const Group& g, const Caps& caps) {
  if (g.order() > caps.normal_lattice_cap)
    throw OrderCapExceeded("normal subgroup enumeration limited to order " +
                           std::to_string(caps.normal_lattice_cap));
  std::vector<Subgroup> atoms;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 1; x < g.order(); ++x) {
    const Elem seed[] = {x};
    Subgroup n = normal_closure(g, seed);
    if (seen.insert(n.members()).second) atoms.push_back(std::move(n));
  }
  return join_closure(g, atoms);
}

std::vector<Subgroup> list_subgroups(const Group& g, const Caps& caps) {
  if (g.order() > caps.subgroup_lattice_cap)
    throw OrderCapExceeded("subgroup enumeration limited to order " +
                           std::to_string(caps.subgroup_lattice_cap));
  std::vector<Subgroup> atoms;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 1; x < g.order(); ++x) {
    const Elem seed[] = {x};
    Subgroup c = generated_subgroup(g, seed);
    if (seen.insert(c.members()).second) atoms.push_back(std::move(c));
  }
  return join_closure(g, atoms);
}

}  // namespace pgroup
