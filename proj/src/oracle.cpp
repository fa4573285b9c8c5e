#include "pgroup/oracle.hpp"

#include <optional>
#include <string>

#include "pgroup/error.hpp"

namespace pgroup {

AdmissibleSet oracle_X(const Group& g, const Caps& caps) {
  if (g.order() > caps.oracle_cap)
    throw OrderCapExceeded("oracle limited to order " + std::to_string(caps.oracle_cap));
  Caps lattice_caps = caps;
  lattice_caps.normal_lattice_cap = std::max(caps.normal_lattice_cap, caps.oracle_cap);
  const std::vector<Subgroup> normals = list_normal_subgroups(g, lattice_caps);

  const unsigned depth = g.prime() - 1;
  std::vector<bool> admissible(normals.size(), false);
  std::vector<std::optional<Subgroup>> omega(normals.size());
  admissible[0] = true;  // the list starts with the trivial subgroup

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t n = 0; n < normals.size(); ++n) {
      if (admissible[n]) continue;
      for (std::size_t k = 0; k < normals.size(); ++k) {
        if (!admissible[k] || !normals[k].is_subgroup_of(normals[n])) continue;
        if (!omega[k]) omega[k] = omega1(g, centralizer(g, normals[k]));
        if (iterated_commutator(g, *omega[k], normals[n], depth).is_trivial()) {
          admissible[n] = true;
          changed = true;
          break;
        }
      }
    }
  }

  AdmissibleSet out;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (admissible[i]) out.members.push_back(normals[i]);

  std::vector<const Subgroup*> maximal;
  for (const auto& a : out.members) {
    bool is_max = true;
    for (const auto& b : out.members)
      if (b.order() > a.order() && a.is_subgroup_of(b)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(&a);
  }
  if (maximal.size() != 1)
    throw NonUniqueMaximal("admissible normal subgroups have " + std::to_string(maximal.size()) +
                               " maximal members",
                           maximal[0]->elements(), maximal[1]->elements());
  out.maximal = *maximal.front();
  return out;
}

Subgroup oracle_J(const Group& g, const Caps& caps) {
  const std::size_t cap = std::min(caps.oracle_cap, caps.subgroup_lattice_cap);
  if (g.order() > cap) throw OrderCapExceeded("oracle J limited to order " + std::to_string(cap));
  const std::vector<Subgroup> subs = list_subgroups(g, caps);

  unsigned best = 0;
  for (const auto& s : subs)
    if (auto r = elementary_abelian_rank(g, s)) best = std::max(best, *r);
  SubgroupBuilder b(g);
  for (const auto& s : subs)
    if (auto r = elementary_abelian_rank(g, s); r && *r == best) b.add_all(s.gens());
  return b.build();
}

}  // namespace pgroup
