#include "pgroup/kernel.hpp"

#include <algorithm>

namespace pgroup {

namespace {

// Closes `b` under conjugation by `ambient`. Conjugating each generator of
// the growing subgroup by each ambient generator suffices in a finite group.
void close_under_conjugation(const Group& g, SubgroupBuilder& b, std::span<const Elem> ambient) {
  for (std::size_t i = 0; i < b.gens().size(); ++i) {
    const Elem x = b.gens()[i];
    for (Elem t : ambient) {
      const Elem c = g.conj(x, t);
      if (!b.contains(c)) b.add(c);
    }
  }
}

}  // namespace

Subgroup trivial_subgroup(const Group& g) {
  ElementSet m(g.order());
  m.set(Group::identity());
  return Subgroup(g, std::move(m), {});
}

Subgroup whole_group(const Group& g) {
  SubgroupBuilder b(g);
  b.add_all(g.generators());
  return b.build();
}

Subgroup generated_subgroup(const Group& g, std::span<const Elem> seed) {
  SubgroupBuilder b(g);
  b.add_all(seed);
  std::vector<Elem> gens;
  for (Elem x : seed)
    if (std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  return Subgroup(g, b.build().members(), std::move(gens));
}

Subgroup subgroup_from_members(const Group& g, const ElementSet& members) {
  SubgroupBuilder b(g);
  members.for_each([&](Elem x) {
    if (!b.contains(x)) b.add(x);
  });
  return b.build();
}

std::size_t element_order(const Group& g, Elem x) { return g.element_order(x); }

Subgroup centralizer(const Group& g, const Subgroup& h) {
  ElementSet m(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : h.gens())
      if (!g.commute(x, y)) {
        ok = false;
        break;
      }
    if (ok) m.set(x);
  }
  return subgroup_from_members(g, m);
}

Subgroup center(const Group& g) { return centralizer(g, whole_group(g)); }

Subgroup center(const Group& g, const Subgroup& h) {
  ElementSet m(g.order());
  h.members().for_each([&](Elem x) {
    for (Elem y : h.gens())
      if (!g.commute(x, y)) return;
    m.set(x);
  });
  return subgroup_from_members(g, m);
}

bool is_abelian(const Group& g, const Subgroup& h) {
  const auto& gens = h.gens();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) return false;
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (Elem s : g.generators())
    for (Elem x : h.gens())
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

Subgroup normal_closure(const Group& g, std::span<const Elem> seed) {
  SubgroupBuilder b(g);
  b.add_all(seed);
  close_under_conjugation(g, b, g.generators());
  return b.build();
}

Subgroup normal_closure(const Group& g, const Subgroup& h) {
  SubgroupBuilder b(g, h);
  close_under_conjugation(g, b, g.generators());
  return b.build();
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  const Subgroup& big = a.order() >= b.order() ? a : b;
  const Subgroup& small = a.order() >= b.order() ? b : a;
  if (small.is_subgroup_of(big)) return big;
  SubgroupBuilder builder(g, big);
  builder.add_all(small.gens());
  return builder.build();
}

Subgroup meet(const Group& g, const Subgroup& a, const Subgroup& b) {
  ElementSet m = a.members();
  m &= b.members();
  return subgroup_from_members(g, m);
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  // [A, B] is the normal closure in <A, B> of the commutators of generators.
  SubgroupBuilder builder(g);
  for (Elem x : a.gens())
    for (Elem y : b.gens()) builder.add(g.comm(x, y));
  if (builder.order() == 1) return builder.build();
  std::vector<Elem> ambient = a.gens();
  ambient.insert(ambient.end(), b.gens().begin(), b.gens().end());
  close_under_conjugation(g, builder, ambient);
  return builder.build();
}

Subgroup iterated_commutator(const Group& g, const Subgroup& a, const Subgroup& b, unsigned k) {
  Subgroup cur = commutator_subgroup(g, a, b);
  for (unsigned i = 1; i < k && !cur.is_trivial(); ++i) cur = commutator_subgroup(g, cur, b);
  return cur;
}

Subgroup omega1(const Group& g, const Subgroup& h) {
  SubgroupBuilder b(g);
  h.members().for_each([&](Elem x) {
    if (g.pow_p(x) == Group::identity() && !b.contains(x)) b.add(x);
  });
  return b.build();
}

std::optional<unsigned> elementary_abelian_rank(const Group& g, const Subgroup& h) {
  if (!is_abelian(g, h)) return std::nullopt;
  for (Elem x : h.gens())
    if (g.pow_p(x) != Group::identity()) return std::nullopt;
  return log_p(h.order(), g.prime());
}

}  // namespace pgroup
