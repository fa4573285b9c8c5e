#include <string>

#include "pgroup/error.hpp"
#include "pgroup/kernel.hpp"

namespace pgroup {

Quotient quotient(const Group& g, const Subgroup& n, const Caps& caps) {
  if (!is_normal(g, n)) throw NotNormal("quotient by a subgroup that is not normal");
  const std::size_t index = g.order() / n.order();
  if (index > caps.max_quotient_degree)
    throw OrderCapExceeded("quotient of index " + std::to_string(index) +
                           " exceeds max_quotient_degree " +
                           std::to_string(caps.max_quotient_degree));

  // Label the cosets xN in ascending order of their smallest element.
  const std::vector<Elem> kernel_elems = n.elements();
  std::vector<Elem> coset(g.order(), kNoElem);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != kNoElem) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : kernel_elems) coset[g.mul(x, k)] = c;
  }

  // Each generator s acts on cosets by Nx -> Nxs; with left-to-right
  // composition this is a homomorphism onto the coset action.
  std::vector<Permutation> images;
  images.reserve(g.generators().size());
  for (Elem s : g.generators()) {
    std::vector<Point> pts(index);
    for (std::size_t c = 0; c < index; ++c) pts[c] = coset[g.mul(reps[c], s)];
    images.emplace_back(std::move(pts));
  }

  Caps qcaps = caps;
  qcaps.max_order = std::max(caps.max_order, index);
  Quotient q;
  q.source = &g;
  q.kernel = n;
  q.group = enumerate_group(images, g.prime(), qcaps,
                            g.name().empty() ? std::string{} : g.name() + "/N", index);

  const Group& qg = *q.group;
  q.projection.assign(g.order(), kNoElem);
  q.projection[Group::identity()] = Group::identity();
  for (Elem x = 1; x < g.order(); ++x)
    q.projection[x] = qg.mul(q.projection[g.bfs_parent(x)], qg.generators()[g.bfs_generator(x)]);
  return q;
}

Subgroup image(const Quotient& q, const Subgroup& h) {
  SubgroupBuilder b(*q.group);
  for (Elem x : h.gens()) b.add(q.projection[x]);
  return b.build();
}

Subgroup preimage(const Quotient& q, const Subgroup& k) {
  const Group& g = *q.source;
  ElementSet m(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    if (k.contains(q.projection[x])) m.set(x);
  // Generators: those of the kernel plus one lift of each generator of K.
  SubgroupBuilder b(g, q.kernel);
  std::vector<Elem> lift(q.group->order(), kNoElem);
  for (Elem x = 0; x < g.order(); ++x)
    if (lift[q.projection[x]] == kNoElem) lift[q.projection[x]] = x;
  for (Elem y : k.gens()) b.add(lift[y]);
  return Subgroup(g, std::move(m), b.gens());
}

Standalone standalone(const Group& g, const Subgroup& h, const Caps& caps) {
  std::vector<Permutation> gens;
  for (Elem x : h.gens()) gens.push_back(g.permutation(x));
  Standalone s;
  s.group = enumerate_group(gens, g.prime(), caps, g.name().empty() ? "" : g.name() + ".sub",
                            g.degree());
  s.to_parent.resize(s.group->order());
  for (Elem x = 0; x < s.group->order(); ++x) s.to_parent[x] = *g.find(s.group->images(x));
  return s;
}

Subgroup to_parent(const Group& parent, const Standalone& s, const Subgroup& k) {
  ElementSet m(parent.order());
  k.members().for_each([&](Elem x) { m.set(s.to_parent[x]); });
  std::vector<Elem> gens;
  for (Elem x : k.gens()) gens.push_back(s.to_parent[x]);
  return Subgroup(parent, std::move(m), std::move(gens));
}

}  // namespace pgroup
