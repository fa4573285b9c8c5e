#include "pgroup/subgroup.hpp"

namespace pgroup {

SubgroupBuilder::SubgroupBuilder(const Group& g) : g_(&g), members_(g.order()) {
  members_.set(Group::identity());
  elems_.push_back(Group::identity());
}

SubgroupBuilder::SubgroupBuilder(const Group& g, const Subgroup& start)
    : g_(&g), members_(start.members()), elems_(start.elements()), gens_(start.gens()) {}

bool SubgroupBuilder::add(Elem x) {
  if (members_.test(x)) return false;
  const std::size_t old_size = elems_.size();
  gens_.push_back(x);

  // elems_[0, old_size) is the old subgroup H. New elements arrive one right
  // coset H*t at a time; `reps` lists the coset representatives.
  std::vector<Elem> reps{Group::identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Elem s : gens_) {
      const Elem t = g_->mul(reps[r], s);
      if (members_.test(t)) continue;
      for (std::size_t i = 0; i < old_size; ++i) {
        const Elem y = g_->mul(elems_[i], t);
        members_.set(y);
        elems_.push_back(y);
      }
      reps.push_back(t);
    }
  }
  return true;
}

}  // namespace pgroup
