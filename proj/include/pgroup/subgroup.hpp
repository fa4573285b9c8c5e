#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgroup/element_set.hpp"
#include "pgroup/group.hpp"

namespace pgroup {

/// A subgroup of a parent Group: a member bit vector plus a generating set.
/// The parent is referenced, not owned; it must outlive the subgroup.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const Group& parent, ElementSet members, std::vector<Elem> gens)
      : parent_(&parent), members_(std::move(members)), gens_(std::move(gens)),
        order_(members_.count()) {}

  const Group& parent() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& gens() const { return gens_; }
  std::size_t order() const { return order_; }
  std::size_t index_in_parent() const { return parent_->order() / order_; }

  bool contains(Elem e) const { return members_.test(e); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order(); }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  std::vector<Elem> elements() const { return members_.to_vector(); }

  /// Equality of member sets; generators are witnesses and do not participate.
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  const Group* parent_ = nullptr;
  ElementSet members_;
  std::vector<Elem> gens_;
  std::size_t order_ = 0;
};

/// Incremental subgroup closure (Dimino's algorithm). Each accepted element
/// extends the current subgroup H to <H, x> by adjoining right cosets of H.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& g);
  SubgroupBuilder(const Group& g, const Subgroup& start);

  /// Adjoins x. Returns false (and records nothing) if x is already a member.
  bool add(Elem x);
  void add_all(std::span<const Elem> xs) {
    for (Elem x : xs) add(x);
  }

  bool contains(Elem x) const { return members_.test(x); }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Elem>& gens() const { return gens_; }
  const std::vector<Elem>& elements() const { return elems_; }

  Subgroup build() const { return Subgroup(*g_, members_, gens_); }

 private:
  const Group* g_;
  ElementSet members_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

}  // namespace pgroup
