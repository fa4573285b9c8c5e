#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgroup/permutation.hpp"
#include "pgroup/types.hpp"

namespace pgroup {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite p-group given by permutation generators, with every element
/// enumerated and indexed. Immutable after construction.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// right-multiplying by the generators in the order given. Groups up to
/// kTableLimit elements carry a full multiplication table; larger ones
/// multiply by composing images and looking the result up in a hash index.
class Group {
 public:
  static constexpr std::size_t kTableLimit = 2048;

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  ~Group();

  const std::string& name() const { return name_; }
  unsigned prime() const { return p_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  static constexpr Elem identity() { return 0; }

  /// Generator indices, one per input generator, in input order.
  const std::vector<Elem>& generators() const { return gens_; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inv_[a]; }
  /// a^p
  Elem pow_p(Elem a) const { return pow_p_[a]; }
  Elem pow(Elem a, std::size_t k) const;
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv_[g], x), g); }
  /// a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  bool commute(Elem a, Elem b) const;

  std::size_t element_order(Elem a) const { return orders_[a]; }

  std::span<const Point> images(Elem a) const {
    return {points_.data() + static_cast<std::size_t>(a) * degree_, degree_};
  }
  Permutation permutation(Elem a) const;

  /// Index of the element with the given images, if it belongs to the group.
  std::optional<Elem> find(std::span<const Point> images) const;
  std::optional<Elem> find(const Permutation& p) const { return find(p.images()); }

  /// Breadth-first tree: element a == mul(bfs_parent(a), generators()[bfs_generator(a)]).
  Elem bfs_parent(Elem a) const { return parent_[a]; }
  std::size_t bfs_generator(Elem a) const { return parent_gen_[a]; }

 private:
  friend GroupPtr enumerate_group(std::span<const Permutation>, unsigned, const Caps&,
                                  std::string, std::size_t);
  struct Index;

  Group() = default;
  Elem lookup(std::span<const Point> images, std::size_t hash) const;
  void insert(Elem a, std::size_t hash);
  void finish();

  std::string name_;
  unsigned p_ = 3;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Point> points_;
  std::vector<Elem> gens_;
  std::vector<Elem> inv_;
  std::vector<Elem> pow_p_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<Elem> table_;
  std::vector<Elem> slots_;
};

/// Closure of `generators` under composition.
///
/// Throws EvenPrime for p = 2, NotPrime for other non-primes, InvalidPermutation
/// when generator degrees disagree, OrderCapExceeded once the closure grows past
/// caps.max_order, and NotAPGroup when the order is not a power of p. `degree`
/// is only consulted when `generators` is empty.
GroupPtr enumerate_group(std::span<const Permutation> generators, unsigned p,
                         const Caps& caps = {}, std::string name = {}, std::size_t degree = 0);

bool is_prime(unsigned n);

/// Exponent k with p^k == n, if n is a power of p.
std::optional<unsigned> log_p(std::size_t n, unsigned p);

}  // namespace pgroup
