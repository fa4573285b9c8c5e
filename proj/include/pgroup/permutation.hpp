#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pgroup/types.hpp"

namespace pgroup {

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles. Throws InvalidPermutation on
  /// out-of-range or repeated points.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Same action on {0..degree-1} placed at points offset..offset+degree-1 of
  /// a larger domain; every other point is fixed.
  Permutation embedded(std::size_t offset, std::size_t new_degree) const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation such as "(0 1 2)(3 4 5)"; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace pgroup
