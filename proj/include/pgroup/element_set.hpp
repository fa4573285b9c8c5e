#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pgroup/types.hpp"

namespace pgroup {

/// Fixed-universe bit vector over element indices of a parent group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool test(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  /// Removes every element of `other`.
  ElementSet& subtract(const ElementSet& other);

  /// Smallest member, or kNoElem when empty.
  Elem first() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order on the bit string b0 b1 b2 ... with 0 < 1.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace pgroup
