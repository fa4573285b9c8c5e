#include "pgroup/element_set.hpp"

namespace pgroup {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::subtract(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Elem ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return kNoElem;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // The set holding a 0 at the first differing position sorts first.
    return (a.words_[i] & low) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace pgroup
