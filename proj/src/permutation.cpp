#include "pgroup/permutation.hpp"

#include <algorithm>

#include "pgroup/error.hpp"

namespace pgroup {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidPermutation("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InvalidPermutation("point " + std::to_string(x) + " outside degree " +
                                 std::to_string(degree));
      if (used[x]) throw InvalidPermutation("point " + std::to_string(x) + " repeated");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidPermutation("degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::embedded(std::size_t offset, std::size_t new_degree) const {
  if (offset + degree() > new_degree) throw InvalidPermutation("embedding does not fit");
  Permutation out = identity(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace pgroup
