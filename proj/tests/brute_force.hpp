#pragma once

// Test-only reference computations on raw permutation sets. Nothing here
// touches Group, Subgroup or the kernel operators, so results computed with
// these helpers are independent of the library code paths they check.

#include <set>
#include <vector>

#include "pgroup/element_set.hpp"
#include "pgroup/group.hpp"
#include "pgroup/permutation.hpp"

namespace brute {

using pgroup::Permutation;
using PermSet = std::set<Permutation>;

inline PermSet closure(const std::vector<Permutation>& gens, std::size_t degree) {
  PermSet out{Permutation::identity(degree)};
  std::vector<Permutation> todo{Permutation::identity(degree)};
  while (!todo.empty()) {
    Permutation x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (out.insert(y).second) todo.push_back(y);
    }
  }
  return out;
}

inline PermSet closure(const PermSet& seed, std::size_t degree) {
  return closure(std::vector<Permutation>(seed.begin(), seed.end()), degree);
}

inline Permutation comm(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

inline PermSet all_elements(const pgroup::Group& g) {
  PermSet out;
  for (pgroup::Elem x = 0; x < g.order(); ++x) out.insert(g.permutation(x));
  return out;
}

inline PermSet center(const PermSet& g) {
  PermSet out;
  for (const auto& x : g) {
    bool central = true;
    for (const auto& y : g)
      if (x * y != y * x) {
        central = false;
        break;
      }
    if (central) out.insert(x);
  }
  return out;
}

inline PermSet centralizer(const PermSet& g, const PermSet& h) {
  PermSet out;
  for (const auto& x : g) {
    bool ok = true;
    for (const auto& y : h)
      if (x * y != y * x) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

/// [A, B] from every pair, closed.
inline PermSet commutator(const PermSet& a, const PermSet& b, std::size_t degree) {
  PermSet c;
  for (const auto& x : a)
    for (const auto& y : b) c.insert(comm(x, y));
  return closure(c, degree);
}

inline bool is_normal(const PermSet& g, const PermSet& h) {
  for (const auto& x : g)
    for (const auto& y : h)
      if (!h.count(x.inverse() * y * x)) return false;
  return true;
}

inline std::size_t order_of(const Permutation& x) {
  std::size_t k = 1;
  for (Permutation y = x; !y.is_identity(); y = y * x) ++k;
  return k;
}

/// Every subgroup generated by at most two elements.
inline std::set<PermSet> two_generated_subgroups(const PermSet& g, std::size_t degree) {
  std::set<PermSet> out;
  for (const auto& a : g)
    for (const auto& b : g) out.insert(closure(std::vector<Permutation>{a, b}, degree));
  return out;
}

inline pgroup::ElementSet to_set(const pgroup::Group& g, const PermSet& s) {
  pgroup::ElementSet out(g.order());
  for (const auto& x : s) out.set(*g.find(x));
  return out;
}

}  // namespace brute
