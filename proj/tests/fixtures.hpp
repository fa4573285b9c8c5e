#pragma once

#include <map>
#include <mutex>
#include <string>

#include "pgroup/corpus.hpp"
#include "pgroup/kernel.hpp"

namespace fixtures {

/// Corpus group by manifest name, built once per test run.
inline pgroup::GroupPtr corpus_group(const std::string& name) {
  static std::map<std::string, pgroup::GroupPtr> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto spec = pgroup::find_in_corpus(name);
  if (!spec) throw std::runtime_error("not in corpus: " + name);
  return cache[name] = pgroup::build(*spec);
}

inline pgroup::Subgroup gen(const pgroup::Group& g, std::initializer_list<pgroup::Elem> xs) {
  std::vector<pgroup::Elem> v(xs);
  return pgroup::generated_subgroup(g, v);
}

}  // namespace fixtures
