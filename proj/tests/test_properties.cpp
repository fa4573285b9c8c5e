#include "doctest.h"
#include "pgroup/corpus.hpp"
#include "properties.hpp"

using namespace pgroup;

TEST_CASE("kernel properties on every corpus group") {
  unsigned seed = 1;
  for (const auto& spec : default_corpus()) {
    CAPTURE(spec.name);
    const auto g = build(spec);
    const auto f = properties::kernel_properties(*g, seed++);
    for (const auto& m : f.messages()) FAIL_CHECK(m);
    CHECK(f.checked() > 100);
  }
}

TEST_CASE("kernel properties on the trivial group") {
  const auto g = enumerate_group(std::vector<Permutation>{}, 3, {}, "one", 3);
  CHECK(properties::kernel_properties(*g, 7).messages().empty());
}

TEST_CASE("parser fuzz") {
  const auto r = properties::fuzz_parser(10000, 10000, 99);
  for (const auto& c : r.crashes) FAIL_CHECK(c);
  CHECK(r.inputs == 20000);
  CHECK(r.parsed > 0);
  CHECK(r.rejected > 0);
}
