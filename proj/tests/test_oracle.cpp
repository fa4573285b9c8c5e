#include "doctest.h"
#include "fixtures.hpp"
#include "pgroup/charsub.hpp"
#include "pgroup/error.hpp"
#include "pgroup/oracle.hpp"

using namespace pgroup;
using fixtures::corpus_group;

TEST_CASE("oracle X agrees with the greedy search") {
  for (const auto& spec : default_corpus(729)) {
    CAPTURE(spec.name);
    const auto g = build(spec);
    const auto adm = oracle_X(*g);
    CHECK(adm.maximal == oliver_X(*g).subgroup);
    for (const auto& n : adm.members) CHECK(n.is_subgroup_of(adm.maximal));
  }
}

TEST_CASE("oracle J agrees with the search") {
  for (const auto& spec : default_corpus(243)) {
    CAPTURE(spec.name);
    const auto g = build(spec);
    CHECK(oracle_J(*g) == thompson_J(*g));
  }
}

TEST_CASE("oracle caps") {
  Caps small;
  small.oracle_cap = 27;
  CHECK_THROWS_AS(oracle_X(*corpus_group("wr3"), small), OrderCapExceeded);
  CHECK_THROWS_AS(oracle_J(*corpus_group("ut4_3")), OrderCapExceeded);
}

TEST_CASE("admissible sets") {
  const auto wr = corpus_group("wr3");
  const auto adm = oracle_X(*wr);
  // Admissible: 1, the centre, ..., up to the base; G itself is not.
  bool has_g = false;
  for (const auto& n : adm.members) has_g |= n.is_whole();
  CHECK(!has_g);
  CHECK(adm.maximal.order() == 27);
  CHECK(adm.members.front().is_trivial());
}
