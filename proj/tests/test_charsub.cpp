#include "brute_force.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "pgroup/charsub.hpp"
#include "pgroup/error.hpp"
#include "pgroup/oracle.hpp"

using namespace pgroup;
using fixtures::corpus_group;

namespace {

/// Largest rank of an elementary abelian subgroup, from commuting sets of
/// order-p elements, grown greedily from every order-p element and every
/// commuting pair. Exact for the small groups used here.
unsigned brute_p_rank(const Group& g) {
  const auto all = brute::all_elements(g);
  std::vector<Permutation> ps;
  for (const auto& x : all)
    if (!x.is_identity() && brute::order_of(x) == g.prime()) ps.push_back(x);
  std::size_t best = 1;
  for (const auto& h : brute::two_generated_subgroups(all, g.degree())) {
    bool ea = true;
    for (const auto& x : h)
      if (!x.is_identity() && brute::order_of(x) != g.prime()) ea = false;
    if (!ea || brute::center(h).size() != h.size()) continue;
    // Extend by any commuting order-p element until stuck.
    brute::PermSet cur = h;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& y : ps) {
        if (cur.count(y)) continue;
        bool commutes = true;
        for (const auto& x : cur)
          if (x * y != y * x) commutes = false;
        if (!commutes) continue;
        cur.insert(y);
        cur = brute::closure(cur, g.degree());
        grew = true;
      }
    }
    best = std::max(best, cur.size());
  }
  return *log_p(best, g.prime());
}

}  // namespace

TEST_CASE("p-rank") {
  CHECK(p_rank(*corpus_group("c9")) == 1);
  CHECK(p_rank(*corpus_group("ea3_3")) == 3);
  CHECK(p_rank(*corpus_group("heis27")) == 2);
  CHECK(p_rank(*corpus_group("m27")) == 2);
  CHECK(p_rank(*corpus_group("wr3")) == 3);
  CHECK(p_rank(*corpus_group("ut4_3")) == 4);
  for (const char* name : {"c27", "heis27", "m27", "wr3", "heis27xc3", "c9xc3", "heis125"}) {
    CAPTURE(name);
    const auto g = corpus_group(name);
    CHECK(p_rank(*g) == brute_p_rank(*g));
  }
}

TEST_CASE("maximal-rank elementary abelian subgroups") {
  const auto heis = corpus_group("heis27");
  const auto fam = max_rank_elem_abelians(*heis);
  CHECK(fam.rank == 2);
  CHECK(fam.members.size() == 4);
  for (const auto& e : fam.members) {
    CHECK(e.order() == 9);
    CHECK(elementary_abelian_rank(*heis, e) == 2u);
  }
  CHECK(thompson_J(*heis).is_whole());

  const auto wr = corpus_group("wr3");
  const auto wfam = max_rank_elem_abelians(*wr);
  CHECK(wfam.members.size() == 1);
  CHECK(wfam.members[0].order() == 27);

  const auto m = corpus_group("m27");
  CHECK(thompson_J(*m) == omega1(*m, whole_group(*m)));
  CHECK(thompson_J(*m).order() == 9);

  const auto c9 = corpus_group("c9");
  CHECK(thompson_J(*c9).order() == 3);
}

TEST_CASE("search budget") {
  Caps tiny;
  tiny.search_budget = 3;
  CHECK_THROWS_AS(max_rank_elem_abelians(*corpus_group("ut4_3"), tiny), SearchBudgetExceeded);
}

TEST_CASE("oliver subgroup values") {
  const auto wr = corpus_group("wr3");
  const auto r = oliver_X(*wr);
  const Subgroup base = normal_closure(*wr, std::vector<Elem>{wr->generators()[0]});
  CHECK(r.subgroup == base);
  CHECK(verify_chain(*wr, r.certificate));
  CHECK(oliver_X(*corpus_group("heis27")).subgroup.is_whole());
  CHECK(oliver_X(*corpus_group("c9")).subgroup.is_whole());
  CHECK(oliver_X(*corpus_group("m27")).subgroup.is_whole());
  CHECK(oliver_X(*corpus_group("c3")).certificate.chain.front().is_trivial());
}

TEST_CASE("x1") {
  const auto wr = corpus_group("wr3");
  CHECK(x1(*wr).is_whole());
  const auto heis = corpus_group("heis27");
  CHECK(x1(*heis).is_whole());
  const auto ut = corpus_group("ut4_3");
  const Subgroup x = oliver_X(*ut).subgroup;
  CHECK(x.is_subgroup_of(x1(*ut, x)));
}

TEST_CASE("chain verification rejects bad certificates") {
  const auto wr = corpus_group("wr3");
  const Subgroup one = trivial_subgroup(*wr);
  const Subgroup s = whole_group(*wr);

  SUBCASE("the whole group in one step violates the commutator condition") {
    const ChainVerdict v = verify_chain(*wr, {{one, s}});
    CHECK(!v.ok);
    CHECK(v.index == 1);
    CHECK(v.clause == ChainClause::kCommutator);
  }
  SUBCASE("empty chain") {
    CHECK(verify_chain(*wr, {}).clause == ChainClause::kEmpty);
  }
  SUBCASE("chain not starting at 1") {
    CHECK(verify_chain(*wr, {{s}}).clause == ChainClause::kStart);
  }
  SUBCASE("non-normal entry") {
    const Subgroup top = fixtures::gen(*wr, {wr->generators()[1]});
    const ChainVerdict v = verify_chain(*wr, {{one, top}});
    CHECK(v.clause == ChainClause::kNormality);
    CHECK(v.index == 1);
  }
  SUBCASE("decreasing entry") {
    const Subgroup z = center(*wr);
    const Subgroup base = oliver_X(*wr).subgroup;
    const ChainVerdict v = verify_chain(*wr, {{one, base, z}});
    CHECK(v.clause == ChainClause::kContainment);
    CHECK(v.index == 2);
  }
}

TEST_CASE("chain step condition against brute force") {
  for (const char* name : {"heis27", "m27", "wr3", "c9xc3"}) {
    CAPTURE(name);
    const auto g = corpus_group(name);
    const auto all = brute::all_elements(*g);
    for (const auto& k : list_normal_subgroups(*g)) {
      brute::PermSet ks, a;
      k.members().for_each([&](Elem x) { ks.insert(g->permutation(x)); });
      for (const auto& x : brute::centralizer(all, ks))
        if (brute::order_of(x) <= g->prime()) a.insert(x);
      a = brute::closure(a, g->degree());
      for (const auto& q : list_normal_subgroups(*g)) {
        brute::PermSet qs, cur = a;
        q.members().for_each([&](Elem x) { qs.insert(g->permutation(x)); });
        for (unsigned i = 0; i + 1 < g->prime(); ++i) cur = brute::commutator(cur, qs, g->degree());
        CHECK(chain_step_holds(*g, k, q) == (cur.size() == 1));
      }
    }
  }
}
