#include "doctest.h"
#include "fixtures.hpp"
#include "pgroup/harness.hpp"
#include "pgroup/report.hpp"

using namespace pgroup;
using fixtures::corpus_group;

namespace {

CheckReport run_on(const std::string& name, CheckId id, Caps caps = {}) {
  GroupContext ctx(corpus_group(name), caps);
  return run_check(ctx, id);
}

}  // namespace

TEST_CASE("check identifiers round trip") {
  for (CheckId id : all_checks()) CHECK(parse_check(to_string(id)) == id);
  CHECK(!parse_check("nonsense").has_value());
  CHECK(statement_checks().size() + oracle_checks().size() == all_checks().size());
}

TEST_CASE("checks on the worked examples") {
  for (const char* name : {"heis27", "c9", "wr3"}) {
    CAPTURE(name);
    for (CheckId id : {CheckId::kConjecture, CheckId::kJInXIffJInX1, CheckId::kIndexNotP,
                       CheckId::kCentralizerOfX, CheckId::kNormalAbsorbed, CheckId::kXMonotone,
                       CheckId::kXStableOnInterval, CheckId::kNormalInterval,
                       CheckId::kAbelianQuotient, CheckId::kOracleX, CheckId::kOracleJ}) {
      CAPTURE(to_string(id));
      CHECK(run_on(name, id).status == Status::kPass);
    }
  }
  const auto heis = run_on("heis27", CheckId::kNormalAbsorbed);
  CHECK(heis.witness["normal_subgroups"] == 7);
  CHECK(run_on("heis27", CheckId::kIndexNotP).witness["index"] == 1);
  CHECK(run_on("c9", CheckId::kIndexNotP).witness["index"] == 1);
  const auto wr_mono = run_on("wr3", CheckId::kXMonotone);
  CHECK(wr_mono.witness["intermediate"] == 2);  // the base and G
  const auto heis_c = run_on("heis27", CheckId::kCentralizerOfX);
  CHECK(heis_c.witness["centralizer_order"] == 3);
  CHECK(run_on("wr3", CheckId::kAbelianQuotient).witness["quotient_order"] == 3);
}

TEST_CASE("maximal rank subgroups inside X1") {
  const auto heis = run_on("heis27", CheckId::kMaxRankInX1);
  CHECK(heis.status == Status::kPass);
  CHECK(heis.witness["tested"] == 4);
  CHECK(run_on("wr3", CheckId::kMaxRankInX1).witness["tested"] == 1);
  CHECK(run_on("ut4_3", CheckId::kIndexNotP).status == Status::kPass);
  CHECK(run_on("ut3_5", CheckId::kXStableOnInterval).status == Status::kPass);
}

TEST_CASE("cap-gated checks skip with a reason") {
  const auto wr5 = run_on("wr5", CheckId::kNormalAbsorbed);
  CHECK(wr5.status == Status::kSkipped);
  CHECK(wr5.witness.contains("reason"));
  CHECK(run_on("wr5", CheckId::kOracleX).status == Status::kSkipped);
  CHECK(run_on("ut4_3", CheckId::kOracleJ).status == Status::kSkipped);

  Caps tight;
  tight.interval_cap = 1;
  const auto r = run_on("wr3", CheckId::kXMonotone, tight);
  CHECK(r.status == Status::kSkipped);
  CHECK(r.witness["reason"].get<std::string>().find("cap") != std::string::npos);
}

TEST_CASE("run_corpus") {
  SUBCASE("empty spec list") {
    const auto run = run_corpus({}, all_checks());
    CHECK(run.reports.empty());
    CHECK(run.summary.groups == 0);
    CHECK(run.summary.pass + run.summary.fail + run.summary.skipped == 0);
  }
  SUBCASE("one over-cap group is skipped, the rest run") {
    Caps caps;
    caps.max_order = 100;
    const auto run = run_corpus({*find_in_corpus("c9"), *find_in_corpus("wr5")},
                                {CheckId::kConjecture}, caps);
    REQUIRE(run.reports.size() == 6);  // conjecture + two oracle checks per group
    for (std::size_t i = 0; i < 3; ++i) CHECK(run.reports[i].status == Status::kPass);
    for (std::size_t i = 3; i < 6; ++i) {
      CHECK(run.reports[i].group == "wr5");
      CHECK(run.reports[i].status == Status::kSkipped);
      CHECK(run.reports[i].witness.contains("reason"));
    }
    CHECK(run.summary.skipped == 3);
  }
  SUBCASE("order independent of worker count") {
    const auto specs = default_corpus(243);
    const auto a = run_corpus(specs, all_checks(), {}, {1, true});
    const auto b = run_corpus(specs, all_checks(), {}, {4, true});
    CHECK(format_json(a, false) == format_json(b, false));
    CHECK(a.summary.fail == 0);
  }
  SUBCASE("without oracle") {
    const auto run = run_corpus({*find_in_corpus("c3")}, {CheckId::kConjecture}, {}, {1, false});
    CHECK(run.reports.size() == 1);
  }
}

TEST_CASE("report formats") {
  const auto run = run_corpus({*find_in_corpus("c3")}, {CheckId::kIndexNotP}, {}, {1, false});
  const std::string json = format_json(run, false);
  CHECK(json ==
        "{\"group\":\"c3\",\"check\":\"index_jx_x_not_p\",\"status\":\"pass\",\"witness\":{\"index\":1},"
        "\"ms\":0.0}\n"
        "{\"summary\":{\"groups\":1,\"reports\":1,\"pass\":1,\"fail\":0,\"skipped\":0}}\n");
  const std::string csv = format_csv(run, false);
  CHECK(csv.rfind("group,check,status", 0) == 0);
  CHECK(csv.find("c3,index_jx_x_not_p,pass") != std::string::npos);
  CHECK(format_table(run, false).find("index_jx_x_not_p") != std::string::npos);
  CHECK(subgroup_json(whole_group(*corpus_group("c3")))["order"] == 3);
}
