#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pgroup/charsub.hpp"
#include "pgroup/corpus.hpp"

namespace pgroup {

using Json = nlohmann::ordered_json;

/// Named statements checked against a group. The order of the enumerators is
/// the report order within one group.
enum class CheckId {
  kConjecture,          // J(G) <= X(G)
  kMaxRankInX1,         // maximal-rank E <= X1(G) implies E <= X(G)
  kJInXIffJInX1,        // J <= X  <=>  J <= X1
  kIndexNotP,           // |J X : X| != p
  kCentralizerOfX,      // C_G(X) = Z(X)
  kNormalAbsorbed,      // normal Q with [Omega1(Z(X)), Q; p-1] = 1 lies in X
  kXMonotone,           // X(G) <= X(L) whenever X(G) <= L
  kXStableOnInterval,   // J <= X  <=>  X(L) = X(G) for X <= L <= JX
  kNormalInterval,      // every L in [X, JX] normal implies J <= X
  kAbelianQuotient,     // G/X abelian implies J <= X
  kOracleX,             // greedy X equals the lattice fixpoint
  kOracleJ,             // search J equals the full-lattice scan
};

const char* to_string(CheckId id);
std::optional<CheckId> parse_check(std::string_view name);

/// Every check except the oracle cross-checks.
std::vector<CheckId> statement_checks();
/// kOracleX and kOracleJ.
std::vector<CheckId> oracle_checks();
std::vector<CheckId> all_checks();

enum class Status { kPass, kFail, kSkipped };
const char* to_string(Status s);

struct CheckReport {
  std::string group;
  CheckId check = CheckId::kConjecture;
  Status status = Status::kPass;
  Json witness = Json::object();
  double ms = 0.0;
};

/// Per-group cache of J, X, X1 and friends, filled on first use.
class GroupContext {
 public:
  GroupContext(GroupPtr group, Caps caps);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Caps& caps() const { return caps_; }

  const ElemAbelianFamily& family();
  const Subgroup& thompson();
  const OliverResult& oliver();
  const Subgroup& oliver_subgroup() { return oliver().subgroup; }
  const Quotient& quotient_by_oliver();
  const Subgroup& x1();
  /// J(G) X(G)
  const Subgroup& thompson_oliver_join();

  /// Subgroups L with X(G) <= L <= upper, as preimages of subgroups of the
  /// image of `upper` in G/X(G). Throws OrderCapExceeded when that image is
  /// larger than caps.interval_cap.
  std::vector<Subgroup> interval_above_oliver(const Subgroup& upper);

  /// X(L) computed on L re-enumerated as a group, mapped back into G.
  Subgroup oliver_of(const Subgroup& l);

 private:
  GroupPtr group_;
  Caps caps_;
  std::optional<ElemAbelianFamily> family_;
  std::optional<Subgroup> thompson_;
  std::optional<OliverResult> oliver_;
  std::optional<Quotient> quotient_;
  std::optional<Subgroup> x1_;
  std::optional<Subgroup> join_;
};

CheckReport check_conjecture(GroupContext& ctx);
CheckReport check_max_rank_in_x1(GroupContext& ctx);
CheckReport check_j_in_x_iff_j_in_x1(GroupContext& ctx);
CheckReport check_index_not_p(GroupContext& ctx);
CheckReport check_centralizer_of_x(GroupContext& ctx);
CheckReport check_normal_absorbed(GroupContext& ctx);
CheckReport check_x_monotone(GroupContext& ctx);
CheckReport check_x_stable_on_interval(GroupContext& ctx);
CheckReport check_normal_interval(GroupContext& ctx);
CheckReport check_abelian_quotient(GroupContext& ctx);
CheckReport check_oracle_x(GroupContext& ctx);
CheckReport check_oracle_j(GroupContext& ctx);

/// Runs one check with timing. Cap errors become skipped reports; any other
/// library error becomes a fail report carrying the message.
CheckReport run_check(GroupContext& ctx, CheckId id);

struct Summary {
  std::size_t groups = 0;
  std::size_t reports = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct RunResult {
  std::vector<CheckReport> reports;
  Summary summary;
};

struct RunOptions {
  unsigned jobs = 1;
  /// Append the oracle cross-checks when they were not requested.
  bool with_oracle = true;
};

/// Builds each group and runs the requested checks. Report order is corpus
/// order, then check order, independent of `jobs`.
RunResult run_corpus(const std::vector<GroupSpec>& specs, std::vector<CheckId> checks,
                     const Caps& caps = {}, const RunOptions& options = {});

Summary summarize(const std::vector<CheckReport>& reports, std::size_t groups);

/// {"order": n, "gens": ["(0 1 2)", ...]}
Json subgroup_json(const Subgroup& h);

}  // namespace pgroup
