#include "pgroup/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "pgroup/error.hpp"
#include "pgroup/oracle.hpp"

namespace pgroup {

namespace {

constexpr CheckId kAllChecks[] = {
    CheckId::kConjecture,       CheckId::kMaxRankInX1,       CheckId::kJInXIffJInX1,
    CheckId::kIndexNotP,        CheckId::kCentralizerOfX,    CheckId::kNormalAbsorbed,
    CheckId::kXMonotone,        CheckId::kXStableOnInterval, CheckId::kNormalInterval,
    CheckId::kAbelianQuotient,  CheckId::kOracleX,           CheckId::kOracleJ,
};

CheckReport make_report(const GroupContext& ctx, CheckId id) {
  CheckReport r;
  r.group = ctx.group().name();
  r.check = id;
  return r;
}

CheckReport skipped(const GroupContext& ctx, CheckId id, const std::string& reason) {
  CheckReport r = make_report(ctx, id);
  r.status = Status::kSkipped;
  r.witness["reason"] = reason;
  return r;
}

Status verdict(bool ok) { return ok ? Status::kPass : Status::kFail; }

}  // namespace

const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::kConjecture: return "conjecture";
    case CheckId::kMaxRankInX1: return "max_rank_in_x1";
    case CheckId::kJInXIffJInX1: return "j_in_x_iff_j_in_x1";
    case CheckId::kIndexNotP: return "index_jx_x_not_p";
    case CheckId::kCentralizerOfX: return "centralizer_of_x";
    case CheckId::kNormalAbsorbed: return "normal_absorbed";
    case CheckId::kXMonotone: return "x_monotone";
    case CheckId::kXStableOnInterval: return "x_stable_on_interval";
    case CheckId::kNormalInterval: return "normal_interval";
    case CheckId::kAbelianQuotient: return "abelian_quotient";
    case CheckId::kOracleX: return "oracle_x";
    case CheckId::kOracleJ: return "oracle_j";
  }
  return "unknown";
}

std::optional<CheckId> parse_check(std::string_view name) {
  for (CheckId id : kAllChecks)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

std::vector<CheckId> statement_checks() {
  return {std::begin(kAllChecks), std::end(kAllChecks) - 2};
}

std::vector<CheckId> oracle_checks() { return {CheckId::kOracleX, CheckId::kOracleJ}; }

std::vector<CheckId> all_checks() { return {std::begin(kAllChecks), std::end(kAllChecks)}; }

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "unknown";
}

Json subgroup_json(const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  Json gens = Json::array();
  for (Elem x : h.gens()) gens.push_back(h.parent().permutation(x).to_string());
  j["gens"] = std::move(gens);
  return j;
}

// ---------------------------------------------------------------------------

GroupContext::GroupContext(GroupPtr group, Caps caps) : group_(std::move(group)), caps_(caps) {}

const ElemAbelianFamily& GroupContext::family() {
  if (!family_) family_ = max_rank_elem_abelians(*group_, caps_);
  return *family_;
}

const Subgroup& GroupContext::thompson() {
  if (!thompson_) thompson_ = pgroup::thompson_J(*group_, family());
  return *thompson_;
}

const OliverResult& GroupContext::oliver() {
  if (!oliver_) oliver_ = oliver_X(*group_);
  return *oliver_;
}

const Quotient& GroupContext::quotient_by_oliver() {
  if (!quotient_) quotient_ = quotient(*group_, oliver_subgroup(), caps_);
  return *quotient_;
}

const Subgroup& GroupContext::x1() {
  if (!x1_) {
    const Quotient& q = quotient_by_oliver();
    x1_ = preimage(q, center(*q.group));
  }
  return *x1_;
}

const Subgroup& GroupContext::thompson_oliver_join() {
  if (!join_) join_ = join(*group_, thompson(), oliver_subgroup());
  return *join_;
}

std::vector<Subgroup> GroupContext::interval_above_oliver(const Subgroup& upper) {
  const Quotient& q = quotient_by_oliver();
  const Subgroup top = image(q, upper);
  if (top.order() > caps_.interval_cap)
    throw OrderCapExceeded("interval quotient of order " + std::to_string(top.order()) +
                           " exceeds interval_cap " + std::to_string(caps_.interval_cap));
  Caps lattice_caps = caps_;
  lattice_caps.subgroup_lattice_cap = caps_.interval_cap;
  const Standalone s = standalone(*q.group, top, caps_);
  std::vector<Subgroup> out;
  for (const auto& k : list_subgroups(*s.group, lattice_caps))
    out.push_back(preimage(q, to_parent(*q.group, s, k)));
  sort_subgroups(out);
  return out;
}

Subgroup GroupContext::oliver_of(const Subgroup& l) {
  if (l.is_whole()) return oliver_subgroup();
  const Standalone s = standalone(*group_, l, caps_);
  return to_parent(*group_, s, oliver_X(*s.group).subgroup);
}

// ---------------------------------------------------------------------------

CheckReport check_conjecture(GroupContext& ctx) {
  CheckReport r = make_report(ctx, CheckId::kConjecture);
  const Subgroup& j = ctx.thompson();
  const Subgroup& x = ctx.oliver_subgroup();
  const bool holds = j.is_subgroup_of(x);
  r.witness["j"] = subgroup_json(j);
  r.witness["x"] = subgroup_json(x);
  r.status = verdict(holds);
  if (!holds) {
    // A failure here would be a counterexample to an open conjecture; confirm
    // both subgroups with the brute-force oracles before reporting it.
    const Group& g = ctx.group();
    try {
      const Subgroup oj = oracle_J(g, ctx.caps());
      const Subgroup ox = oracle_X(g, ctx.caps()).maximal;
      r.witness["oracle_j_agrees"] = oj == j;
      r.witness["oracle_x_agrees"] = ox == x;
      r.witness["oracle_confirms"] = !oj.is_subgroup_of(ox);
    } catch (const CapExceeded& e) {
      r.witness["oracle_unavailable"] = e.what();
    }
  }
  return r;
}

CheckReport check_max_rank_in_x1(GroupContext& ctx) {
  const ElemAbelianFamily& fam = ctx.family();
  const Subgroup& x = ctx.oliver_subgroup();
  const Subgroup& x1 = ctx.x1();
  std::size_t tested = 0;
  for (const auto& e : fam.members) {
    if (!e.is_subgroup_of(x1)) continue;
    ++tested;
    if (!e.is_subgroup_of(x)) {
      CheckReport r = make_report(ctx, CheckId::kMaxRankInX1);
      r.status = Status::kFail;
      r.witness["rank"] = fam.rank;
      r.witness["e"] = subgroup_json(e);
      r.witness["x"] = subgroup_json(x);
      r.witness["x1"] = subgroup_json(x1);
      return r;
    }
  }
  if (tested == 0)
    return skipped(ctx, CheckId::kMaxRankInX1,
                   "hypothesis vacuous: no maximal-rank elementary abelian subgroup lies in X1");
  CheckReport r = make_report(ctx, CheckId::kMaxRankInX1);
  r.witness["rank"] = fam.rank;
  r.witness["family_size"] = fam.members.size();
  r.witness["tested"] = tested;
  return r;
}

CheckReport check_j_in_x_iff_j_in_x1(GroupContext& ctx) {
  CheckReport r = make_report(ctx, CheckId::kJInXIffJInX1);
  const Subgroup& j = ctx.thompson();
  const bool in_x = j.is_subgroup_of(ctx.oliver_subgroup());
  const bool in_x1 = j.is_subgroup_of(ctx.x1());
  r.witness["j_in_x"] = in_x;
  r.witness["j_in_x1"] = in_x1;
  r.status = verdict(in_x == in_x1);
  if (in_x != in_x1) {
    r.witness["j"] = subgroup_json(j);
    r.witness["x"] = subgroup_json(ctx.oliver_subgroup());
    r.witness["x1"] = subgroup_json(ctx.x1());
  }
  return r;
}

CheckReport check_index_not_p(GroupContext& ctx) {
  CheckReport r = make_report(ctx, CheckId::kIndexNotP);
  const Subgroup& jx = ctx.thompson_oliver_join();
  const std::size_t index = jx.order() / ctx.oliver_subgroup().order();
  r.witness["index"] = index;
  r.status = verdict(index != ctx.group().prime());
  if (r.status == Status::kFail) {
    r.witness["j"] = subgroup_json(ctx.thompson());
    r.witness["x"] = subgroup_json(ctx.oliver_subgroup());
  }
  return r;
}

CheckReport check_centralizer_of_x(GroupContext& ctx) {
  CheckReport r = make_report(ctx, CheckId::kCentralizerOfX);
  const Group& g = ctx.group();
  const Subgroup& x = ctx.oliver_subgroup();
  const Subgroup c = centralizer(g, x);
  const Subgroup z = center(g, x);
  r.witness["centralizer_order"] = c.order();
  r.witness["center_order"] = z.order();
  r.status = verdict(c == z);
  if (r.status == Status::kFail) {
    r.witness["x"] = subgroup_json(x);
    r.witness["centralizer"] = subgroup_json(c);
  }
  return r;
}

CheckReport check_normal_absorbed(GroupContext& ctx) {
  const Group& g = ctx.group();
  if (g.order() > ctx.caps().normal_lattice_cap)
    return skipped(ctx, CheckId::kNormalAbsorbed,
                   "order cap exceeded: normal lattice limited to order " +
                       std::to_string(ctx.caps().normal_lattice_cap));
  const Subgroup& x = ctx.oliver_subgroup();
  const Subgroup a = omega1(g, center(g, x));
  const auto normals = list_normal_subgroups(g, ctx.caps());
  std::size_t tested = 0;
  for (const auto& q : normals) {
    if (!iterated_commutator(g, a, q, g.prime() - 1).is_trivial()) continue;
    ++tested;
    if (!q.is_subgroup_of(x)) {
      CheckReport r = make_report(ctx, CheckId::kNormalAbsorbed);
      r.status = Status::kFail;
      r.witness["q"] = subgroup_json(q);
      r.witness["x"] = subgroup_json(x);
      return r;
    }
  }
  CheckReport r = make_report(ctx, CheckId::kNormalAbsorbed);
  r.witness["normal_subgroups"] = normals.size();
  r.witness["tested"] = tested;
  return r;
}

CheckReport check_x_monotone(GroupContext& ctx) {
  const Subgroup& x = ctx.oliver_subgroup();
  const auto ls = ctx.interval_above_oliver(whole_group(ctx.group()));
  for (const auto& l : ls) {
    const Subgroup xl = ctx.oliver_of(l);
    if (!x.is_subgroup_of(xl)) {
      CheckReport r = make_report(ctx, CheckId::kXMonotone);
      r.status = Status::kFail;
      r.witness["l"] = subgroup_json(l);
      r.witness["x"] = subgroup_json(x);
      r.witness["x_of_l"] = subgroup_json(xl);
      return r;
    }
  }
  CheckReport r = make_report(ctx, CheckId::kXMonotone);
  r.witness["intermediate"] = ls.size();
  return r;
}

CheckReport check_x_stable_on_interval(GroupContext& ctx) {
  CheckReport r = make_report(ctx, CheckId::kXStableOnInterval);
  const Subgroup& x = ctx.oliver_subgroup();
  const bool lhs = ctx.thompson().is_subgroup_of(x);

  // Evaluated over the whole interval even when lhs already holds.
  const auto ls = ctx.interval_above_oliver(ctx.thompson_oliver_join());
  bool rhs = true;
  for (const auto& l : ls) {
    const Subgroup xl = ctx.oliver_of(l);
    if (!(xl == x)) {
      rhs = false;
      r.witness["unstable_l"] = subgroup_json(l);
      r.witness["x_of_l"] = subgroup_json(xl);
      break;
    }
  }
  r.witness["j_in_x"] = lhs;
  r.witness["x_stable"] = rhs;
  r.witness["intermediate"] = ls.size();
  r.status = verdict(lhs == rhs);
  if (r.status == Status::kFail) {
    r.witness["j"] = subgroup_json(ctx.thompson());
    r.witness["x"] = subgroup_json(x);
  }
  return r;
}

CheckReport check_normal_interval(GroupContext& ctx) {
  const Group& g = ctx.group();
  const auto ls = ctx.interval_above_oliver(ctx.thompson_oliver_join());
  for (const auto& l : ls)
    if (!is_normal(g, l)) {
      CheckReport s = skipped(ctx, CheckId::kNormalInterval,
                              "hypothesis fails: a subgroup between X and JX is not normal");
      s.witness["non_normal_l"] = subgroup_json(l);
      return s;
    }
  CheckReport r = make_report(ctx, CheckId::kNormalInterval);
  r.witness["intermediate"] = ls.size();
  r.status = verdict(ctx.thompson().is_subgroup_of(ctx.oliver_subgroup()));
  if (r.status == Status::kFail) {
    r.witness["j"] = subgroup_json(ctx.thompson());
    r.witness["x"] = subgroup_json(ctx.oliver_subgroup());
  }
  return r;
}

CheckReport check_abelian_quotient(GroupContext& ctx) {
  const Quotient& q = ctx.quotient_by_oliver();
  if (!is_abelian(*q.group, whole_group(*q.group)))
    return skipped(ctx, CheckId::kAbelianQuotient, "hypothesis fails: G/X is not abelian");
  CheckReport r = make_report(ctx, CheckId::kAbelianQuotient);
  r.witness["quotient_order"] = q.group->order();
  r.status = verdict(ctx.thompson().is_subgroup_of(ctx.oliver_subgroup()));
  if (r.status == Status::kFail) {
    r.witness["j"] = subgroup_json(ctx.thompson());
    r.witness["x"] = subgroup_json(ctx.oliver_subgroup());
  }
  return r;
}

CheckReport check_oracle_x(GroupContext& ctx) {
  const Group& g = ctx.group();
  if (g.order() > ctx.caps().oracle_cap)
    return skipped(ctx, CheckId::kOracleX,
                   "order cap exceeded: oracle limited to order " +
                       std::to_string(ctx.caps().oracle_cap));
  CheckReport r = make_report(ctx, CheckId::kOracleX);
  const AdmissibleSet adm = oracle_X(g, ctx.caps());
  const Subgroup& x = ctx.oliver_subgroup();
  r.witness["order"] = x.order();
  r.witness["admissible"] = adm.members.size();
  r.witness["chain_length"] = ctx.oliver().certificate.chain.size();
  r.status = verdict(adm.maximal == x);
  if (r.status == Status::kFail) {
    r.witness["x"] = subgroup_json(x);
    r.witness["oracle_x"] = subgroup_json(adm.maximal);
  }
  return r;
}

CheckReport check_oracle_j(GroupContext& ctx) {
  const Group& g = ctx.group();
  const std::size_t cap = std::min(ctx.caps().oracle_cap, ctx.caps().subgroup_lattice_cap);
  if (g.order() > cap)
    return skipped(ctx, CheckId::kOracleJ,
                   "order cap exceeded: subgroup lattice limited to order " + std::to_string(cap));
  CheckReport r = make_report(ctx, CheckId::kOracleJ);
  const Subgroup oj = oracle_J(g, ctx.caps());
  const Subgroup& j = ctx.thompson();
  r.witness["order"] = j.order();
  r.witness["rank"] = ctx.family().rank;
  r.status = verdict(oj == j);
  if (r.status == Status::kFail) {
    r.witness["j"] = subgroup_json(j);
    r.witness["oracle_j"] = subgroup_json(oj);
  }
  return r;
}

CheckReport run_check(GroupContext& ctx, CheckId id) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    switch (id) {
      case CheckId::kConjecture: r = check_conjecture(ctx); break;
      case CheckId::kMaxRankInX1: r = check_max_rank_in_x1(ctx); break;
      case CheckId::kJInXIffJInX1: r = check_j_in_x_iff_j_in_x1(ctx); break;
      case CheckId::kIndexNotP: r = check_index_not_p(ctx); break;
      case CheckId::kCentralizerOfX: r = check_centralizer_of_x(ctx); break;
      case CheckId::kNormalAbsorbed: r = check_normal_absorbed(ctx); break;
      case CheckId::kXMonotone: r = check_x_monotone(ctx); break;
      case CheckId::kXStableOnInterval: r = check_x_stable_on_interval(ctx); break;
      case CheckId::kNormalInterval: r = check_normal_interval(ctx); break;
      case CheckId::kAbelianQuotient: r = check_abelian_quotient(ctx); break;
      case CheckId::kOracleX: r = check_oracle_x(ctx); break;
      case CheckId::kOracleJ: r = check_oracle_j(ctx); break;
    }
  } catch (const CapExceeded& e) {
    r = skipped(ctx, id, std::string("cap exceeded: ") + e.what());
  } catch (const NonUniqueMaximal& e) {
    r = make_report(ctx, id);
    r.status = Status::kFail;
    r.witness["error"] = e.what();
    r.witness["first"] = e.first();
    r.witness["second"] = e.second();
  } catch (const Error& e) {
    r = make_report(ctx, id);
    r.status = Status::kFail;
    r.witness["error"] = e.what();
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  r.ms = std::round(elapsed.count() * 1000.0) / 1000.0;
  return r;
}

Summary summarize(const std::vector<CheckReport>& reports, std::size_t groups) {
  Summary s;
  s.groups = groups;
  s.reports = reports.size();
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::kPass: ++s.pass; break;
      case Status::kFail: ++s.fail; break;
      case Status::kSkipped: ++s.skipped; break;
    }
  }
  return s;
}

RunResult run_corpus(const std::vector<GroupSpec>& specs, std::vector<CheckId> checks,
                     const Caps& caps, const RunOptions& options) {
  if (options.with_oracle)
    for (CheckId id : oracle_checks())
      if (std::find(checks.begin(), checks.end(), id) == checks.end()) checks.push_back(id);
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  std::vector<std::vector<CheckReport>> per_group(specs.size());
  auto run_one = [&](std::size_t i) {
    const GroupSpec& spec = specs[i];
    auto& out = per_group[i];
    GroupPtr g;
    try {
      g = build(spec, caps);
    } catch (const Error& e) {
      const bool cap = dynamic_cast<const CapExceeded*>(&e) != nullptr;
      for (CheckId id : checks) {
        CheckReport r;
        r.group = spec.name;
        r.check = id;
        r.status = cap ? Status::kSkipped : Status::kFail;
        r.witness[cap ? "reason" : "error"] = std::string(cap ? "cap exceeded: " : "build failed: ") + e.what();
        out.push_back(std::move(r));
      }
      return;
    }
    GroupContext ctx(std::move(g), caps);
    for (CheckId id : checks) out.push_back(run_check(ctx, id));
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(specs.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) run_one(i);
      });
    for (auto& w : workers) w.join();
  }

  RunResult result;
  for (auto& v : per_group)
    for (auto& r : v) result.reports.push_back(std::move(r));
  result.summary = summarize(result.reports, specs.size());
  return result;
}

}  // namespace pgroup
