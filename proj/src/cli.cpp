#include "pgroup/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgroup/dsl.hpp"
#include "pgroup/group_file.hpp"

namespace pgroup::cli {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_caps(CLI::App* app, Caps& caps) {
  app->add_option("--max-order", caps.max_order, "Largest group order to enumerate")
      ->capture_default_str();
  app->add_option("--search-budget", caps.search_budget,
                  "Node budget of the elementary abelian search")
      ->capture_default_str();
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "table") return ReportFormat::kTable;
  throw UsageError("unknown format '" + s + "' (expected json, csv or table)");
}

GroupPtr load(const std::string& selector, const Caps& caps) { return build(resolve_group(selector), caps); }

Json subgroup_summary(const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  j["index"] = h.index_in_parent();
  Json gens = Json::array();
  for (Elem x : h.gens()) gens.push_back(h.parent().permutation(x).to_string());
  j["generators"] = std::move(gens);
  return j;
}

int run_compute(const Invocation& inv, std::ostream& out) {
  GroupContext ctx(load(inv.groups.front(), inv.caps), inv.caps);
  const Group& g = ctx.group();
  Json j;
  j["group"] = g.name();
  j["p"] = g.prime();
  j["order"] = g.order();
  j["degree"] = g.degree();
  for (const auto& what : inv.show) {
    if (what == "J") {
      j["p_rank"] = ctx.family().rank;
      j["J"] = subgroup_summary(ctx.thompson());
    } else if (what == "X") {
      j["X"] = subgroup_summary(ctx.oliver_subgroup());
    } else {
      j["X1"] = subgroup_summary(ctx.x1());
    }
  }
  Json chain = Json::array();
  for (const auto& q : ctx.oliver().certificate.chain) chain.push_back(subgroup_summary(q));
  j["certificate"] = std::move(chain);
  out << j.dump() << '\n';
  return kExitPass;
}

int run_eval(const Invocation& inv, std::ostream& out) {
  const dsl::Expr e = dsl::parse_expr(inv.expression);
  GroupContext ctx(load(inv.groups.front(), inv.caps), inv.caps);
  out << dsl::value_json(e, dsl::eval_expr(e, ctx)).dump() << '\n';
  return kExitPass;
}

int emit_run(const Invocation& inv, const RunResult& run, std::ostream& out) {
  const std::string text = format_report(run, inv.format, inv.timing);
  if (inv.out) {
    std::ofstream f(*inv.out, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + inv.out->string());
    f << text;
  } else {
    out << text;
  }
  return run.summary.fail > 0 ? kExitCheckFailed : kExitPass;
}

int run_verify(const Invocation& inv, std::ostream& out) {
  std::vector<GroupSpec> specs;
  if (inv.default_corpus || inv.groups.empty()) specs = default_corpus(inv.caps.max_order);
  for (const auto& sel : inv.groups) specs.push_back(resolve_group(sel));
  RunOptions opts;
  opts.jobs = inv.jobs;
  return emit_run(inv, run_corpus(specs, inv.checks, inv.caps, opts), out);
}

int run_oracle_check(const Invocation& inv, std::ostream& out) {
  std::vector<GroupSpec> specs;
  for (const auto& sel : inv.groups) specs.push_back(resolve_group(sel));
  // A group that cannot be built is an input problem here, not a skipped row.
  for (const auto& s : specs) build(s, inv.caps);
  return emit_run(inv, run_corpus(specs, oracle_checks(), inv.caps, {}), out);
}

}  // namespace

GroupSpec resolve_group(const std::string& selector) {
  if (auto spec = find_in_corpus(selector)) return *spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(selector, ec)) {
    GroupSpec spec;
    spec.family = Family::kFromFile;
    spec.p = 0;
    spec.source = selector;
    spec.name = std::filesystem::path(selector).stem().string();
    return spec;
  }
  throw UsageError("unknown group '" + selector + "': not in the corpus manifest and not a file");
}

std::optional<Invocation> parse_invocation(const std::vector<std::string>& argv, std::ostream& out) {
  Invocation inv;
  CLI::App app{"Thompson and Oliver subgroups of finite p-groups", "pgroup"};
  app.require_subcommand(1, 1);

  std::string action;
  auto* corpus = app.add_subcommand("corpus", "Corpus manifest operations");
  corpus->add_option("action", action, "list")->required()->check(CLI::IsMember({"list"}));
  corpus->add_option("--max-order", inv.caps.max_order, "Omit groups above this order");

  std::string group, show = "J,X,X1", checks = "all", format = "json", out_path;
  bool no_timing = false;

  auto* compute = app.add_subcommand("compute", "Compute J, X and X1 of a group");
  compute->add_option("-g,--group", group, "Corpus name or group file")->required();
  compute->add_option("--show", show, "Comma-separated subset of J,X,X1")->capture_default_str();
  add_caps(compute, inv.caps);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression against a group");
  eval->add_option("-g,--group", group, "Corpus name or group file")->required();
  eval->add_option("expr", inv.expression, "Expression, e.g. \"Ord(J(S))\"")->required();
  add_caps(eval, inv.caps);

  std::string corpus_name;
  std::vector<std::string> groups;
  auto* verify = app.add_subcommand("verify", "Run the statement checks");
  verify->add_option("--corpus", corpus_name, "Corpus to run (default)")->check(CLI::IsMember({"default"}));
  verify->add_option("-g,--group", groups, "Corpus name or group file (repeatable)");
  verify->add_option("--checks", checks, "all, or comma-separated check ids")->capture_default_str();
  verify->add_option("--format", format, "json, csv or table")->capture_default_str();
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_flag("--no-timing", no_timing, "Report 0 ms for every check");
  verify->add_option("-j,--jobs", inv.jobs, "Groups processed concurrently")->capture_default_str();
  add_caps(verify, inv.caps);

  auto* oracle = app.add_subcommand("oracle-check", "Compare J and X against the brute-force oracles");
  oracle->add_option("-g,--group", group, "Corpus name or group file")->required();
  oracle->add_option("--format", format, "json, csv or table")->capture_default_str();
  oracle->add_flag("--no-timing", no_timing, "Report 0 ms for every check");
  add_caps(oracle, inv.caps);

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*corpus) {
    inv.command = Command::kCorpusList;
  } else if (*compute) {
    inv.command = Command::kCompute;
    inv.groups = {group};
    inv.show = split_list(show);
    for (const auto& s : inv.show)
      if (s != "J" && s != "X" && s != "X1") throw UsageError("--show accepts J, X, X1; got '" + s + "'");
  } else if (*eval) {
    inv.command = Command::kEval;
    inv.groups = {group};
  } else if (*verify) {
    inv.command = Command::kVerify;
    inv.groups = groups;
    inv.default_corpus = !corpus_name.empty();
  } else {
    inv.command = Command::kOracleCheck;
    inv.groups = {group};
  }

  if (inv.command == Command::kVerify) {
    if (checks == "all") {
      inv.checks = statement_checks();
    } else {
      for (const auto& c : split_list(checks)) {
        auto id = parse_check(c);
        if (!id) throw UsageError("unknown check '" + c + "'");
        inv.checks.push_back(*id);
      }
    }
  }
  if (inv.command == Command::kVerify || inv.command == Command::kOracleCheck) {
    inv.format = parse_format(format);
    inv.timing = !no_timing;
    if (!out_path.empty()) inv.out = out_path;
  }
  return inv;
}

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    switch (inv.command) {
      case Command::kCorpusList:
        for (const auto& s : default_corpus(inv.caps.max_order))
          out << s.name << '\t' << to_string(s.family) << '\t' << s.p << '\t' << *expected_order(s) << '\n';
        return kExitPass;
      case Command::kCompute: return run_compute(inv, out);
      case Command::kEval: return run_eval(inv, out);
      case Command::kVerify: return run_verify(inv, out);
      case Command::kOracleCheck: return run_oracle_check(inv, out);
    }
  } catch (const CapExceeded& e) {
    err << "pgroup: resource cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "pgroup: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    const auto inv = parse_invocation(argv, out);
    if (!inv) return kExitPass;
    return execute(*inv, out, err);
  } catch (const UsageError& e) {
    err << "pgroup: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "pgroup: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pgroup::cli
