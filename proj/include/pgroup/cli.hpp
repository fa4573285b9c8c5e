#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/error.hpp"
#include "pgroup/harness.hpp"
#include "pgroup/report.hpp"

namespace pgroup::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

enum class Command { kCorpusList, kCompute, kEval, kVerify, kOracleCheck };

struct Invocation {
  Command command = Command::kVerify;
  std::vector<std::string> groups;  // selectors: corpus names or file paths
  bool default_corpus = false;
  std::vector<CheckId> checks;
  std::vector<std::string> show;  // compute: subset of {J, X, X1}
  std::string expression;         // eval
  ReportFormat format = ReportFormat::kJson;
  std::optional<std::filesystem::path> out;
  bool timing = true;
  unsigned jobs = 1;
  Caps caps;
};

/// Bad flags, arguments or group selectors (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Parses argv (including the program name). Throws UsageError; `--help`
/// yields nullopt after printing help to `out`.
std::optional<Invocation> parse_invocation(const std::vector<std::string>& argv, std::ostream& out);

/// Resolves a selector against the corpus manifest first, then as a file path.
GroupSpec resolve_group(const std::string& selector);

int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse_invocation + execute with the exit-code contract; never throws.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace pgroup::cli
