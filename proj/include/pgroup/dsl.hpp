#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgroup/error.hpp"
#include "pgroup/harness.hpp"

namespace pgroup::dsl {

/// Expression tree over the subgroup operators.
///
///   expr := 'S' | name '(' expr {',' expr} ')' | '[' expr ',' expr [';' int] ']'
///
/// Names: Z, C, Omega1, J, X, X1, ncl, join, meet, derived (subgroup valued)
/// and Ord, Idx (integer valued).
struct Expr {
  enum class Kind { kVar, kCall, kComm, kOrd, kIdx };

  Kind kind = Kind::kVar;
  std::string name;  // kCall only
  std::vector<Expr> args;
  unsigned k = 1;  // kComm only
  std::size_t offset = 0;

  bool integer_valued() const { return kind == Kind::kOrd || kind == Kind::kIdx; }

  /// Structural equality; source offsets are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class ArityError : public Error {
 public:
  ArityError(std::size_t offset, const std::string& name, std::size_t want, std::size_t got);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// C(A, B) with A other than S.
class UnsupportedAmbient : public Error {
 public:
  using Error::Error;
};

/// Well-formed expression that has no value, e.g. Idx(A, B) with B not in A.
class EvalError : public Error {
 public:
  using Error::Error;
};

Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

struct Value {
  std::optional<Subgroup> subgroup;
  std::size_t integer = 0;

  bool is_integer() const { return !subgroup.has_value(); }
};

Value eval_expr(const Expr& e, GroupContext& ctx);

/// {"expr", "kind", "order", "index", "flags", "generators"} for subgroups,
/// {"expr", "kind", "value"} for integers.
Json value_json(const Expr& e, const Value& v);

}  // namespace pgroup::dsl
