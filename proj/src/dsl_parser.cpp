#include <cctype>
#include <charconv>

#include "pgroup/dsl.hpp"

namespace pgroup::dsl {

namespace {

struct NameInfo {
  std::string_view name;
  std::size_t arity;
  Expr::Kind kind;
};

constexpr NameInfo kNames[] = {
    {"Z", 1, Expr::Kind::kCall},      {"C", 2, Expr::Kind::kCall},    {"Omega1", 1, Expr::Kind::kCall},
    {"J", 1, Expr::Kind::kCall},      {"X", 1, Expr::Kind::kCall},    {"X1", 1, Expr::Kind::kCall},
    {"ncl", 1, Expr::Kind::kCall},    {"join", 2, Expr::Kind::kCall}, {"meet", 2, Expr::Kind::kCall},
    {"derived", 1, Expr::Kind::kCall}, {"Ord", 1, Expr::Kind::kOrd},  {"Idx", 2, Expr::Kind::kIdx},
};

constexpr std::size_t kMaxDepth = 200;

std::string join_list(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i];
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr(0);
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Expr subgroup_expr(std::size_t depth) {
    skip_ws();
    const std::size_t at = pos_;
    Expr e = expr(depth);
    if (e.integer_valued()) {
      pos_ = at;
      fail({"subgroup-valued expression"});
    }
    return e;
  }

  Expr expr(std::size_t depth) {
    if (depth > kMaxDepth) fail({"shallower nesting"});
    skip_ws();
    Expr e;
    e.offset = pos_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      e.kind = Expr::Kind::kComm;
      e.args.push_back(subgroup_expr(depth + 1));
      expect(',');
      e.args.push_back(subgroup_expr(depth + 1));
      if (peek(';')) {
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        unsigned k = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
        if (start == pos_ || ec != std::errc{} || k == 0) {
          pos_ = start;
          fail({"positive integer"});
        }
        e.k = k;
      }
      expect(']');
      return e;
    }
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail({"'S'", "operator name", "'['"});

    const std::string_view id = identifier();
    if (id == "S") return e;

    const NameInfo* info = nullptr;
    for (const auto& n : kNames)
      if (n.name == id) info = &n;
    if (info == nullptr) {
      pos_ = e.offset;
      std::vector<std::string> names{"S"};
      for (const auto& n : kNames) names.emplace_back(n.name);
      fail(std::move(names));
    }
    e.kind = info->kind;
    if (e.kind == Expr::Kind::kCall) e.name = std::string(id);
    expect('(');
    e.args.push_back(subgroup_expr(depth + 1));
    while (peek(',')) {
      ++pos_;
      e.args.push_back(subgroup_expr(depth + 1));
    }
    expect(')');
    if (e.args.size() != info->arity) throw ArityError(e.offset, std::string(id), info->arity, e.args.size());
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.k == b.k && a.args == b.args;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error("offset " + std::to_string(offset) + ": expected " + join_list(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

ArityError::ArityError(std::size_t offset, const std::string& name, std::size_t want, std::size_t got)
    : Error("offset " + std::to_string(offset) + ": " + name + " takes " + std::to_string(want) +
            " argument" + (want == 1 ? "" : "s") + ", got " + std::to_string(got)),
      offset_(offset) {}

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kVar: return "S";
    case Expr::Kind::kComm: {
      std::string s = "[" + to_string(e.args[0]) + "," + to_string(e.args[1]);
      if (e.k != 1) s += ";" + std::to_string(e.k);
      return s + "]";
    }
    case Expr::Kind::kCall:
    case Expr::Kind::kOrd:
    case Expr::Kind::kIdx: {
      std::string s = e.kind == Expr::Kind::kOrd ? "Ord" : e.kind == Expr::Kind::kIdx ? "Idx" : e.name;
      s += "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ",";
        s += to_string(e.args[i]);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace pgroup::dsl
