#include "pgroup/group_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "pgroup/error.hpp"

namespace pgroup {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InvalidPermutation("empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidPermutation("expected '(' at column " + std::to_string(i + 1));
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw InvalidPermutation("unbalanced parenthesis");
      if (text[i] == ')') {
        ++i;
        break;
      }
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      auto point = parse_number<Point>(text.substr(start, i - start));
      if (!point) throw InvalidPermutation("expected a point at column " + std::to_string(start + 1));
      cycle.push_back(*point);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(cycles, degree);
}

GroupDefinition parse_group_definition(std::string_view text) {
  GroupDefinition def;
  bool have_p = false, have_degree = false;
  std::vector<std::pair<std::size_t, std::string>> gen_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    if (key == "name") {
      if (value.empty()) throw ParseError(line_no, "name needs a value");
      def.name = std::string(value);
    } else if (key == "p") {
      auto p = parse_number<unsigned>(value);
      if (!p) throw ParseError(line_no, "p needs an integer value");
      def.p = *p;
      have_p = true;
    } else if (key == "degree") {
      auto d = parse_number<std::size_t>(value);
      if (!d) throw ParseError(line_no, "degree needs an integer value");
      def.degree = *d;
      have_degree = true;
    } else if (key == "gen") {
      gen_lines.emplace_back(line_no, std::string(value));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_p) throw ParseError(line_no, "missing 'p' line");
  if (!have_degree) throw ParseError(line_no, "missing 'degree' line");
  for (const auto& [ln, spec] : gen_lines) {
    try {
      def.generators.push_back(parse_cycles(spec, def.degree));
    } catch (const InvalidPermutation& e) {
      throw ParseError(ln, e.what());
    }
  }
  return def;
}

std::string format_group_definition(const Group& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "name " << g.name() << '\n';
  out << "p " << g.prime() << '\n';
  out << "degree " << g.degree() << '\n';
  for (Elem s : g.generators()) out << "gen " << g.permutation(s).to_string() << '\n';
  return out.str();
}

GroupPtr load_group_file(const std::filesystem::path& path, const Caps& caps) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  GroupDefinition def = parse_group_definition(buf.str());
  if (def.name.empty()) def.name = path.stem().string();
  return enumerate_group(def.generators, def.p, caps, def.name, def.degree);
}

void write_group_file(const Group& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_group_definition(g);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace pgroup
