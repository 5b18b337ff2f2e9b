#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "grc/group.hpp"

namespace grc {

namespace {

std::string strip_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Perm parse_cycles(const std::string& line, std::size_t n, std::size_t lineno) {
  Perm p = perm_identity(n);
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw GroupError("line " + std::to_string(lineno) + ": " + why + " in '" + line + "'");
  };
  while (pos < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    if (line[pos] != '(') fail("expected '('");
    const auto close = line.find(')', pos);
    if (close == std::string::npos) fail("unterminated cycle");
    std::istringstream in(line.substr(pos + 1, close - pos - 1));
    std::vector<std::uint32_t> cycle;
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        fail("bad point '" + tok + "'");
      }
      const unsigned long v = std::stoul(tok);
      if (v < 1 || v > n) fail("point " + tok + " out of range");
      if (used[v - 1]) fail("point " + tok + " repeated");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return p;
}

}  // namespace

GroupPtr parse_group_text(std::string_view text, std::string name, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::string header;
  while (header.empty() && std::getline(in, line)) {
    ++lineno;
    header = strip_comment(line);
  }
  std::istringstream hs(header);
  std::string kind;
  long long n = 0;
  std::string extra;
  if (!(hs >> kind >> n) || (hs >> extra) || n < 1) {
    throw GroupError("expected 'perm <n>' or 'cayley <n>' header");
  }
  const auto degree = static_cast<std::size_t>(n);

  if (kind == "perm") {
    std::vector<Perm> gens;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string s = strip_comment(line);
      if (s.empty()) continue;
      gens.push_back(parse_cycles(s, degree, lineno));
      names.push_back("p" + std::to_string(gens.size()));
    }
    return Group::from_generators(std::move(name), std::move(gens), std::move(names), cap);
  }
  if (kind != "cayley") throw GroupError("unknown group file kind '" + kind + "'");
  if (degree > cap) throw GroupError("cayley table exceeds the size cap");

  std::vector<std::uint32_t> table;
  table.reserve(degree * degree);
  while (table.size() < degree * degree && std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream row(s);
    long long v = 0;
    std::size_t count = 0;
    while (row >> v) {
      if (v < 1 || v > n) throw GroupError("line " + std::to_string(lineno) + ": entry out of range");
      table.push_back(static_cast<std::uint32_t>(v - 1));
      ++count;
    }
    if (!row.eof() || count != degree) {
      throw GroupError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
    }
  }
  if (table.size() != degree * degree) throw GroupError("cayley table is truncated");
  auto at = [&](std::size_t a, std::size_t b) { return table[a * degree + b]; };

  std::size_t identity = degree;
  for (std::size_t e = 0; e < degree && identity == degree; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < degree && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity == degree) throw GroupError("cayley table has no identity element");

  std::vector<Perm> gens;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < degree; ++a) {
    if (a == identity) continue;
    Perm p(degree);
    for (std::size_t x = 0; x < degree; ++x) p[x] = at(a, x);
    gens.push_back(std::move(p));
    names.push_back("x" + std::to_string(a + 1));
  }
  GroupPtr g = Group::from_generators(std::move(name), std::move(gens), std::move(names), cap);
  if (g->order() != degree) throw GroupError("cayley table does not define a group (not associative)");
  return g;
}

GroupPtr load_group(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path.stem().string(), cap);
}

GroupPtr resolve_group(std::string_view spec) {
  if (spec.starts_with("@")) return load_group(std::filesystem::path(std::string(spec.substr(1))));
  return builtin_group(spec);
}

}  // namespace grc
