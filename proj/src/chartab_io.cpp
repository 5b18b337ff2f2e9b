#include <fstream>
#include <sstream>

#include "grc/chartab.hpp"

namespace grc {

namespace {

std::string strip(std::string s) {
  s = s.substr(0, s.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<long long> parse_ints(const std::string& rest, std::size_t want, const std::string& what) {
  std::istringstream in(rest);
  std::vector<long long> out;
  long long v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof() || out.size() != want) throw ParseError("chartab: bad '" + what + "' line");
  return out;
}

}  // namespace

std::string format_table(const CharacterTable& t) {
  const Group& g = *t.group();
  const ConjClasses& cl = g.classes();
  const long e = g.exponent();
  std::ostringstream out;
  out << "chartab v1\n";
  out << "order " << g.order() << "\n";
  out << "exponent " << e << "\n";
  out << "classes " << cl.count() << "\n";
  out << "sizes";
  for (auto s : cl.sizes) out << ' ' << s;
  out << "\nreps";
  for (auto r : cl.reps) out << ' ' << r;
  out << "\n";
  for (const auto& chi : t.rows()) {
    out << "char " << chi.degree() << " :";
    for (std::size_t k = 0; k < chi.values.size(); ++k) {
      out << (k == 0 ? " " : " ; ") << chi.values[k].to_string(e);
    }
    out << "\n";
  }
  return out.str();
}

CharacterTable parse_table(std::string_view text, const GroupPtr& g) {
  const ConjClasses& cl = g->classes();
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    line = strip(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 6 || lines[0] != "chartab v1") throw ParseError("chartab: missing 'chartab v1' header");
  auto field = [&](std::size_t i, const std::string& key) {
    if (lines[i].rfind(key + " ", 0) != 0 && lines[i] != key) {
      throw ParseError("chartab: expected '" + key + "' on line " + std::to_string(i + 1));
    }
    return lines[i].substr(key.size());
  };
  const auto order = parse_ints(field(1, "order"), 1, "order")[0];
  const auto e = parse_ints(field(2, "exponent"), 1, "exponent")[0];
  const auto k = parse_ints(field(3, "classes"), 1, "classes")[0];
  if (order != static_cast<long long>(g->order()) || e != g->exponent() ||
      k != static_cast<long long>(cl.count())) {
    throw ParseError("chartab: header does not match group " + g->name());
  }
  const auto count = static_cast<std::size_t>(k);
  const auto sizes = parse_ints(field(4, "sizes"), count, "sizes");
  const auto reps = parse_ints(field(5, "reps"), count, "reps");

  // column -> class of the group
  std::vector<std::size_t> column_class(count);
  std::vector<bool> seen(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (reps[i] < 0 || reps[i] >= order) throw ParseError("chartab: representative out of range");
    const std::size_t c = cl.class_of[static_cast<std::size_t>(reps[i])];
    if (seen[c]) throw ParseError("chartab: two representatives of the same class");
    if (static_cast<long long>(cl.sizes[c]) != sizes[i]) throw ParseError("chartab: class size mismatch");
    seen[c] = true;
    column_class[i] = c;
  }

  std::vector<Character> rows;
  for (std::size_t i = 6; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.rfind("char ", 0) != 0) throw ParseError("chartab: expected 'char' on line " + std::to_string(i + 1));
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("chartab: missing ':' in character line");
    const auto degree = parse_ints(line.substr(5, colon - 5), 1, "char")[0];
    Character chi;
    chi.values.resize(count);
    std::string body = line.substr(colon + 1);
    std::size_t col = 0;
    std::size_t pos = 0;
    while (true) {
      const auto semi = body.find(';', pos);
      const std::string item = body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      if (col >= count) throw ParseError("chartab: too many values in character line");
      chi.values[column_class[col++]] = Cyclo::parse(item, static_cast<long>(e)).compact();
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    if (col != count) throw ParseError("chartab: too few values in character line");
    if (!(chi.values[0] == Cyclo(static_cast<long>(degree)))) {
      throw ParseError("chartab: degree does not match the identity value");
    }
    rows.push_back(std::move(chi));
  }
  sort_canonical(rows, static_cast<long>(e));
  return CharacterTable(g, std::move(rows));
}

void save_table(const CharacterTable& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_table(t);
}

CharacterTable load_table(const std::filesystem::path& path, const GroupPtr& g) {
  return parse_table(read_file(path), g);
}

DegreeList parse_degrees(std::string_view text) {
  std::istringstream in{std::string(text)};
  DegreeList out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string d;
    std::string m;
    std::string extra;
    if (!(ls >> d >> m) || (ls >> extra)) {
      throw ParseError("degree file line " + std::to_string(lineno) + ": expected 'degree multiplicity'");
    }
    DegreeEntry entry;
    if (entry.degree.set_str(d, 10) != 0 || entry.multiplicity.set_str(m, 10) != 0) {
      throw ParseError("degree file line " + std::to_string(lineno) + ": not an integer");
    }
    if (entry.degree <= 0 || entry.multiplicity <= 0) {
      throw ParseError("degree file line " + std::to_string(lineno) + ": values must be positive");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

DegreeList load_degrees(const std::filesystem::path& path) { return parse_degrees(read_file(path)); }

DegreeList degree_list(const CharacterTable& t) {
  DegreeList out;
  for (long d : t.degrees()) {
    if (!out.empty() && out.back().degree == d) {
      ++out.back().multiplicity;
    } else {
      out.push_back({Integer(d), Integer(1)});
    }
  }
  return out;
}

}  // namespace grc
