#include "grc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "grc/denom_lab.hpp"

namespace grc {

namespace {

// Thrown for bad input discovered after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string group;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* sub, Common& c, bool needs_group = true) {
  auto* opt = sub->add_option("-g,--group", c.group, "builtin name or @file");
  if (needs_group) opt->required();
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("-o,--output", c.output, "write the result to a file");
}

GroupPtr group_of(const Common& c) {
  try {
    return resolve_group(c.group);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot resolve group: ") + e.what());
  }
}

std::vector<Index> words(const GroupPtr& g, const std::vector<std::string>& ws) {
  std::vector<Index> out;
  for (const auto& w : ws) {
    try {
      out.push_back(g->parse_element(w));
    } catch (const std::exception& e) {
      throw UsageError("bad element '" + w + "': " + e.what());
    }
  }
  return out;
}

QMatrix matrix_input(const GroupPtr& g, const std::string& element, const std::string& matrix) {
  if (element.empty() == matrix.empty()) throw UsageError("give exactly one of --element and --matrix");
  try {
    if (!element.empty()) return QMatrix::scalar(parse_element_literal(g, element), 1);
    return parse_matrix_literal(g, matrix);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad literal: ") + e.what());
  }
}

std::string class_legend(const Group& g) {
  std::ostringstream s;
  const auto& cl = g.classes();
  for (std::size_t i = 0; i < cl.count(); ++i) {
    s << "  C" << i + 1 << " = class of " << g.word(cl.reps[i]) << " (size " << cl.sizes[i] << ")\n";
  }
  return s.str();
}

std::string subgroup_words(const Subgroup& u) {
  std::string s = "{";
  for (Index x : u.members()) s += (s.size() > 1 ? ", " : "") + u.parent()->word(x);
  return s + "}";
}

nlohmann::json subgroup_json(const Subgroup& u) {
  nlohmann::json j = nlohmann::json::array();
  for (Index x : u.members()) j.push_back(u.parent()->word(x));
  return j;
}

nlohmann::json element_json(const KElement& x, long e) {
  nlohmann::json j = nlohmann::json::object();
  for (Index g = 0; g < x.size(); ++g) {
    if (!x[g].is_zero()) j[x.group()->word(g)] = x[g].to_string(e);
  }
  return j;
}

struct Result {
  std::string text;
  nlohmann::json json;
  int code = 0;
};

Result cmd_classes(const GroupPtr& g) {
  Result r;
  const auto& cl = g->classes();
  std::ostringstream s;
  r.json = nlohmann::json::array();
  for (std::size_t i = 0; i < cl.count(); ++i) {
    const Index x = cl.reps[i];
    s << "C" << i + 1 << " size " << cl.sizes[i] << " order " << g->element_order(x) << " rep " << g->word(x) << "\n";
    r.json.push_back({{"class", i + 1}, {"size", cl.sizes[i]}, {"order", g->element_order(x)}, {"rep", g->word(x)}});
  }
  r.text = s.str();
  return r;
}

Result cmd_chartab(const GroupPtr& g, const std::string& save, const std::string& load) {
  CharacterTable t = [&] {
    if (load.empty()) return dixon_table(g);
    try {
      return load_table(load, g);
    } catch (const OrthogonalityError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("cannot load table: ") + e.what());
    }
  }();
  if (!save.empty()) save_table(t, save);
  Result r;
  r.text = format_table(t);
  const long e = g->exponent();
  r.json = {{"group", g->name()}, {"order", g->order()}, {"exponent", e}, {"characters", nlohmann::json::array()}};
  for (const auto& chi : t.rows()) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : chi.values) vals.push_back(v.to_string(e));
    r.json["characters"].push_back({{"degree", chi.degree()}, {"values", vals}});
  }
  return r;
}

Result cmd_nr(const GroupPtr& g, const QMatrix& h) {
  const CentralElement z = reduced_norm(dixon_table(g), h);
  Result r;
  r.text = "nr = " + z.to_string() + "\n" + class_legend(*g);
  r.json = z.to_json();
  return r;
}

Result cmd_adjoint(const GroupPtr& g, const QMatrix& h, bool zero) {
  const CharacterTable t = dixon_table(g);
  const NormAndAdjoint na = norm_and_adjoint(t, h);
  Result r;
  const Integer den = denominator(na.adjoint);
  r.json = {{"adjoint", format_matrix(na.adjoint)}, {"denominator", den.get_str()}, {"norm", na.norm.to_json()}};
  std::ostringstream s;
  const QMatrix scalar = QMatrix::scalar(na.norm.to_element(), h.size());
  if (!(h * na.adjoint == scalar)) r.code = 1;
  if (zero) {
    const Subgroup d = commutator_subgroup(g);
    QElement want(g);
    for (Index x : d.members()) want[x] = Rational(1, static_cast<long>(d.order()));
    const bool ok = na.adjoint.at(0, 0) == want;
    if (!ok) r.code = 1;
    s << "0* = (1/" << d.order() << ")Tr_{G'}" << (ok ? "" : "  MISMATCH") << "\n";
    s << "G' = " << subgroup_words(d) << "\n";
    r.json["commutator"] = subgroup_json(d);
  }
  s << "H* = " << format_matrix(na.adjoint) << "\n";
  s << "denominator " << den.get_str() << "\n";
  s << "nr(H) = " << na.norm.to_string() << "\n";
  if (r.code) s << "H H* differs from nr(H) I\n";
  r.text = s.str();
  return r;
}

Result cmd_idempotents(const GroupPtr& g) {
  const CharacterTable t = dixon_table(g);
  const long e = g->exponent();
  Result r;
  std::ostringstream s;
  r.json = nlohmann::json::array();
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    const KElement x = idempotent(t, chi);
    s << "e_" << chi + 1 << " (degree " << t[chi].degree() << "):";
    for (Index y = 0; y < x.size(); ++y) {
      if (!x[y].is_zero()) s << " [" << x[y].to_string(e) << "]" << g->word(y);
    }
    s << "\n";
    r.json.push_back({{"chi", chi + 1}, {"degree", t[chi].degree()}, {"coefficients", element_json(x, e)}});
  }
  r.text = s.str();
  return r;
}

Result cmd_ed(const GroupPtr& g, long d) {
  const CentralElement z = E_d(dixon_table(g), d);
  const Subgroup dp = commutator_subgroup(g);
  QElement x = z.to_element();
  bool supported = true;
  for (Index y = 0; y < x.size(); ++y) supported = supported && (sgn(x[y]) == 0 || dp.contains(y));
  x *= Rational(static_cast<long>(dp.order()));
  const bool integral = is_integral(x);
  Result r;
  r.code = integral && supported ? 0 : 1;
  r.text = "E_" + std::to_string(d) + " = " + z.to_string() + "\n" + class_legend(*g) + "|G'| E_d integral: " +
           (integral ? "yes" : "no") + ", supported on G': " + (supported ? "yes" : "no") + "\n";
  r.json = {{"d", d}, {"E_d", z.to_json()}, {"integral", integral}, {"supported_on_commutator", supported}};
  return r;
}

Result cmd_probe(const ProbeConfig& cfg) {
  ProbeReport rep;
  try {
    rep = probe_denominator_ideal(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Result r;
  r.json = rep.to_json();
  r.code = rep.ok() ? 0 : 1;
  std::ostringstream s;
  s << "group " << rep.group << " order " << rep.order << " |G'| " << rep.commutator_order << " d_G " << rep.d_G.get_str()
    << "\n";
  s << "trials " << rep.records.size() << " (seed " << cfg.seed << ", bound " << cfg.bound << ")\n";
  s << "max nr denominator " << rep.max_nr_denominator.get_str() << "\n";
  s << "max adjoint denominator " << rep.max_adjoint_denominator.get_str() << "\n";
  s << "violations " << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) s << "  trial " << v.trial << ": " << v.what << "\n";
  if (rep.witness) s << "witness " << rep.witness->element << " denominator " << rep.witness->denominator.get_str() << "\n";
  r.text = s.str();
  return r;
}

Result cmd_witness(const GroupPtr& g, long bound) {
  const WitnessSearch w = nonintegral_witness_search(dixon_table(g), bound);
  Result r;
  r.json = w.to_json();
  std::ostringstream s;
  if (w.witness) {
    const CentralElement z = CentralElement::from_class_sums(dixon_table(g), w.witness->norm);
    s << "witness x = " << w.witness->element << "\nnr(x) = " << z.to_string() << "\ndenominator "
      << w.witness->denominator.get_str() << "\n"
      << class_legend(*g);
  } else {
    s << "no witness: " << w.note << "\n";
  }
  s << "candidates tried " << w.candidates << "\n";
  r.text = s.str();
  return r;
}

Result cmd_restrict(const GroupPtr& g, const std::vector<std::string>& gens, std::size_t trials, std::uint64_t seed,
                    std::size_t n, long bound) {
  const CharacterTable t = dixon_table(g);
  const Subgroup u = subgroup_generated(g, words(g, gens));
  const SubgroupTable ut = subgroup_table(u);
  Result r;
  std::ostringstream s;
  s << "U = " << subgroup_words(u) << " (order " << u.order() << ")\n";
  std::size_t agree = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    if (restriction_norm_check(t, probe_matrix(g, n, bound, seed, i), ut).agree) ++agree;
  }
  // Frobenius reciprocity on every pair
  bool recip = true;
  for (std::size_t psi = 0; psi < ut.table->size(); ++psi) {
    const ClassFunction ind = induce_character((*ut.table)[psi].values, ut);
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      recip = recip && inner_product(*g, t[chi].values, ind) ==
                           inner_product(*ut.fusion.embedded.group, restrict_character(t[chi].values, ut), (*ut.table)[psi].values);
    }
  }
  s << "restricted norms agree on " << agree << "/" << trials << " matrices\n";
  s << "Frobenius reciprocity " << (recip ? "holds" : "FAILS") << "\n";
  r.code = agree == trials && recip ? 0 : 1;
  r.text = s.str();
  r.json = {{"subgroup", subgroup_json(u)}, {"trials", trials}, {"agree", agree}, {"reciprocity", recip}};
  return r;
}

Result cmd_clifford(const GroupPtr& g, const std::vector<std::string>& gens) {
  const CharacterTable t = dixon_table(g);
  const Subgroup n = gens.empty() ? commutator_subgroup(g) : subgroup_generated(g, words(g, gens));
  if (!n.is_normal()) throw UsageError("N is not normal");
  CheckReport all;
  for (std::size_t chi = 0; chi < t.size(); ++chi) all.append(verify_idempotent_identities(t, n, chi));
  Result r;
  r.code = all.any_failed() ? 1 : 0;
  std::ostringstream s;
  s << "N = " << subgroup_words(n) << "\n" << all.to_text();
  s << all.count(CheckStatus::Pass) << " passed, " << all.count(CheckStatus::Fail) << " failed, " << all.count(CheckStatus::Skip)
    << " skipped\n";
  r.text = s.str();
  r.json = {{"normal", subgroup_json(n)}, {"checks", all.to_json()}};
  return r;
}

Result cmd_frobenius(const GroupPtr& g) {
  Result r;
  const auto f = frobenius_structure(g);
  if (!f) {
    r.text = "not a Frobenius group\n";
    r.json = {{"frobenius", false}};
    return r;
  }
  r.text = "kernel " + subgroup_words(f->kernel) + " (order " + std::to_string(f->kernel.order()) + ")\ncomplement " +
           subgroup_words(f->complement) + " (order " + std::to_string(f->complement.order()) + ")\n";
  r.json = {{"frobenius", true}, {"kernel", subgroup_json(f->kernel)}, {"complement", subgroup_json(f->complement)}};
  return r;
}

Result cmd_amodp(const std::string& path, const std::string& n_text, const std::vector<std::string>& ps) {
  DegreeList d;
  try {
    d = load_degrees(path);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot read degrees: ") + e.what());
  }
  Integer n;
  if (n.set_str(n_text, 10) != 0) throw UsageError("--n is not an integer");
  Result r;
  r.json = nlohmann::json::array();
  std::ostringstream s;
  for (const auto& pt : ps) {
    Integer p;
    if (p.set_str(pt, 10) != 0) throw UsageError("--p is not an integer");
    AModP a;
    try {
      a = a_n_mod_p(d, n, p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    s << "p " << pt << " residue " << a.residue.get_str();
    nlohmann::json j = {{"p", pt}, {"residue", a.residue.get_str()}};
    if (a.exact) {
      s << " A(n) " << a.exact->get_str();
      j["exact"] = a.exact->get_str();
    }
    s << "\n";
    r.json.push_back(j);
  }
  r.text = s.str();
  return r;
}

Result cmd_repro(const std::string& degrees) {
  const CheckReport rep = reproduce_examples(degrees.empty() ? std::nullopt : std::optional<std::filesystem::path>(degrees));
  Result r;
  r.code = rep.any_failed() ? 1 : 0;
  r.text = rep.to_text();
  r.json = rep.to_json();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"group ring reduced norms and denominators"};
  app.require_subcommand(1);

  Common c;
  std::string element, matrix, save, load, degrees, n_text = "-1";
  std::vector<std::string> gens, primes;
  bool zero = false;
  long d = 1, bound = 1;
  std::size_t trials = 20, size = 1;
  std::uint64_t seed = 1;
  ProbeConfig probe;

  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  add_common(classes, c);
  auto* chartab = app.add_subcommand("chartab", "character table");
  add_common(chartab, c);
  chartab->add_option("--save", save, "save the table");
  chartab->add_option("--load", load, "load and validate a table");
  auto* nr = app.add_subcommand("nr", "reduced norm");
  add_common(nr, c);
  nr->add_option("-e,--element", element, "element literal, e.g. a or 1/2:a, -1:x");
  nr->add_option("-m,--matrix", matrix, "matrix literal, rows split by ';', entries by '|'");
  auto* adjoint = app.add_subcommand("adjoint", "generalized adjoint");
  add_common(adjoint, c);
  adjoint->add_option("-e,--element", element, "element literal");
  adjoint->add_option("-m,--matrix", matrix, "matrix literal");
  adjoint->add_flag("--zero", zero, "the 1x1 zero matrix");
  auto* idem = app.add_subcommand("idempotents", "primitive central idempotents");
  add_common(idem, c);
  auto* ed = app.add_subcommand("ed", "sum of e_chi over the characters of degree d");
  add_common(ed, c);
  ed->add_option("d", d, "degree")->required()->check(CLI::PositiveNumber);
  auto* probe_cmd = app.add_subcommand("probe", "denominator probe");
  add_common(probe_cmd, c);
  probe_cmd->add_option("--trials", probe.trials, "random trials")->capture_default_str();
  probe_cmd->add_option("--seed", probe.seed, "master seed")->capture_default_str();
  probe_cmd->add_option("--bound", probe.bound, "coefficient bound")->capture_default_str();
  probe_cmd->add_option("--sizes", probe.sizes, "matrix sizes, cycled")->capture_default_str();
  probe_cmd->add_option("--normal", probe.normal, "generators of a normal subgroup containing G'");
  auto* witness = app.add_subcommand("witness", "search for x with non-integral nr(x)");
  add_common(witness, c);
  witness->add_option("--bound", bound, "coefficient bound for combinations")->capture_default_str();
  auto* restrict = app.add_subcommand("restrict-check", "restriction of reduced norms to U");
  add_common(restrict, c);
  restrict->add_option("gens", gens, "generators of U");
  restrict->add_option("--trials", trials, "random matrices")->capture_default_str();
  restrict->add_option("--seed", seed, "seed")->capture_default_str();
  restrict->add_option("--n", size, "matrix size")->capture_default_str()->check(CLI::PositiveNumber);
  auto* clifford = app.add_subcommand("clifford-check", "idempotent identities over N (default G')");
  add_common(clifford, c);
  clifford->add_option("gens", gens, "generators of N");
  auto* frob = app.add_subcommand("frobenius", "Frobenius kernel and complement");
  add_common(frob, c);
  auto* amodp = app.add_subcommand("amodp", "A(n) modulo primes from a degree file");
  add_common(amodp, c, false);
  amodp->add_option("--degrees", degrees, "lines 'degree multiplicity'")->required();
  amodp->add_option("--n", n_text, "n")->capture_default_str();
  amodp->add_option("--p", primes, "primes")->required();
  auto* repro = app.add_subcommand("repro-paper", "run the worked examples");
  add_common(repro, c, false);
  repro->add_option("--degrees", degrees, "Monster degree file");

  std::vector<const char*> argv{"grc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Result r;
  try {
    auto* sub = app.get_subcommands().front();
    if (sub == classes) {
      r = cmd_classes(group_of(c));
    } else if (sub == chartab) {
      r = cmd_chartab(group_of(c), save, load);
    } else if (sub == nr) {
      const auto g = group_of(c);
      r = cmd_nr(g, matrix_input(g, element, matrix));
    } else if (sub == adjoint) {
      const auto g = group_of(c);
      if (zero && !(element.empty() && matrix.empty())) throw UsageError("--zero takes no other input");
      r = cmd_adjoint(g, zero ? QMatrix(g, 1) : matrix_input(g, element, matrix), zero);
    } else if (sub == idem) {
      r = cmd_idempotents(group_of(c));
    } else if (sub == ed) {
      r = cmd_ed(group_of(c), d);
    } else if (sub == probe_cmd) {
      group_of(c);
      probe.group = c.group;
      r = cmd_probe(probe);
    } else if (sub == witness) {
      r = cmd_witness(group_of(c), bound);
    } else if (sub == restrict) {
      r = cmd_restrict(group_of(c), gens, trials, seed, size, 3);
    } else if (sub == clifford) {
      r = cmd_clifford(group_of(c), gens);
    } else if (sub == frob) {
      r = cmd_frobenius(group_of(c));
    } else if (sub == amodp) {
      r = cmd_amodp(degrees, n_text, primes);
    } else if (sub == repro) {
      r = cmd_repro(degrees);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string body = c.format == "json" ? r.json.dump(2) + "\n" : r.text;
  if (c.output.empty()) {
    out << body;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      err << "error: cannot write " << c.output << "\n";
      return 2;
    }
    f << body;
  }
  return r.code;
}

}  // namespace grc
