#include <sstream>

#include "grc/cli.hpp"
#include "grc/denom_lab.hpp"

namespace grc {

namespace {

struct Expected {
  const char* rep;
  Rational coeff;
};

QMatrix single(const GroupPtr& g, const char* word) { return QMatrix::scalar(QElement::basis(g, g->parse_element(word)), 1); }

// Compares class-sum coordinates at the classes of the given representatives;
// every other class must have coordinate zero.
bool matches(const CentralElement& z, const std::vector<Expected>& want, std::string& detail) {
  const GroupPtr& g = z.group();
  std::vector<Rational> expect(g->classes().count());
  for (const auto& w : want) expect[g->classes().class_of[g->parse_element(w.rep)]] = w.coeff;
  for (auto& q : expect) q.canonicalize();
  detail = z.to_string();
  return z.class_sums() == expect;
}

CheckLine row(bool ok, std::string id, std::string detail) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(id), std::move(detail)};
}

CheckLine dihedral16_norm() {
  const auto g = builtin_group("D8");
  const CentralElement z = reduced_norm(dixon_table(g), single(g, "a"));
  std::string d;
  const bool ok = matches(z,
                          {{"1", Rational(3, 4)}, {"a^4", Rational(-1, 4)}, {"a^2", Rational(-1, 4)}, {"a", Rational(1, 4)},
                           {"a^3", Rational(1, 4)}},
                          d);
  return row(ok, "dihedral16-norm-of-a", "nr([a]) = " + d);
}

CheckLine sl23_norm() {
  const auto g = builtin_group("SL2_3");
  const CharacterTable t = dixon_table(g);
  const CentralElement z = reduced_norm(t, single(g, "gamma"));
  std::string d;
  bool ok = matches(z,
                    {{"1", Rational(3, 8)},
                     {"alpha^2", Rational(3, 8)},
                     {"gamma", Rational(1, 8)},
                     {"gamma^2", Rational(-2, 8)},
                     {"alpha^2*gamma^2", Rational(2, 8)},
                     {"alpha^2*gamma", Rational(1, 8)},
                     {"alpha", Rational(-1, 8)}},
                    d);
  const CentralElement one = CentralElement::one(t);
  ok = ok && reduced_norm(t, single(g, "alpha")) == one && reduced_norm(t, single(g, "beta")) == one;
  return row(ok, "sl23-norm-of-gamma", "nr([gamma]) = " + d + ", nr([alpha]) = nr([beta]) = 1");
}

// coefficient of nr([x]) at x is 1/|G'| for x outside the kernel
CheckLine outside_kernel(const std::string& name) {
  const auto g = builtin_group(name);
  const CharacterTable t = dixon_table(g);
  const Subgroup d = commutator_subgroup(g);
  const auto f = frobenius_structure(g);
  if (!f) return row(false, "frobenius-coefficient " + name, "not detected as a Frobenius group");
  const Rational want(1, static_cast<long>(d.order()));
  bool ok = f->kernel == d;
  std::size_t checked = 0;
  for (std::size_t c = 0; c < g->classes().count(); ++c) {
    const Index x = g->classes().reps[c];
    if (f->kernel.contains(x)) continue;
    const CentralElement z = reduced_norm(t, QMatrix::scalar(QElement::basis(g, x), 1));
    ok = ok && z.class_sums()[c] == want;
    ++checked;
  }
  std::ostringstream s;
  s << "coefficient " << want.get_str() << " at all " << checked << " classes outside the kernel of order " << f->kernel.order();
  return row(ok, "frobenius-coefficient " + name, s.str());
}

CheckLine zero_adjoint(const std::string& name) {
  const auto g = builtin_group(name);
  const QMatrix adj = generalized_adjoint(dixon_table(g), QMatrix(g, 1));
  const Subgroup d = commutator_subgroup(g);
  QElement want(g);
  for (Index x : d.members()) want[x] = Rational(1, static_cast<long>(d.order()));
  const bool ok = adj.at(0, 0) == want && denominator(adj) == static_cast<unsigned long>(d.order());
  return row(ok, "zero-adjoint " + name, "0* = (1/" + std::to_string(d.order()) + ")Tr_{G'}");
}

CheckLine probe_row(const std::string& name, std::size_t trials, const Integer& nr_den, const Integer& adj_den) {
  ProbeConfig c;
  c.group = name;
  c.trials = trials;
  const ProbeReport r = probe_denominator_ideal(c);
  const bool ok = r.ok() && r.max_nr_denominator == nr_den && r.max_adjoint_denominator == adj_den;
  return row(ok, "probe " + name,
             std::to_string(r.records.size()) + " trials, " + std::to_string(r.violations.size()) +
                 " violations, max denominators nr " + r.max_nr_denominator.get_str() + " adjoint " +
                 r.max_adjoint_denominator.get_str());
}

CheckLine hpg_row(const std::string& name, long p, const Integer& zero_part, const Integer& max_part) {
  ProbeConfig c;
  c.group = name;
  c.trials = 30;
  const HpgCheck h = hpg_criterion_check(dixon_table(builtin_group(name)), p, c);
  const bool ok = h.consistent && h.zero_trial_p_part == zero_part && h.max_adjoint_p_part == max_part;
  return row(ok, "p-part " + name + " p=" + std::to_string(p),
             "p-part of 0* denominator " + h.zero_trial_p_part.get_str() + ", max over probe " + h.max_adjoint_p_part.get_str());
}

CheckLine witness_row(const std::string& name, const Integer& den) {
  const WitnessSearch w = nonintegral_witness_search(dixon_table(builtin_group(name)));
  const bool ok = w.witness && w.witness->denominator == den;
  return row(ok, "witness " + name, w.witness ? "x = " + w.witness->element + ", denominator " + w.witness->denominator.get_str() : w.note);
}

CheckLine monster_row(const std::optional<std::filesystem::path>& degrees) {
  if (!degrees) return {CheckStatus::Skip, "monster-residues", "no degree file given"};
  const DegreeList d = load_degrees(*degrees);
  std::ostringstream s;
  bool ok = true;
  for (const auto& m : monster_residue_table()) {
    const AModP a = a_n_mod_p(d, -1, m.p);
    s << (s.tellp() > 0 ? " " : "") << m.p << ":" << a.residue.get_str();
    ok = ok && a.residue == m.residue;
  }
  return row(ok, "monster-residues", s.str());
}

}  // namespace

const std::vector<MonsterRow>& monster_residue_table() {
  static const std::vector<MonsterRow> rows = {{17, 1},  {19, 1},  {23, 9},  {29, 15}, {31, 10},
                                               {41, 5},  {47, 17}, {59, 31}, {71, 51}};
  return rows;
}

CheckReport reproduce_examples(const std::optional<std::filesystem::path>& monster_degrees) {
  CheckReport r;
  auto push = [&](CheckLine l) { r.lines.push_back(std::move(l)); };
  push(dihedral16_norm());
  push(sl23_norm());
  for (const char* name : {"S3", "Aff_4", "Aff_5", "Aff_7", "Aff_8", "Aff_9"}) push(outside_kernel(name));
  for (const char* name : {"S3", "D8", "SL2_3"}) push(zero_adjoint(name));
  push(probe_row("D8", 200, 4, 4));
  push(probe_row("SL2_3", 200, 8, 8));
  push(hpg_row("D8", 2, 4, 4));
  push(hpg_row("D8", 3, 1, 1));
  push(hpg_row("S3", 3, 3, 3));
  push(witness_row("S3", 3));
  push(witness_row("Aff_5", 5));
  push(monster_row(monster_degrees));
  return r;
}

}  // namespace grc
