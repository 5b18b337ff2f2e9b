#include "grc/clifford.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grc {

namespace {

bool contains_all(const Subgroup& big, const Subgroup& small) {
  return std::all_of(small.members().begin(), small.members().end(), [&](Index x) { return big.contains(x); });
}

/// Representatives of the left cosets of a in b (a inside b), smallest first.
std::vector<Index> coset_reps_in(const Subgroup& a, const Subgroup& b) {
  const Group& g = *b.parent();
  std::vector<bool> done(g.order(), false);
  std::vector<Index> reps;
  for (Index x : b.members()) {
    if (done[x]) continue;
    reps.push_back(x);
    for (Index m : a.members()) done[g.mult(x, m)] = true;
  }
  return reps;
}

long as_long(const Cyclo& x) {
  const Rational r = x.to_rational();
  if (r.get_den() != 1) throw std::logic_error("expected an integer, got " + r.get_str());
  return r.get_num().get_si();
}

ElementFunction scaled(ElementFunction f, long k) {
  for (auto& v : f) v *= Rational(k);
  return f;
}

ElementFunction sum_of(const std::vector<ElementFunction>& fs, std::size_t order) {
  ElementFunction r(order);
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < order; ++i) r[i] += f[i];
  }
  for (auto& v : r) v = v.compact();
  return r;
}

bool same(const ElementFunction& a, const ElementFunction& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] - b[i]).is_zero()) return false;
  }
  return true;
}

KElement sum_elements(const std::vector<KElement>& xs, const GroupPtr& g) {
  KElement r(g);
  for (const auto& x : xs) r += x;
  return r;
}

bool supported_on(const KElement& x, const Subgroup& u) {
  for (Index i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !u.contains(i)) return false;
  }
  return true;
}

bool equal_elements(const KElement& a, const KElement& b) { return (a - b).is_zero(); }

/// Linear characters of k (given by its table) that are trivial on n.
std::vector<ElementFunction> linear_over(const SubgroupTable& k, const Subgroup& n) {
  std::vector<ElementFunction> out;
  for (std::size_t r = 0; r < k.table->size(); ++r) {
    if (!(*k.table)[r].is_linear()) continue;
    ElementFunction f = k.lift(r);
    if (std::all_of(n.members().begin(), n.members().end(), [&](Index x) { return f[x] == Cyclo(1); })) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::string describe(const CharacterTable& g, const Subgroup& n, std::size_t chi) {
  std::ostringstream os;
  os << g.group()->name() << " |N|=" << n.order() << " chi=" << chi << " (degree " << g[chi].degree() << ")";
  return os.str();
}

}  // namespace

ClassFusion class_fusion(const Subgroup& u) {
  ClassFusion f{embed(u), {}};
  const ConjClasses& sub = f.embedded.group->classes();
  const ConjClasses& top = u.parent()->classes();
  for (Index rep : sub.reps) f.map.push_back(top.class_of[f.embedded.to_parent[rep]]);
  return f;
}

ElementFunction SubgroupTable::lift(std::size_t psi) const { return lift((*table)[psi].values); }

ElementFunction SubgroupTable::lift(const ClassFunction& f) const {
  const auto& emb = fusion.embedded;
  ElementFunction r(emb.from_parent.size());
  const auto& cls = emb.group->classes().class_of;
  for (Index s = 0; s < emb.to_parent.size(); ++s) r[emb.to_parent[s]] = f[cls[s]];
  return r;
}

ClassFunction SubgroupTable::to_classes(const ElementFunction& f) const {
  const auto& emb = fusion.embedded;
  ClassFunction r;
  for (Index rep : emb.group->classes().reps) r.push_back(f[emb.to_parent[rep]]);
  return r;
}

std::optional<std::size_t> SubgroupTable::find(const ElementFunction& f) const { return table->find(to_classes(f)); }

SubgroupTable subgroup_table(const Subgroup& u) {
  ClassFusion f = class_fusion(u);
  auto t = std::make_shared<const CharacterTable>(dixon_table(f.embedded.group));
  return {std::move(f), std::move(t)};
}

ClassFunction restrict_character(const ClassFunction& chi, const SubgroupTable& u) {
  ClassFunction r;
  for (Index c : u.fusion.map) r.push_back(chi[c]);
  return r;
}

ClassFunction induce_character(const ClassFunction& psi, const SubgroupTable& u) {
  const Group& g = *u.subgroup().parent();
  const ConjClasses& top = g.classes();
  const ConjClasses& sub = u.fusion.embedded.group->classes();
  ClassFunction r(top.count());
  for (std::size_t j = 0; j < sub.count(); ++j) r[u.fusion.map[j]].add_scaled(psi[j], Rational(static_cast<long>(sub.sizes[j])));
  for (std::size_t i = 0; i < top.count(); ++i) {
    Rational scale(static_cast<long>(g.order()), static_cast<long>(u.order() * top.sizes[i]));
    scale.canonicalize();
    r[i] = (r[i] * scale).compact();
  }
  return r;
}

Cyclo inner_product(const Group& g, const ClassFunction& a, const ClassFunction& b) {
  const ConjClasses& cl = g.classes();
  Cyclo s;
  for (std::size_t i = 0; i < cl.count(); ++i) s.add_scaled(a[i] * b[i].conj(), Rational(static_cast<long>(cl.sizes[i])));
  Rational inv(1, static_cast<long>(g.order()));
  return (s * inv).compact();
}

ElementFunction element_values(const CharacterTable& t, std::size_t chi) {
  ElementFunction r;
  for (Index x = 0; x < t.group()->order(); ++x) r.push_back(t.value(chi, x));
  return r;
}

ElementFunction restrict_to(const ElementFunction& f, const Subgroup& u) {
  ElementFunction r(f.size());
  for (Index x : u.members()) r[x] = f[x];
  return r;
}

ElementFunction induce_between(const ElementFunction& f, const Subgroup& u, const Subgroup& k) {
  const Group& g = *k.parent();
  ElementFunction r(f.size());
  const Rational scale(1, static_cast<long>(u.order()));
  for (Index x : k.members()) {
    Cyclo s;
    for (Index h : k.members()) {
      const Index y = g.conj(x, h);
      if (u.contains(y)) s += f[y];
    }
    r[x] = (s * scale).compact();
  }
  return r;
}

Cyclo inner_product_on(const Subgroup& k, const ElementFunction& a, const ElementFunction& b) {
  Cyclo s;
  for (Index x : k.members()) s += a[x] * b[x].conj();
  return (s * Rational(1, static_cast<long>(k.order()))).compact();
}

ElementFunction conjugate_by(const Group& g, const ElementFunction& f, Index x) {
  ElementFunction r(f.size());
  for (Index y = 0; y < g.order(); ++y) r[y] = f[g.conj(y, x)];
  return r;
}

ElementFunction pointwise_product(const ElementFunction& a, const ElementFunction& b) {
  ElementFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) r[i] = (a[i] * b[i]).compact();
  }
  return r;
}

KElement idempotent_on(const Subgroup& k, const ElementFunction& f) {
  const GroupPtr& g = k.parent();
  KElement e(g);
  Rational scale(f[0].to_rational() / Rational(static_cast<long>(k.order())));
  scale.canonicalize();
  for (Index x : k.members()) e[x] = (f[g->inv(x)] * scale).compact();
  return e;
}

Subgroup support_closure(const Subgroup& n, const ElementFunction& f) {
  std::vector<Index> gens(n.members().begin(), n.members().end());
  for (Index x = 0; x < f.size(); ++x) {
    if (!f[x].is_zero() && !n.contains(x)) gens.push_back(x);
  }
  return subgroup_generated(n.parent(), gens);
}

Subgroup U_psi(const Subgroup& n, const ElementFunction& psi) { return support_closure(n, psi); }

InductionData stabilizer_and_orbit(const CharacterTable& g, std::shared_ptr<const SubgroupTable> n, std::size_t eta) {
  const Subgroup& nsub = n->subgroup();
  if (!nsub.is_normal()) throw std::invalid_argument("stabilizer_and_orbit: subgroup is not normal");
  const GroupPtr& grp = g.group();
  const ElementFunction eta_f = n->lift(eta);

  std::vector<Index> stab;
  for (Index x = 0; x < grp->order(); ++x) {
    if (conjugate_by(*grp, eta_f, x) == eta_f) stab.push_back(x);
  }
  InductionData d;
  d.normal = n;
  d.eta = eta;
  d.stabilizer = Subgroup(grp, stab);
  d.transversal = left_coset_reps(d.stabilizer);
  for (Index x : d.transversal) {
    const auto row = n->find(conjugate_by(*grp, eta_f, x));
    if (!row) throw std::logic_error("conjugate character not found in Irr(N)");
    d.orbit.push_back(*row);
  }
  for (std::size_t chi = 0; chi < g.size(); ++chi) {
    const long m = as_long(inner_product_on(nsub, element_values(g, chi), eta_f));
    if (m > 0) {
      d.chis.push_back(chi);
      d.chi_multiplicity.push_back(m);
    }
  }
  d.stab = std::make_shared<const SubgroupTable>(subgroup_table(d.stabilizer));
  for (std::size_t psi = 0; psi < d.stab->table->size(); ++psi) {
    const long m = as_long(inner_product_on(nsub, d.stab->lift(psi), eta_f));
    if (m > 0) {
      d.psis.push_back(psi);
      d.psi_multiplicity.push_back(m);
    }
  }
  return d;
}

KElement e_of_eta(const InductionData& d) {
  const Subgroup& n = d.normal->subgroup();
  KElement r(n.parent());
  for (std::size_t row : d.orbit) r += idempotent_on(n, d.normal->lift(row));
  return r;
}

CentralElement epsilon_chi(const CharacterTable& g, const SubgroupTable& n, std::size_t chi) {
  if (!contains_all(n.subgroup(), commutator_subgroup(g.group()))) {
    throw std::invalid_argument("epsilon_chi: N must contain the commutator subgroup");
  }
  const long e = g.exponent();
  const ClassFunction res = restrict_character(g[chi].values, n);
  std::vector<ClassFunction> conjugates;
  for (long k = 1; k <= std::max(e, 1L); ++k) {
    if (gcd(k, e) != 1) continue;
    ClassFunction c;
    for (const auto& v : res) c.push_back(v.lift(e).galois(k).compact());
    conjugates.push_back(std::move(c));
  }
  std::vector<Cyclo> comps(g.size());
  for (std::size_t other = 0; other < g.size(); ++other) {
    const ClassFunction r = restrict_character(g[other].values, n);
    const bool hit = std::any_of(conjugates.begin(), conjugates.end(), [&](const ClassFunction& c) { return c == r; });
    comps[other] = Cyclo(hit ? 1 : 0);
  }
  return CentralElement(g, std::move(comps));
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

void CheckReport::add(CheckStatus s, std::string id, std::string context) {
  lines.push_back({s, std::move(id), std::move(context)});
}

void CheckReport::append(const CheckReport& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

bool CheckReport::any_failed() const { return count(CheckStatus::Fail) > 0; }

std::size_t CheckReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [&](const CheckLine& l) { return l.status == s; }));
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& l : lines) out += std::string(status_name(l.status)) + " " + l.id + " " + l.context + "\n";
  return out;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : lines) j.push_back({{"status", status_name(l.status)}, {"id", l.id}, {"context", l.context}});
  return j;
}

namespace {

struct NormalInduction {
  Subgroup h;
  std::shared_ptr<const SubgroupTable> table;
  std::size_t lambda = 0;
};

std::optional<NormalInduction> find_normal_induction(const CharacterTable& g, std::size_t chi) {
  const GroupPtr& grp = g.group();
  const ElementFunction target = element_values(g, chi);
  const Subgroup whole = whole_group(grp);
  for (const Subgroup& h : normal_subgroups(grp)) {
    if (h.order() == grp->order()) continue;
    const long index = static_cast<long>(grp->order() / h.order());
    if (g[chi].degree() % index != 0) continue;
    auto t = std::make_shared<const SubgroupTable>(subgroup_table(h));
    for (std::size_t lam = 0; lam < t->table->size(); ++lam) {
      if ((*t->table)[lam].degree() * index != g[chi].degree()) continue;
      if (same(induce_between(t->lift(lam), h, whole), target)) return NormalInduction{h, t, lam};
    }
  }
  return std::nullopt;
}

bool induced_hypotheses(const CharacterTable& g, const Subgroup& n, std::size_t chi) {
  const ElementFunction chi_f = element_values(g, chi);
  const ElementFunction res = restrict_to(chi_f, n);
  if (inner_product_on(n, res, res) != Cyclo(1)) return false;
  return support_closure(n, chi_f).order() == g.group()->order();
}

void check_normal_induction(const CharacterTable& g, const Subgroup& n, std::size_t chi, CheckReport& rep) {
  const std::string ctx = describe(g, n, chi);
  const GroupPtr& grp = g.group();
  if (!induced_hypotheses(g, n, chi)) {
    for (const char* id : {"normal-induction-twist", "normal-induction-idempotent", "intersection-restriction",
                           "intersection-idempotent"}) {
      rep.add(CheckStatus::Skip, id, ctx + ": needs res_N chi irreducible and U_chi = G");
    }
    return;
  }
  const auto found = find_normal_induction(g, chi);
  if (!found) {
    for (const char* id : {"normal-induction-twist", "normal-induction-idempotent", "intersection-restriction",
                           "intersection-idempotent"}) {
      rep.add(CheckStatus::Skip, id, ctx + ": chi is not induced from a proper normal subgroup");
    }
    return;
  }
  const Subgroup& h = found->h;
  const Subgroup whole = whole_group(grp);
  const ElementFunction lambda = found->table->lift(found->lambda);
  const ElementFunction chi_f = element_values(g, chi);
  auto gtab = std::make_shared<const SubgroupTable>(subgroup_table(whole));
  const std::vector<ElementFunction> omegas = linear_over(*gtab, n);
  const std::vector<Index> cosets = left_coset_reps(h);
  const std::string hctx = ctx + " |H|=" + std::to_string(h.order());

  bool twist_ok = true;
  bool idem_ok = true;
  for (const auto& w : omegas) {
    const ElementFunction lw = pointwise_product(lambda, restrict_to(w, h));
    twist_ok &= same(induce_between(lw, h, whole), pointwise_product(chi_f, w));
    std::vector<KElement> parts;
    for (Index c : cosets) parts.push_back(idempotent_on(h, pointwise_product(conjugate_by(*grp, lambda, c), restrict_to(w, h))));
    idem_ok &= equal_elements(idempotent_on(whole, pointwise_product(chi_f, w)), sum_elements(parts, grp));
  }
  rep.add(twist_ok, "normal-induction-twist", hctx);
  rep.add(idem_ok, "normal-induction-idempotent", hctx);

  std::vector<Index> both;
  for (Index x : h.members()) {
    if (n.contains(x)) both.push_back(x);
  }
  const Subgroup hn(grp, both);
  bool restr_ok = true;
  std::vector<KElement> eparts;
  for (Index c : cosets) {
    const ElementFunction cl = conjugate_by(*grp, lambda, c);
    const ElementFunction eta_c = restrict_to(cl, hn);
    restr_ok &= inner_product_on(hn, eta_c, eta_c) == Cyclo(1);
    std::vector<ElementFunction> twists;
    for (const auto& w : omegas) twists.push_back(pointwise_product(cl, restrict_to(w, h)));
    restr_ok &= same(induce_between(eta_c, hn, h), sum_of(twists, grp->order()));
    for (const auto& t : twists) eparts.push_back(idempotent_on(h, t));
  }
  rep.add(restr_ok, "intersection-restriction", hctx);
  const KElement e_eta = idempotent_on(n, restrict_to(chi_f, n));
  const KElement total = sum_elements(eparts, grp);
  rep.add(equal_elements(e_eta, total) && supported_on(total, hn), "intersection-idempotent", hctx);
}

}  // namespace

CheckReport verify_idempotent_identities(const CharacterTable& g, const Subgroup& n, std::size_t chi) {
  CheckReport rep;
  const GroupPtr& grp = g.group();
  const std::string ctx = describe(g, n, chi);
  if (!n.is_normal()) {
    rep.add(CheckStatus::Skip, "clifford-shape", ctx + ": N is not normal");
    return rep;
  }
  auto ntab = std::make_shared<const SubgroupTable>(subgroup_table(n));
  const ElementFunction chi_f = element_values(g, chi);
  const ElementFunction res = restrict_to(chi_f, n);
  std::size_t eta = 0;
  while (eta < ntab->table->size() && inner_product_on(n, res, ntab->lift(eta)).is_zero()) ++eta;
  const InductionData d = stabilizer_and_orbit(g, ntab, eta);
  const long m = as_long(inner_product_on(n, res, ntab->lift(eta)));
  const long eta1 = (*ntab->table)[eta].degree();
  const long index_stab = static_cast<long>(grp->order() / d.stabilizer.order());

  {
    std::vector<ElementFunction> orbit;
    for (std::size_t r : d.orbit) orbit.push_back(ntab->lift(r));
    const bool ok = same(res, scaled(sum_of(orbit, grp->order()), m)) &&
                    static_cast<long>(d.orbit.size()) == index_stab && index_stab * m * eta1 == g[chi].degree() &&
                    std::find(d.chis.begin(), d.chis.end(), chi) != d.chis.end();
    rep.add(ok, "clifford-shape", ctx + " m=" + std::to_string(m) + " orbit=" + std::to_string(d.orbit.size()));
  }

  if (!contains_all(n, commutator_subgroup(grp))) {
    for (const char* id : {"twist-constituents", "equal-multiplicities", "orbit-idempotent", "stabilizer-idempotent",
                           "induced-idempotent", "twist-kernel", "restriction-to-U", "idempotent-over-U",
                           "normal-induction-twist", "normal-induction-idempotent", "intersection-restriction",
                           "intersection-idempotent"}) {
      rep.add(CheckStatus::Skip, id, ctx + ": N does not contain G'");
    }
    return rep;
  }

  const Subgroup& stab = d.stabilizer;
  const SubgroupTable& stab_t = *d.stab;
  const Subgroup whole = whole_group(grp);
  const long index_n = static_cast<long>(stab.order() / n.order());
  const std::size_t s = d.psis.size();

  // psi = the constituent inducing to chi
  std::vector<ElementFunction> psis;
  for (std::size_t p : d.psis) psis.push_back(stab_t.lift(p));
  std::size_t first = s;
  for (std::size_t i = 0; i < s && first == s; ++i) {
    if (same(induce_between(psis[i], stab, whole), chi_f)) first = i;
  }
  if (first == s) {
    rep.add(false, "twist-constituents", ctx + ": no constituent of ind eta induces to chi");
    return rep;
  }
  const ElementFunction& psi = psis[first];
  const std::vector<ElementFunction> omegas = linear_over(stab_t, n);

  // which twist realises each psi_i
  std::vector<std::size_t> omega_of(s, omegas.size());
  bool twist_ok = true;
  {
    std::set<std::size_t> twisted;
    for (std::size_t w = 0; w < omegas.size(); ++w) {
      const ElementFunction t = pointwise_product(psi, omegas[w]);
      bool found = false;
      for (std::size_t i = 0; i < s; ++i) {
        if (same(t, psis[i])) {
          found = true;
          twisted.insert(i);
          if (omega_of[i] == omegas.size()) omega_of[i] = w;
        }
      }
      twist_ok &= found;
    }
    twist_ok &= twisted.size() == s;
  }
  rep.add(twist_ok, "twist-constituents", ctx + " s=" + std::to_string(s));
  {
    const bool ok = std::all_of(d.psi_multiplicity.begin(), d.psi_multiplicity.end(), [&](long x) { return x == m; }) &&
                    static_cast<long>(s) * m * m == index_n;
    rep.add(ok, "equal-multiplicities",
            ctx + " s*m^2=" + std::to_string(static_cast<long>(s) * m * m) + " [G_eta:N]=" + std::to_string(index_n));
  }

  std::vector<KElement> e_psis;
  for (const auto& p : psis) e_psis.push_back(idempotent_on(stab, p));
  {
    std::vector<KElement> e_chis;
    std::set<std::size_t> induced;
    for (const auto& p : psis) {
      const ElementFunction ind = induce_between(p, stab, whole);
      for (std::size_t c = 0; c < g.size(); ++c) {
        if (same(ind, element_values(g, c))) induced.insert(c);
      }
    }
    for (std::size_t c : d.chis) e_chis.push_back(idempotent(g, c));
    const KElement lhs = sum_elements(e_chis, grp);
    const KElement rhs = e_of_eta(d);
    const bool ok = std::set<std::size_t>(d.chis.begin(), d.chis.end()) == induced && equal_elements(lhs, rhs) &&
                    supported_on(lhs, n);
    rep.add(ok, "orbit-idempotent", ctx);
  }
  {
    const KElement e_eta = idempotent_on(n, ntab->lift(eta));
    const KElement total = sum_elements(e_psis, grp);
    rep.add(equal_elements(total, e_eta) && supported_on(total, n), "stabilizer-idempotent", ctx);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < s; ++i) {
      const ElementFunction ind = induce_between(psis[i], stab, whole);
      std::vector<KElement> parts;
      for (Index x : d.transversal) parts.push_back(idempotent_on(stab, conjugate_by(*grp, psis[i], x)));
      const KElement rhs = sum_elements(parts, grp);
      ok &= equal_elements(idempotent_on(whole, ind), rhs) && supported_on(rhs, stab);
    }
    rep.add(ok, "induced-idempotent", ctx);
  }

  const Subgroup u = U_psi(n, psi);
  const std::string uctx = ctx + " |U_psi|=" + std::to_string(u.order());
  {
    bool ok = true;
    for (std::size_t a = 0; a < omegas.size(); ++a) {
      for (std::size_t b = 0; b < omegas.size(); ++b) {
        const bool twists_equal = same(pointwise_product(psi, omegas[a]), pointwise_product(psi, omegas[b]));
        const bool agree_on_u = same(restrict_to(omegas[a], u), restrict_to(omegas[b], u));
        ok &= twists_equal == agree_on_u;
      }
    }
    rep.add(ok, "twist-kernel", uctx);
  }
  {
    const SubgroupTable ut = subgroup_table(u);
    const ElementFunction res_u = restrict_to(psi, u);
    std::size_t rho_row = 0;
    while (inner_product_on(u, res_u, ut.lift(rho_row)).is_zero()) ++rho_row;
    const ElementFunction rho = ut.lift(rho_row);
    const long f = as_long(inner_product_on(u, res_u, rho));
    std::vector<Index> stab_rho;
    for (Index x : stab.members()) {
      if (same(conjugate_by(*grp, rho, x), rho)) stab_rho.push_back(x);
    }
    const Subgroup g_eta_rho(grp, stab_rho);
    const std::vector<Index> reps = coset_reps_in(g_eta_rho, stab);
    bool restr_ok = true;
    bool idem_ok = true;
    for (std::size_t i = 0; i < s; ++i) {
      const ElementFunction rho_i = pointwise_product(rho, restrict_to(omegas[omega_of[i]], u));
      std::vector<ElementFunction> conj;
      std::vector<KElement> parts;
      for (Index x : reps) {
        conj.push_back(conjugate_by(*grp, rho_i, x));
        parts.push_back(idempotent_on(u, conj.back()));
      }
      restr_ok &= same(restrict_to(psis[i], u), scaled(sum_of(conj, grp->order()), f));
      restr_ok &= same(induce_between(rho_i, u, stab), scaled(psis[i], f));
      std::size_t stab_i = 0;
      for (Index x : stab.members()) {
        if (same(conjugate_by(*grp, rho_i, x), rho_i)) ++stab_i;
      }
      restr_ok &= static_cast<long>(stab_i / u.order()) == f * f && stab_i % u.order() == 0;
      const KElement rhs = sum_elements(parts, grp);
      idem_ok &= equal_elements(e_psis[i], rhs) && supported_on(rhs, u);
    }
    rep.add(restr_ok, "restriction-to-U", uctx + " f=" + std::to_string(f));
    rep.add(idem_ok, "idempotent-over-U", uctx);
  }

  check_normal_induction(g, n, chi, rep);
  return rep;
}

std::vector<InducedConfiguration> induced_configurations(const CharacterTable& g, const Subgroup& n) {
  std::vector<InducedConfiguration> out;
  for (std::size_t chi = 0; chi < g.size(); ++chi) {
    if (!induced_hypotheses(g, n, chi)) continue;
    if (auto found = find_normal_induction(g, chi)) out.push_back({chi, found->h, found->lambda});
  }
  return out;
}

QMatrix restrict_matrix(const QMatrix& h, const ClassFusion& u) {
  const Subgroup& sub = u.subgroup();
  const Group& g = *sub.parent();
  const std::vector<Index> reps = left_coset_reps(sub);
  const std::size_t m = reps.size();
  const std::size_t n = h.size();
  std::vector<std::size_t> coset(g.order());
  for (std::size_t i = 0; i < m; ++i) {
    for (Index x : sub.members()) coset[g.mult(reps[i], x)] = i;
  }
  QMatrix b(u.embedded.group, n * m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const QElement& x = h.at(j, k);
      for (Index a = 0; a < g.order(); ++a) {
        if (sgn(x[a]) == 0) continue;
        for (std::size_t l = 0; l < m; ++l) {
          const Index y = g.mult(a, reps[l]);
          const std::size_t i = coset[y];
          const Index in_u = g.mult(g.inv(reps[i]), y);
          b.at(j * m + i, k * m + l)[static_cast<Index>(u.embedded.from_parent[in_u])] += x[a];
        }
      }
    }
  }
  return b;
}

RestrictionCheck restriction_norm_check(const CharacterTable& g, const QMatrix& h, const SubgroupTable& u) {
  RestrictionCheck out;
  out.direct = reduced_norm(*u.table, restrict_matrix(h, u.fusion)).components();
  const std::vector<Cyclo> alpha = reduced_norm(g, h).components();
  for (std::size_t psi = 0; psi < u.table->size(); ++psi) {
    const ClassFunction ind = induce_character((*u.table)[psi].values, u);
    Cyclo beta(1);
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
      const long k = as_long(inner_product(*g.group(), ind, g[chi].values));
      if (k > 0) beta = (beta * alpha[chi].pow(k)).compact();
    }
    out.formula.push_back(beta);
  }
  out.agree = out.direct == out.formula;
  return out;
}

std::optional<FrobeniusStructure> frobenius_structure(const GroupPtr& g) {
  if (g->order() > 1000) return std::nullopt;
  const auto subs = all_subgroups(g);
  if (!subs) return std::nullopt;
  for (const Subgroup& h : *subs) {
    if (h.is_trivial() || h.order() == g->order()) continue;
    bool ok = true;
    std::vector<bool> covered(g->order(), false);
    for (Index x : left_coset_reps(h)) {
      for (Index y : h.members()) {
        if (y == 0) continue;
        const Index c = g->mult(g->mult(x, y), g->inv(x));
        if (!h.contains(x) && h.contains(c)) ok = false;
        covered[c] = true;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    std::vector<Index> kernel;
    for (Index x = 0; x < g->order(); ++x) {
      if (!covered[x]) kernel.push_back(x);
    }
    if (kernel.size() * h.order() != g->order()) continue;
    try {
      Subgroup k(g, kernel);
      if (!k.is_normal()) continue;
      return FrobeniusStructure{std::move(k), h};
    } catch (const GroupError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace grc
