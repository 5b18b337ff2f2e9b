#include "grc/denom_lab.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

#include "grc/clifford.hpp"

namespace grc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// exact uniform draw from [-b, b] by rejection
long draw(std::uint64_t& state, long b) {
  const auto span = static_cast<std::uint64_t>(2 * b + 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = splitmix64(state);
  } while (v >= limit);
  return static_cast<long>(v % span) - b;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Integer norm_denominator(const CentralElement& z) { return denominator_lcm(std::span<const Rational>(z.class_sums())); }

bool divides(const Integer& d, const Integer& n) { return n % d == 0; }

nlohmann::json rationals_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

nlohmann::json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"element", w->element}, {"norm", rationals_json(w->norm)}, {"denominator", w->denominator.get_str()}};
}

// Galois orbit sums of e(eta) with their scale factors |N| and |N|/eta(1).
struct RefinedCheck {
  QElement eps;
  Rational norm_scale;
  Rational adjoint_scale;
  std::string label;
};

std::vector<RefinedCheck> refined_checks(const CharacterTable& t, const std::vector<std::string>& words) {
  const GroupPtr& g = t.group();
  std::vector<Index> gens;
  for (const auto& w : words) gens.push_back(g->parse_element(w));
  const Subgroup n = subgroup_generated(g, gens);
  if (!n.is_normal()) throw std::invalid_argument("the given subgroup is not normal");
  const SubgroupTable nt = subgroup_table(n);
  std::vector<RefinedCheck> out;
  std::vector<std::vector<Cyclo>> seen;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    const CentralElement eps = epsilon_chi(t, nt, chi);
    if (std::find(seen.begin(), seen.end(), eps.components()) != seen.end()) continue;
    seen.push_back(eps.components());
    const ClassFunction res = restrict_character(t[chi].values, nt);
    long eta_degree = 0;
    for (std::size_t eta = 0; eta < nt.table->size() && eta_degree == 0; ++eta) {
      if (!inner_product(*nt.fusion.embedded.group, res, (*nt.table)[eta].values).is_zero()) {
        eta_degree = (*nt.table)[eta].degree();
      }
    }
    const auto order = static_cast<long>(n.order());
    out.push_back({eps.to_element(), Rational(order), Rational(order, eta_degree), "chi" + std::to_string(chi)});
  }
  return out;
}

}  // namespace

void ProbeConfig::validate() const {
  if (sizes.empty()) throw std::invalid_argument("no matrix sizes given");
  for (auto n : sizes) {
    if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  }
  if (bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
  if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
}

QMatrix probe_matrix(const GroupPtr& g, std::size_t n, long bound, std::uint64_t seed, std::size_t index) {
  std::uint64_t state = seed ^ (static_cast<std::uint64_t>(index) + 1) * 0x9e3779b97f4a7c15ULL;
  QMatrix h(g, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (Index x = 0; x < g->order(); ++x) h.at(i, j)[x] = Rational(draw(state, bound));
    }
  }
  return h;
}

ProbeReport probe_denominator_ideal(const ProbeConfig& cfg) {
  cfg.validate();
  return probe_denominator_ideal(dixon_table(resolve_group(cfg.group)), cfg);
}

ProbeReport probe_denominator_ideal(const CharacterTable& t, const ProbeConfig& cfg) {
  cfg.validate();
  const GroupPtr& g = t.group();
  ProbeReport r;
  r.group = g->name();
  r.order = g->order();
  r.commutator_order = commutator_subgroup(g).order();
  r.config = cfg;
  r.d_G = static_cast<unsigned long>(r.commutator_order);
  for (auto s : g->classes().sizes) r.d_G = lcm(r.d_G, Integer(static_cast<unsigned long>(s)));
  const Integer dprime(static_cast<unsigned long>(r.commutator_order));
  const std::vector<RefinedCheck> refined = cfg.normal.empty() ? std::vector<RefinedCheck>{} : refined_checks(t, cfg.normal);

  std::map<std::size_t, std::pair<QMatrix, CentralElement>> previous;  // by size, for multiplicativity

  auto run = [&](const QMatrix& h, std::string kind, bool random) {
    const std::size_t idx = r.records.size();
    const NormAndAdjoint na = norm_and_adjoint(t, h);
    TrialRecord rec;
    rec.index = idx;
    rec.kind = std::move(kind);
    rec.n = h.size();
    rec.digest = fnv1a(format_matrix(h));
    rec.nr_denominator = norm_denominator(na.norm);
    rec.adjoint_denominator = denominator(na.adjoint);
    if (rec.nr_denominator > r.max_nr_denominator) r.max_nr_denominator = rec.nr_denominator;
    if (rec.adjoint_denominator > r.max_adjoint_denominator) r.max_adjoint_denominator = rec.adjoint_denominator;
    if (!divides(rec.nr_denominator, dprime)) r.violations.push_back({idx, "|G'| nr(H) is not integral"});
    if (!divides(rec.adjoint_denominator, dprime)) r.violations.push_back({idx, "|G'| H* is not integral"});
    if (!r.witness && h.size() == 1 && rec.nr_denominator != 1) {
      r.witness = Witness{format_element(h.at(0, 0)), na.norm.class_sums(), rec.nr_denominator};
    }
    const QElement nr = na.norm.to_element();
    if (cfg.check_identities) {
      const QMatrix scalar = QMatrix::scalar(nr, h.size());
      if (!(h * na.adjoint == scalar) || !(na.adjoint * h == scalar)) {
        r.violations.push_back({idx, "H H* differs from nr(H) I"});
      }
      if (random) {
        auto it = previous.find(h.size());
        if (it != previous.end()) {
          const CentralElement prod = reduced_norm(t, h * it->second.first);
          if (!(prod.to_element() == nr * it->second.second.to_element())) {
            r.violations.push_back({idx, "nr(AB) differs from nr(A) nr(B)"});
          }
        }
        previous.insert_or_assign(h.size(), std::make_pair(h, na.norm));
      }
    }
    for (const auto& c : refined) {
      QElement x = nr * c.eps;
      x *= c.norm_scale;
      if (!is_integral(x)) r.violations.push_back({idx, "|N| nr(H) e(eta) is not integral at " + c.label});
      QElement e = c.eps;
      e *= c.adjoint_scale;
      if (!is_integral(e * na.adjoint)) r.violations.push_back({idx, "|N|/eta(1) e(eta) H* is not integral at " + c.label});
    }
    r.records.push_back(std::move(rec));
  };

  run(QMatrix(g, 1), "zero", false);
  const auto names = g->generator_names();
  for (std::size_t i = 0; i < g->generators().size(); ++i) {
    run(QMatrix::scalar(QElement::basis(g, g->generators()[i]), 1), "generator " + names[i], false);
  }
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::size_t n = cfg.sizes[i % cfg.sizes.size()];
    run(probe_matrix(g, n, cfg.bound, cfg.seed, i), "random", true);
  }
  return r;
}

nlohmann::json ProbeReport::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : records) {
    recs.push_back({{"index", rec.index},
                    {"kind", rec.kind},
                    {"n", rec.n},
                    {"digest", rec.digest},
                    {"nr_denominator", rec.nr_denominator.get_str()},
                    {"adjoint_denominator", rec.adjoint_denominator.get_str()}});
  }
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : violations) viol.push_back({{"trial", v.trial}, {"what", v.what}});
  return {{"group", group},
          {"order", order},
          {"commutator_order", commutator_order},
          {"d_G", d_G.get_str()},
          {"config",
           {{"sizes", config.sizes},
            {"bound", config.bound},
            {"trials", config.trials},
            {"seed", config.seed},
            {"normal", config.normal},
            {"check_identities", config.check_identities}}},
          {"records", recs},
          {"max_nr_denominator", max_nr_denominator.get_str()},
          {"max_adjoint_denominator", max_adjoint_denominator.get_str()},
          {"nr_denominators_divide_d_G", d_G % max_nr_denominator == 0},
          {"violations", viol},
          {"witness", witness_json(witness)}};
}

WitnessSearch nonintegral_witness_search(const CharacterTable& t, long bound) {
  const GroupPtr& g = t.group();
  WitnessSearch out;
  if (g->is_abelian()) {
    out.abelian = true;
    out.note = "abelian: nr(x) = x for every x in Q[G], so no witness exists";
    return out;
  }
  auto test = [&](const QElement& x) {
    ++out.candidates;
    const CentralElement z = reduced_norm(t, QMatrix::scalar(x, 1));
    const Integer d = norm_denominator(z);
    if (d == 1) return false;
    out.witness = Witness{format_element(x), z.class_sums(), d};
    return true;
  };
  const auto& cl = g->classes();
  for (std::size_t c = 1; c < cl.count(); ++c) {
    if (test(QElement::basis(g, cl.reps[c]))) {
      out.note = "single element";
      return out;
    }
  }
  for (std::size_t c = 0; c < cl.count(); ++c) {
    const Index x = cl.reps[c];
    for (Index y = 0; y < g->order(); ++y) {
      if (y == x) continue;
      for (long a = 1; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
          if (b == 0) continue;
          QElement e(g);
          e[x] = Rational(a);
          e[y] = Rational(b);
          if (test(e)) {
            out.note = "two-term combination";
            return out;
          }
        }
      }
    }
  }
  out.note = "inconclusive: no witness within the bound";
  return out;
}

nlohmann::json WitnessSearch::to_json() const {
  return {{"abelian", abelian}, {"candidates", candidates}, {"note", note}, {"witness", witness_json(witness)}};
}

AModP a_n_mod_p(const DegreeList& degrees, const Integer& n, const Integer& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw std::invalid_argument("p must be prime");
  Integer base = n % p;
  if (base < 0) base += p;
  Integer sum = 0;
  bool small = degrees.size() <= 1000;
  for (const auto& e : degrees) {
    if (e.degree > 10000) small = false;
    Integer term;
    mpz_powm(term.get_mpz_t(), base.get_mpz_t(), e.degree.get_mpz_t(), p.get_mpz_t());
    sum += term * (e.degree % p) * (e.degree % p) % p * (e.multiplicity % p);
    sum %= p;
  }
  AModP out;
  out.residue = sum;
  if (small) {
    Integer a = 0;
    for (const auto& e : degrees) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), n.get_mpz_t(), e.degree.get_ui());
      a += e.multiplicity * pw * e.degree * e.degree;
    }
    out.exact = a;
  }
  return out;
}

Integer p_part(const Integer& x, const Integer& p) {
  Integer r = 1;
  Integer y = abs(x);
  if (y == 0) return 0;
  while (y % p == 0) {
    y /= p;
    r *= p;
  }
  return r;
}

HpgCheck hpg_criterion_check(const CharacterTable& t, const Integer& p, const ProbeConfig& cfg) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw std::invalid_argument("p must be prime");
  const ProbeReport r = probe_denominator_ideal(t, cfg);
  HpgCheck out;
  out.p = p;
  const Integer dprime(static_cast<unsigned long>(r.commutator_order));
  out.commutator_p_part = p_part(dprime, p);
  out.p_divides_commutator = out.commutator_p_part != 1;
  out.zero_trial_p_part = p_part(r.records.front().adjoint_denominator, p);
  out.max_adjoint_p_part = 1;
  for (const auto& rec : r.records) {
    const Integer pp = p_part(rec.adjoint_denominator, p);
    if (pp > out.max_adjoint_p_part) out.max_adjoint_p_part = pp;
  }
  out.consistent = out.p_divides_commutator ? out.zero_trial_p_part == out.commutator_p_part
                                            : out.max_adjoint_p_part == 1;
  out.consistent = out.consistent && r.ok();
  return out;
}

nlohmann::json HpgCheck::to_json() const {
  return {{"p", p.get_str()},
          {"p_divides_commutator", p_divides_commutator},
          {"commutator_p_part", commutator_p_part.get_str()},
          {"zero_trial_p_part", zero_trial_p_part.get_str()},
          {"max_adjoint_p_part", max_adjoint_p_part.get_str()},
          {"consistent", consistent}};
}

}  // namespace grc
