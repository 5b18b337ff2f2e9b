#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grc/denom_lab.hpp"

using namespace grc;

namespace {

ProbeConfig config(const std::string& group, std::size_t trials, std::uint64_t seed = 7) {
  ProbeConfig c;
  c.group = group;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(DenomLab, ConfigValidation) {
  ProbeConfig c = config("S3", 1);
  EXPECT_NO_THROW(c.validate());
  c.bound = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = config("S3", 0);
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = config("S3", 1);
  c.sizes = {1, 0};
  EXPECT_THROW(probe_denominator_ideal(c), std::invalid_argument);
  c.sizes = {};
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(DenomLab, SamplingIsUniformAndReproducible) {
  const auto g = builtin_group("S3");
  std::map<long, int> counts;
  for (std::size_t i = 0; i < 50; ++i) {
    const QMatrix h = probe_matrix(g, 2, 3, 11, i);
    EXPECT_EQ(h, probe_matrix(g, 2, 3, 11, i));
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (Index x = 0; x < g->order(); ++x) {
          const Rational v = h.at(r, c)[x];
          ASSERT_EQ(v.get_den(), 1);
          ++counts[v.get_num().get_si()];
        }
      }
    }
  }
  ASSERT_EQ(counts.size(), 7u);
  EXPECT_EQ(counts.begin()->first, -3);
  EXPECT_EQ(counts.rbegin()->first, 3);
  // 1200 draws, expected 171 each
  for (const auto& [v, n] : counts) {
    EXPECT_GT(n, 110) << v;
    EXPECT_LT(n, 240) << v;
  }
  EXPECT_FALSE(probe_matrix(g, 2, 3, 11, 0) == probe_matrix(g, 2, 3, 11, 1));
  EXPECT_FALSE(probe_matrix(g, 2, 3, 11, 0) == probe_matrix(g, 2, 3, 12, 0));
}

TEST(DenomLab, AbelianProbe) {
  for (const char* name : {"C1", "C6", "C2xC2xC2"}) {
    const ProbeReport r = probe_denominator_ideal(config(name, 60));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.max_nr_denominator, 1);
    EXPECT_EQ(r.max_adjoint_denominator, 1);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.commutator_order, 1u);
  }
}

TEST(DenomLab, Dihedral16Probe) {
  const ProbeReport r = probe_denominator_ideal(config("D8", 500));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.records.size(), 503u);
  EXPECT_EQ(r.records[0].kind, "zero");
  EXPECT_EQ(r.records[0].adjoint_denominator, 4);
  EXPECT_EQ(r.records[0].nr_denominator, 1);
  EXPECT_EQ(r.max_adjoint_denominator, 4);
  EXPECT_EQ(r.records[1].kind, "generator a");
  EXPECT_EQ(r.records[1].nr_denominator, 4);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->element, "1:a");
  EXPECT_EQ(r.d_G, 4);
}

TEST(DenomLab, SL23Probe) {
  ProbeConfig c = config("SL2_3", 500);
  const ProbeReport r = probe_denominator_ideal(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.commutator_order, 8u);
  EXPECT_EQ(r.max_adjoint_denominator, 8);
  EXPECT_EQ(r.max_nr_denominator, 8);
  bool gamma = false;
  for (const auto& rec : r.records) {
    if (rec.kind == "generator gamma") {
      gamma = true;
      EXPECT_EQ(rec.nr_denominator, 8);
    }
    if (rec.kind == "generator alpha" || rec.kind == "generator beta") {
      EXPECT_EQ(rec.nr_denominator, 1);
    }
  }
  EXPECT_TRUE(gamma);
  // class sizes 1,1,4,4,4,4,6
  EXPECT_EQ(r.d_G, 24);
}

TEST(DenomLab, RefinedChecksWithNormalSubgroup) {
  struct Case {
    const char* group;
    std::vector<std::string> normal;
  };
  for (const Case& c : {Case{"S4", {"s^2", "t*s^2*t", "s*t*s^-1*t"}}, Case{"S4", {"t", "s"}}, Case{"D8", {"a"}},
                        Case{"SL2_3", {"alpha", "beta"}}, Case{"Aff_5", {"t"}}}) {
    ProbeConfig cfg = config(c.group, 40);
    cfg.normal = c.normal;
    const ProbeReport r = probe_denominator_ideal(cfg);
    EXPECT_TRUE(r.ok()) << c.group << " " << r.to_json().dump();
  }
  ProbeConfig bad = config("S3", 2);
  bad.normal = {"t"};
  EXPECT_THROW(probe_denominator_ideal(bad), std::invalid_argument);
}

TEST(DenomLab, ReportDeterminism) {
  const std::string a = probe_denominator_ideal(config("A4", 40, 5)).to_json().dump();
  const std::string b = probe_denominator_ideal(config("A4", 40, 5)).to_json().dump();
  const std::string c = probe_denominator_ideal(config("A4", 40, 6)).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("records").size(), 43u);
  EXPECT_EQ(j.at("violations").size(), 0u);
  EXPECT_EQ(j.at("max_adjoint_denominator"), "4");
}

TEST(DenomLab, WitnessSearch) {
  {
    const auto g = builtin_group("S3");
    const WitnessSearch w = nonintegral_witness_search(dixon_table(g));
    ASSERT_TRUE(w.witness.has_value());
    const Index tau = g->parse_element(w.witness->element.substr(2));
    EXPECT_EQ(g->element_order(tau), 2u);
    EXPECT_EQ(w.witness->norm[g->classes().class_of[tau]], Rational(1, 3));
    EXPECT_EQ(w.witness->denominator, 3);
  }
  {
    const auto g = builtin_group("Aff_5");
    const CharacterTable t = dixon_table(g);
    const WitnessSearch w = nonintegral_witness_search(t);
    ASSERT_TRUE(w.witness.has_value());
    EXPECT_EQ(w.witness->denominator, 5);
  }
  const WitnessSearch c6 = nonintegral_witness_search(dixon_table(builtin_group("C6")));
  EXPECT_TRUE(c6.abelian);
  EXPECT_FALSE(c6.witness.has_value());
  EXPECT_EQ(c6.candidates, 0u);
  for (const auto& name : builtin_catalog()) {
    const auto g = builtin_group(name);
    const WitnessSearch w = nonintegral_witness_search(dixon_table(g));
    EXPECT_EQ(w.witness.has_value(), !g->is_abelian()) << name;
    if (w.witness) {
      // witness denominators divide |G'|
      EXPECT_EQ(static_cast<unsigned long>(commutator_subgroup(g).order()) % w.witness->denominator, 0) << name;
    }
  }
}

TEST(DenomLab, AModP) {
  const DegreeList s3 = {{1, 2}, {2, 1}};
  const AModP r = a_n_mod_p(s3, -1, 5);
  EXPECT_EQ(r.residue, 2);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, 2);
  for (long n : {-7L, -1L, 0L, 3L, 12L}) {
    EXPECT_EQ(a_n_mod_p({{1, 1}}, n, 7).residue, ((n % 7) + 7) % 7);
  }
  EXPECT_THROW(a_n_mod_p(s3, -1, 4), std::invalid_argument);
  EXPECT_THROW(a_n_mod_p(s3, -1, 1), std::invalid_argument);
  // residue agrees with the exact sum
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    DegreeList d;
    for (int k = 0; k < 5; ++k) d.push_back({Integer(static_cast<unsigned long>(rng() % 40 + 1)), Integer(static_cast<unsigned long>(rng() % 5 + 1))});
    const long n = static_cast<long>(rng() % 21) - 10;
    for (long p : {2L, 3L, 17L, 71L, 1000003L}) {
      const AModP a = a_n_mod_p(d, n, p);
      ASSERT_TRUE(a.exact.has_value());
      Integer m = *a.exact % p;
      if (m < 0) m += p;
      EXPECT_EQ(a.residue, m);
    }
  }
  // the degree list of a group: A(1) = |G|
  for (const char* name : {"S4", "SL2_3", "A5"}) {
    const auto g = builtin_group(name);
    const AModP a = a_n_mod_p(degree_list(dixon_table(g)), 1, 1000003);
    EXPECT_EQ(*a.exact, static_cast<unsigned long>(g->order()));
  }
  // huge degrees take the modular path only
  const AModP big = a_n_mod_p({{Integer("1000000000000000000000"), 1}}, -1, 17);
  EXPECT_FALSE(big.exact.has_value());
  // (-1)^even * d^2 mod 17, d = 10^21
  Integer d2 = Integer("1000000000000000000000") % 17;
  EXPECT_EQ(big.residue, d2 * d2 % 17);
}

TEST(DenomLab, HpgCriterion) {
  const CharacterTable d8 = dixon_table(builtin_group("D8"));
  const ProbeConfig c = config("D8", 60);
  const HpgCheck p3 = hpg_criterion_check(d8, 3, c);
  EXPECT_FALSE(p3.p_divides_commutator);
  EXPECT_EQ(p3.max_adjoint_p_part, 1);
  EXPECT_TRUE(p3.consistent);
  const HpgCheck p2 = hpg_criterion_check(d8, 2, c);
  EXPECT_TRUE(p2.p_divides_commutator);
  EXPECT_EQ(p2.zero_trial_p_part, 4);
  EXPECT_TRUE(p2.consistent);
  const HpgCheck s3 = hpg_criterion_check(dixon_table(builtin_group("S3")), 3, config("S3", 20));
  EXPECT_EQ(s3.zero_trial_p_part, 3);
  EXPECT_TRUE(s3.consistent);
  const HpgCheck s3p2 = hpg_criterion_check(dixon_table(builtin_group("S3")), 2, config("S3", 20));
  EXPECT_EQ(s3p2.max_adjoint_p_part, 1);
  EXPECT_TRUE(s3p2.consistent);
  EXPECT_THROW(hpg_criterion_check(d8, 6, c), std::invalid_argument);
  EXPECT_EQ(p_part(48, 2), 16);
  EXPECT_EQ(p_part(48, 5), 1);
}
