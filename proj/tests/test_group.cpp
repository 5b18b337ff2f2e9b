#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "grc/group.hpp"

using namespace grc;

namespace {

std::vector<std::size_t> sorted_sizes(const Group& g) {
  auto s = g.classes().sizes;
  std::sort(s.begin(), s.end());
  return s;
}

void expect_group_axioms(const Group& g) {
  const auto n = static_cast<Index>(g.order());
  for (Index a = 0; a < n; ++a) {
    EXPECT_EQ(g.mult(0, a), a);
    EXPECT_EQ(g.mult(a, 0), a);
    EXPECT_EQ(g.mult(a, g.inv(a)), 0u);
  }
  if (n <= 200) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        const Index ab = g.mult(a, b);
        for (Index c = 0; c < n; ++c) ASSERT_EQ(g.mult(ab, c), g.mult(a, g.mult(b, c)));
      }
    }
  } else {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int t = 0; t < 20000; ++t) {
      const Index a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(g.mult(g.mult(a, b), c), g.mult(a, g.mult(b, c)));
    }
  }
}

void expect_class_equation(const Group& g) {
  const auto& cl = g.classes();
  std::size_t total = 0;
  for (std::size_t i = 0; i < cl.count(); ++i) {
    total += cl.sizes[i];
    EXPECT_EQ(cl.members[i].size(), cl.sizes[i]);
    EXPECT_EQ(cl.inverse_class[cl.inverse_class[i]], i);
    for (Index x : cl.members[i]) {
      EXPECT_EQ(cl.class_of[x], i);
      for (Index s : g.generators()) EXPECT_EQ(cl.class_of[g.conj(x, s)], i);
    }
    if (i > 0) {
      const bool ordered = cl.sizes[i - 1] < cl.sizes[i] ||
                           (cl.sizes[i - 1] == cl.sizes[i] && cl.members[i - 1][0] < cl.members[i][0]);
      EXPECT_TRUE(ordered);
    }
  }
  EXPECT_EQ(total, g.order());
  EXPECT_EQ(cl.reps[0], 0u);
  EXPECT_EQ(cl.sizes[0], 1u);
}

}  // namespace

TEST(Group, BuiltinOrders) {
  EXPECT_EQ(builtin_group("S3")->order(), 6u);
  EXPECT_EQ(builtin_group("D8")->order(), 16u);
  EXPECT_EQ(builtin_group("SL2_3")->order(), 24u);
  EXPECT_EQ(builtin_group("Q8")->order(), 8u);
  EXPECT_EQ(builtin_group("C1")->order(), 1u);
  EXPECT_EQ(builtin_group("C12")->order(), 12u);
  EXPECT_EQ(builtin_group("A5")->order(), 60u);
  EXPECT_EQ(builtin_group("S5")->order(), 120u);
  EXPECT_EQ(builtin_group("D1")->order(), 2u);
  EXPECT_EQ(builtin_group("D2")->order(), 4u);
  EXPECT_EQ(builtin_group("Aff_8")->order(), 56u);
  EXPECT_EQ(builtin_group("Aff_9")->order(), 72u);
  EXPECT_EQ(builtin_group("Aff_16")->order(), 240u);
  EXPECT_EQ(builtin_group("C2xS3")->order(), 12u);
  EXPECT_EQ(builtin_group("C3xC3xC2")->order(), 18u);
  EXPECT_THROW(builtin_group("Aff_6"), GroupError);
  EXPECT_THROW(builtin_group("S9"), GroupError);
  EXPECT_THROW(builtin_group("nonsense"), GroupError);
}

TEST(Group, Axioms) {
  for (const char* name : {"S3", "D8", "Q8", "SL2_3", "A4", "Aff_5", "C2xC4", "S4"}) {
    SCOPED_TRACE(name);
    const auto g = builtin_group(name);
    expect_group_axioms(*g);
    expect_class_equation(*g);
  }
  expect_group_axioms(*builtin_group("S5"));
}

TEST(Group, D8Presentation) {
  const auto g = builtin_group("D8");
  const Index a = g->parse_element("a");
  const Index x = g->parse_element("x");
  EXPECT_EQ(g->element_order(a), 8u);
  EXPECT_EQ(g->element_order(x), 2u);
  EXPECT_EQ(g->mult(g->mult(x, a), x), g->inv(a));
  EXPECT_EQ(exponent(*g), 8);
  EXPECT_EQ(sorted_sizes(*g), (std::vector<std::size_t>{1, 1, 2, 2, 2, 4, 4}));
  EXPECT_EQ(g->word(g->mult(g->pow(a, 2), x)), "a^2*x");
  EXPECT_EQ(g->parse_element("a^2*x"), g->mult(g->pow(a, 2), x));
  EXPECT_EQ(g->parse_element("a^-1"), g->inv(a));
  EXPECT_EQ(g->parse_element("1"), 0u);
  EXPECT_THROW(g->parse_element("b"), GroupError);
}

TEST(Group, WordsRoundTrip) {
  for (const char* name : {"D8", "SL2_3", "Aff_4", "C2xS3"}) {
    const auto g = builtin_group(name);
    for (Index i = 0; i < g->order(); ++i) EXPECT_EQ(g->parse_element(g->word(i)), i) << name;
  }
}

TEST(Group, Classes) {
  EXPECT_EQ(sorted_sizes(*builtin_group("S3")), (std::vector<std::size_t>{1, 2, 3}));
  const auto c6 = builtin_group("C6");
  EXPECT_EQ(c6->classes().count(), 6u);
  EXPECT_EQ(sorted_sizes(*builtin_group("SL2_3")), (std::vector<std::size_t>{1, 1, 4, 4, 4, 4, 6}));
}

TEST(Group, CommutatorSubgroup) {
  const auto d8 = builtin_group("D8");
  const auto gd = commutator_subgroup(d8);
  EXPECT_EQ(gd.order(), 4u);
  EXPECT_TRUE(gd.is_normal());
  const Index a2 = d8->parse_element("a^2");
  EXPECT_EQ(subgroup_generated(d8, std::vector<Index>{a2}), gd);
  EXPECT_EQ(commutator_subgroup(builtin_group("SL2_3")).order(), 8u);
  EXPECT_TRUE(commutator_subgroup(builtin_group("C2xC4")).is_trivial());
  EXPECT_EQ(commutator_subgroup(builtin_group("S4")).order(), 12u);
  EXPECT_EQ(commutator_subgroup(builtin_group("A5")).order(), 60u);
  for (const char* name : {"D8", "SL2_3", "S4", "Aff_7", "Q8"}) {
    const auto g = builtin_group(name);
    const auto q = quotient_group(g, commutator_subgroup(g));
    EXPECT_TRUE(q.group->is_abelian()) << name;
  }
}

TEST(Group, Quotients) {
  const auto s3 = builtin_group("S3");
  EXPECT_EQ(quotient_group(s3, whole_group(s3)).group->order(), 1u);
  const auto a3 = commutator_subgroup(s3);
  EXPECT_EQ(a3.order(), 3u);
  const auto q = quotient_group(s3, a3);
  EXPECT_EQ(q.group->order(), 2u);

  const auto d8 = builtin_group("D8");
  const auto k = quotient_group(d8, commutator_subgroup(d8));
  EXPECT_EQ(k.group->order(), 4u);
  EXPECT_EQ(k.group->exponent(), 2);
  for (const auto& [gname, sub] : {std::pair{"D8", 0}, std::pair{"SL2_3", 1}, std::pair{"S4", 2}}) {
    (void)sub;
    const auto g = builtin_group(gname);
    for (const auto& n : normal_subgroups(g)) {
      const auto quo = quotient_group(g, n);
      EXPECT_EQ(quo.group->order() * n.order(), g->order());
      for (Index x = 0; x < g->order(); ++x) {
        for (Index y = 0; y < g->order(); ++y) {
          ASSERT_EQ(quo.projection[g->mult(x, y)], quo.group->mult(quo.projection[x], quo.projection[y]));
        }
      }
    }
  }
  const Index t = s3->parse_element("t");
  EXPECT_THROW(quotient_group(s3, subgroup_generated(s3, std::vector<Index>{t})), GroupError);
}

TEST(Group, CentreOrdersExponent) {
  EXPECT_TRUE(centre(builtin_group("S3")).is_trivial());
  EXPECT_EQ(centre(builtin_group("D8")).order(), 2u);
  EXPECT_EQ(centre(builtin_group("SL2_3")).order(), 2u);
  const auto sl = builtin_group("SL2_3");
  EXPECT_EQ(element_order(*sl, sl->parse_element("gamma")), 3u);
  EXPECT_EQ(element_order(*sl, sl->parse_element("alpha")), 4u);
  EXPECT_EQ(element_order(*sl, sl->parse_element("beta")), 4u);
  // beta gamma = gamma alpha, gamma beta = alpha beta gamma
  EXPECT_EQ(sl->parse_element("beta*gamma"), sl->parse_element("gamma*alpha"));
  EXPECT_EQ(sl->parse_element("gamma*beta"), sl->parse_element("alpha*beta*gamma"));
  EXPECT_EQ(exponent(*sl), 12);
  EXPECT_EQ(exponent(*builtin_group("S5")), 60);
}

TEST(Group, Subgroups) {
  const auto s3 = builtin_group("S3");
  const auto subs = all_subgroups(s3);
  ASSERT_TRUE(subs.has_value());
  EXPECT_EQ(subs->size(), 6u);
  EXPECT_EQ(normal_subgroups(s3).size(), 3u);
  const auto s4 = builtin_group("S4");
  EXPECT_EQ(all_subgroups(s4)->size(), 30u);
  EXPECT_EQ(normal_subgroups(s4).size(), 4u);
  EXPECT_EQ(normal_subgroups(builtin_group("Q8")).size(), 6u);
  EXPECT_THROW(Subgroup(s3, std::vector<Index>{0, 1, 2}), GroupError);

  const auto d8 = builtin_group("D8");
  const auto u = subgroup_generated(d8, std::vector<Index>{d8->parse_element("a^2"), d8->parse_element("x")});
  EXPECT_EQ(u.order(), 8u);
  const auto reps = left_coset_reps(u);
  EXPECT_EQ(reps.size(), 2u);
  const auto emb = embed(u);
  EXPECT_EQ(emb.group->order(), 8u);
  for (Index i = 0; i < emb.group->order(); ++i) {
    for (Index j = 0; j < emb.group->order(); ++j) {
      ASSERT_EQ(emb.to_parent[emb.group->mult(i, j)], d8->mult(emb.to_parent[i], emb.to_parent[j]));
    }
    EXPECT_EQ(emb.from_parent[emb.to_parent[i]], static_cast<std::int64_t>(i));
  }
}

TEST(Group, Files) {
  EXPECT_EQ(parse_group_text("perm 3\n(1 2 3)\n", "c3")->order(), 3u);
  const auto s3 = parse_group_text("# symmetric\nperm 3\n(1 2)\n(1 2 3) # cycle\n", "s3");
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_EQ(s3->generator_names()[0], "p1");
  const auto v4 = parse_group_text("perm 4\n(1 2)(3 4)\n(1 3)(2 4)\n", "v4");
  EXPECT_EQ(v4->order(), 4u);
  EXPECT_TRUE(v4->is_abelian());
  EXPECT_EQ(v4->exponent(), 2);
  const auto c3 = parse_group_text("cayley 3\n1 2 3\n2 3 1\n3 1 2\n", "c3");
  EXPECT_EQ(c3->order(), 3u);
  EXPECT_THROW(parse_group_text("perm 3\n(1 4)\n", "bad"), GroupError);
  EXPECT_THROW(parse_group_text("perm 3\n(1 2 1)\n", "bad"), GroupError);
  EXPECT_THROW(parse_group_text("perms 3\n", "bad"), GroupError);
  EXPECT_THROW(parse_group_text("cayley 2\n1 2\n2 2\n", "bad"), GroupError);
  EXPECT_THROW(parse_group_text("perm 8\n(1 2 3 4 5 6 7 8)\n(1 2)\n", "s8", 1000), GroupError);
}
