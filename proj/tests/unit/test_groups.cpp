#include <gtest/gtest.h>

#include "hopfcheck/groups.hpp"

using namespace hopfcheck;

namespace {

Perm P(const char* s) { return Perm::parse(s, 3); }

// Direct point evaluation, independent of compose().
int apply_rl(const Perm& p, const Perm& q, int i) { return p(q(i)); }

}  // namespace

TEST(Perm, ParseAndPrint) {
  EXPECT_EQ(P("(12)").str(), "(12)");
  EXPECT_EQ(P("(132)").str(), "(132)");
  EXPECT_EQ(P("(321)").str(), "(132)");
  EXPECT_EQ(P("e").str(), "e");
  EXPECT_EQ(P("()").str(), "e");
  EXPECT_THROW(P("(14)"), GroupError);
  EXPECT_THROW(P("(1"), GroupError);
  EXPECT_THROW(P("(11)"), GroupError);
}

TEST(Perm, ComposeRightToLeft) {
  EXPECT_EQ(P("(12)") * P("(123)"), P("(23)"));
  EXPECT_EQ(P("(123)") * P("(12)"), P("(13)"));
  for (const auto& g : symmetric_group(3)) EXPECT_EQ(g * Perm::identity(3), g);
}

TEST(Perm, ComposeMatchesPointwise) {
  auto g = symmetric_group(3);
  for (const auto& p : g)
    for (const auto& q : g)
      for (int i = 1; i <= 3; ++i) ASSERT_EQ((p * q)(i), apply_rl(p, q, i));
}

TEST(Perm, SizeMismatch) { EXPECT_THROW(P("(12)") * Perm::identity(4), GroupError); }

TEST(Perm, Sign) {
  EXPECT_EQ(P("(12)").sign(), -1);
  EXPECT_EQ(P("(123)").sign(), 1);
  EXPECT_EQ(P("e").sign(), 1);
  auto g = symmetric_group(4);
  for (const auto& p : g)
    for (const auto& q : g) ASSERT_EQ((p * q).sign(), p.sign() * q.sign());
}

TEST(Group, S3Structure) {
  auto g = symmetric_group(3);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[0].str(), "e");
  EXPECT_EQ(g[1].str(), "(23)");
  EXPECT_EQ(g[2].str(), "(12)");
  EXPECT_EQ(g[5].str(), "(13)");
  for (const auto& a : g) {
    EXPECT_EQ(a * a.inverse(), Perm::identity(3));
    for (const auto& b : g)
      for (const auto& c : g) ASSERT_EQ((a * b) * c, a * (b * c));
  }
  auto reps = conjugacy_class_representatives(g);
  ASSERT_EQ(reps.size(), 3u);
  std::vector<std::size_t> sizes;
  for (const auto& r : reps) sizes.push_back(conjugacy_class(r, g).size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 2}));
}

TEST(Group, ClassAndCentralizer) {
  auto g = symmetric_group(3);
  EXPECT_EQ(conjugacy_class(P("(12)"), g), (std::vector<Perm>{P("(23)"), P("(12)"), P("(13)")}));
  EXPECT_EQ(centralizer(P("(12)"), g), (std::vector<Perm>{P("e"), P("(12)")}));
  EXPECT_EQ(conjugacy_class(P("e"), g), (std::vector<Perm>{P("e")}));
  for (std::size_t n = 3; n <= 4; ++n) {
    auto sn = symmetric_group(n);
    for (const auto& x : sn) ASSERT_EQ(conjugacy_class(x, sn).size() * centralizer(x, sn).size(), sn.size());
  }
}

TEST(Group, CosetRepresentatives) {
  auto g = symmetric_group(3);
  auto h = generated_subgroup({P("(12)")}, 3);
  auto reps = coset_representatives(g, h);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps[0], P("e"));
  // One representative per left coset.
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      Perm q = reps[i].inverse() * reps[j];
      EXPECT_FALSE(q == P("e") || q == P("(12)"));
    }
  EXPECT_EQ(coset_representatives(g, g), (std::vector<Perm>{P("e")}));
  EXPECT_EQ(coset_representatives(g, {P("e")}), g);
  EXPECT_THROW(coset_representatives(g, {P("e"), P("(123)")}), GroupError);
}

template <class S>
void expect_homomorphisms(const std::vector<Irrep<S>>& irreps) {
  for (const auto& rho : irreps) {
    EXPECT_TRUE(rho.at(Perm::identity(rho.elements.front().degree())).is_identity());
    for (const auto& g : rho.elements)
      for (const auto& h : rho.elements) ASSERT_EQ(rho.at(g * h), rho.at(g) * rho.at(h)) << rho.name;
  }
}

TEST(Irreps, S3) {
  auto irreps = builtin_irreps<Rational>(GroupDescriptor::s3());
  ASSERT_EQ(irreps.size(), 3u);
  std::size_t total = 0;
  for (const auto& r : irreps) total += r.dim * r.dim;
  EXPECT_EQ(total, 6u);
  expect_homomorphisms(irreps);
  const auto& std2 = irreps[2];
  // rho(12) e1 = e2 and rho(123) e1 = -e2.
  EXPECT_EQ(std2.at(P("(12)")).column(0), (Vec<Rational>{0, 1}));
  EXPECT_EQ(std2.at(P("(123)")).column(0), (Vec<Rational>{0, -1}));
}

TEST(Irreps, CyclicGroups) {
  auto z2 = builtin_irreps<Rational>(GroupDescriptor::cyclic(P("(12)")));
  ASSERT_EQ(z2.size(), 2u);
  expect_homomorphisms(z2);
  auto z3 = builtin_irreps<Cyclotomic3>(GroupDescriptor::cyclic(P("(123)")));
  ASSERT_EQ(z3.size(), 3u);
  expect_homomorphisms(z3);
  EXPECT_EQ(z3[1].at(P("(123)"))(0, 0), Cyclotomic3::omega());
  EXPECT_THROW(builtin_irreps<Rational>(GroupDescriptor::cyclic(P("(123)"))), GroupError);
  EXPECT_THROW(GroupDescriptor::cyclic(P("e")), GroupError);
}

TEST(Irreps, PolynomialScalars) { expect_homomorphisms(builtin_irreps<MultiPoly>(GroupDescriptor::s3())); }
