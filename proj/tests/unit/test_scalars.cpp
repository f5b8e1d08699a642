#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hopfcheck/scalars.hpp"

using namespace hopfcheck;

namespace {

std::shared_ptr<const MultiPoly::VarList> ctx() {
  static auto c = MultiPoly::make_context({"a1", "a2"});
  return c;
}

MultiPoly a1() { return MultiPoly::variable(ctx(), 0); }
MultiPoly a2() { return MultiPoly::variable(ctx(), 1); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return {num(rng), den(rng)};
}

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> deg(0, 3);
  std::uniform_int_distribution<int> nterms(0, 4);
  MultiPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<unsigned> e{deg(rng), deg(rng)};
    p += MultiPoly::monomial(ctx(), e, random_rational(rng));
  }
  return p;
}

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse(" 3/6 "), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational(5).str(), "5");
  EXPECT_THROW(Rational::parse("1/0"), ScalarError);
  EXPECT_THROW(Rational::parse("abc"), ScalarError);
}

TEST(Rational, FieldInvert) {
  EXPECT_EQ(field_invert(Rational(2, 3)), Rational(3, 2));
  EXPECT_EQ(field_invert(Rational(1)), Rational(1));
  EXPECT_THROW(field_invert(Rational(0)), DivisionByZero);
}

TEST(MultiPoly, AdditiveInverse) {
  EXPECT_TRUE(((a1() - a2()) + (a2() - a1())).is_zero());
}

TEST(MultiPoly, Commutativity) { EXPECT_TRUE((a1() * a2() - a2() * a1()).is_zero()); }

TEST(MultiPoly, Eval) {
  std::vector<Rational> p23{Rational(2), Rational(3)};
  EXPECT_EQ((a1() * a2() - a1()).eval(p23), Rational(4));
  std::vector<Rational> p55{Rational(5), Rational(5)};
  EXPECT_EQ((a1() - a2()).eval(p55), Rational(0));
  std::vector<Rational> ph{Rational(1, 2), Rational(0)};
  EXPECT_EQ((MultiPoly(2) * a1()).eval(ph), Rational(1));
}

TEST(MultiPoly, EvalArityMismatch) {
  std::vector<Rational> p{Rational(1)};
  EXPECT_THROW(a1().eval(p), ScalarError);
}

TEST(MultiPoly, PrintsLexDescending) {
  EXPECT_EQ((a1() - a2()).str(), "a1 - a2");
  EXPECT_EQ((a2() * a2() + a1() + MultiPoly(3)).str(), "a1 + a2^2 + 3");
  EXPECT_EQ(MultiPoly().str(), "0");
}

TEST(MultiPoly, ContextMismatchThrows) {
  auto other = MultiPoly::make_context({"x"});
  EXPECT_THROW(a1() + MultiPoly::variable(other, 0), ScalarError);
}

TEST(MultiPoly, ConstantsAdoptContext) {
  MultiPoly c(7);
  MultiPoly s = c + a1();
  EXPECT_EQ(s.arity(), 2u);
  EXPECT_EQ(s.str(), "a1 + 7");
}

TEST(MultiPoly, SelfSubtraction) {
  MultiPoly p = a1() + a2();
  p -= p;
  EXPECT_TRUE(p.is_zero());
}

TEST(MultiPolyProperty, RingAxioms) {
  std::mt19937_64 rng(20240101);
  for (int i = 0; i < 300; ++i) {
    MultiPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_TRUE((x - x).is_zero());
  }
}

TEST(MultiPolyProperty, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    std::vector<Rational> pt{random_rational(rng), random_rational(rng)};
    ASSERT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
    ASSERT_EQ((p + q).eval(pt), p.eval(pt) + q.eval(pt));
  }
}

TEST(MultiPoly, TryInvertOnlyConstants) {
  EXPECT_EQ(*try_invert(MultiPoly(Rational(2))), MultiPoly(Rational(1, 2)));
  EXPECT_FALSE(try_invert(a1()).has_value());
  EXPECT_FALSE(try_invert(MultiPoly()).has_value());
}

TEST(Cyclotomic3, OmegaCubed) {
  Cyclotomic3 w = Cyclotomic3::omega();
  EXPECT_EQ(w * w * w, Cyclotomic3(1));
  EXPECT_TRUE((w * w + w + Cyclotomic3(1)).is_zero());
}

TEST(Cyclotomic3, Invert) {
  Cyclotomic3 w = Cyclotomic3::omega();
  EXPECT_EQ(field_invert(w), w * w);
  EXPECT_EQ(field_invert(w), Cyclotomic3(Rational(-1), Rational(-1)));
  EXPECT_THROW(field_invert(Cyclotomic3()), DivisionByZero);
}

TEST(Cyclotomic3Property, InverseAndNorm) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Cyclotomic3 x(random_rational(rng), random_rational(rng));
    if (x.is_zero()) continue;
    ASSERT_EQ(x * field_invert(x), Cyclotomic3(1));
    ASSERT_EQ(x * x.conjugate(), Cyclotomic3(x.norm()));
  }
}

TEST(RootsOfUnity, ListedRootsAreRoots) {
  for (const auto& r : roots_of_unity<Cyclotomic3>()) EXPECT_EQ(r * r * r * r * r * r, Cyclotomic3(1));
  EXPECT_EQ(roots_of_unity<Rational>().size(), 2u);
}
