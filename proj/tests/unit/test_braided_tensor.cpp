#include <gtest/gtest.h>

#include "hopfcheck/braided_tensor.hpp"

using namespace hopfcheck;

namespace {

using Q = Rational;
using TA = BraidedTensorAlgebra<Q>;

TA v3_algebra() { return TA::from_module(v3<Q>()); }

std::vector<Word> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::size_t l = 0; l < letters; ++l) {
        Word x = w;
        x.push_back(static_cast<std::uint8_t>(l));
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

using Triple = std::map<std::tuple<Word, Word, Word>, Q>;

Triple comult_left(const TA& t, const Word& w) {
  Triple out;
  for (const auto& [ab, c] : t.comult_word(w))
    for (const auto& [pq, d] : t.comult_word(ab.first)) accumulate_term(out, {pq.first, pq.second, ab.second}, c * d);
  return out;
}

Triple comult_right(const TA& t, const Word& w) {
  Triple out;
  for (const auto& [ab, c] : t.comult_word(w))
    for (const auto& [pq, d] : t.comult_word(ab.second)) accumulate_term(out, {ab.first, pq.first, pq.second}, c * d);
  return out;
}

const Word X12{0}, X13{1}, X23{2};

}  // namespace

TEST(BraidedTensor, SquareProductExamples) {
  auto t = v3_algebra();
  TensorSquareElt<Q> a{{{X12, Word{}}, Q(1)}};
  TensorSquareElt<Q> b{{{Word{}, X13}, Q(1)}};
  EXPECT_EQ(t.square_multiply(a, b), (TensorSquareElt<Q>{{{X12, X13}, Q(1)}}));
  TensorSquareElt<Q> c{{{Word{}, X12}, Q(1)}};
  TensorSquareElt<Q> d{{{X13, Word{}}, Q(1)}};
  EXPECT_EQ(t.square_multiply(c, d), (TensorSquareElt<Q>{{{X23, X12}, Q(-1)}}));
  TensorSquareElt<Q> one{{{Word{}, Word{}}, Q(1)}};
  TensorSquareElt<Q> w{{{Word{0, 1}, Word{2}}, Q(3)}};
  EXPECT_EQ(t.square_multiply(one, w), w);
}

TEST(BraidedTensor, ComultExamples) {
  auto t = v3_algebra();
  TensorSquareElt<Q> expect{{{Word{0, 1}, Word{}}, Q(1)},
                            {{Word{}, Word{0, 1}}, Q(1)},
                            {{X12, X13}, Q(1)},
                            {{X23, X12}, Q(-1)}};
  EXPECT_EQ(t.comult_word(Word{0, 1}), expect);
  EXPECT_EQ(t.comult_word(Word{}), (TensorSquareElt<Q>{{{Word{}, Word{}}, Q(1)}}));
  auto sq = t.comult_word(Word{0, 0});
  EXPECT_EQ(sq.size(), 2u);
}

TEST(BraidedTensor, Primitivity) {
  auto t = v3_algebra();
  EXPECT_TRUE(t.is_primitive(t.letter(0)));
  EXPECT_FALSE(t.is_primitive(t.word(Word{0, 1})));
  EXPECT_TRUE(t.is_primitive(t.word(Word{0, 0})));
}

TEST(BraidedTensor, CoassociativeUpToLengthFour) {
  auto t = v3_algebra();
  for (const auto& w : all_words(3, 4)) ASSERT_EQ(comult_left(t, w), comult_right(t, w)) << w.str(t.names());
}

TEST(BraidedTensor, ComultIsAlgebraMap) {
  auto t = v3_algebra();
  auto words = all_words(3, 4);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 4) continue;
      ASSERT_EQ(t.comult_word(concat(u, v)), t.square_multiply(t.comult_word(u), t.comult_word(v)));
    }
}

TEST(BraidedTensor, QuadraticRelationsN3) {
  auto t = v3_algebra();
  auto rels = quadratic_relations<Q>(3);
  ASSERT_EQ(rels.size(), 5u);
  std::vector<Vec<Q>> vecs;
  for (const auto& r : rels) {
    EXPECT_TRUE(t.is_primitive(r)) << t.str(r);
    vecs.push_back(t.to_degree_two(r));
  }
  EXPECT_EQ(rank_of(vecs, 9), 5u);
  // R_(12)(13) = x12x13 + x13x23 + x23x12 coincides with R_(13)(23).
  TensorAlgElt<Q> r{{Word{0, 1}, Q(1)}, {Word{1, 2}, Q(1)}, {Word{2, 0}, Q(1)}};
  EXPECT_NE(std::find(rels.begin(), rels.end(), r), rels.end());
}

TEST(BraidedTensor, DegreeTwoPrimitivesSpanRelations) {
  auto t = v3_algebra();
  auto prims = t.degree_two_primitives();
  std::vector<Vec<Q>> pv, rv;
  for (const auto& p : prims) {
    EXPECT_TRUE(t.is_primitive(p));
    pv.push_back(t.to_degree_two(p));
  }
  for (const auto& r : quadratic_relations<Q>(3)) rv.push_back(t.to_degree_two(r));
  EXPECT_EQ(pv.size(), 5u);
  auto both = pv;
  both.insert(both.end(), rv.begin(), rv.end());
  EXPECT_EQ(rank_of(both, 9), 5u);
}

TEST(BraidedTensor, QuadraticRelationsLarger) {
  auto rels4 = quadratic_relations<Q>(4);
  EXPECT_EQ(rels4.size(), 17u);
  auto t4 = TA::from_module(transposition_module<Q>(4));
  for (const auto& r : rels4) EXPECT_TRUE(t4.is_primitive(r));
  std::vector<Vec<Q>> v4;
  for (const auto& p : t4.degree_two_primitives()) v4.push_back(t4.to_degree_two(p));
  std::vector<Vec<Q>> r4;
  for (const auto& r : rels4) r4.push_back(t4.to_degree_two(r));
  EXPECT_EQ(rank_of(r4, 36), v4.size());
  EXPECT_THROW(quadratic_relations<Q>(2), std::invalid_argument);
}

TEST(BraidedTensor, FlippedBraidingGivesSameRelationSpace) {
  auto v = v3<Q>();
  auto t = flip<Q>(3);
  TA flipped(t * braiding(v) * t, v.labels);
  for (const auto& r : quadratic_relations<Q>(3)) EXPECT_TRUE(flipped.is_primitive(r));
}

TEST(BraidedTensor, CapEnforced) {
  TA t(braiding(v3<Q>()), v3<Q>().labels, 3);
  EXPECT_THROW(t.comult_word(Word{0, 1, 2, 0}), WordCapError);
}
