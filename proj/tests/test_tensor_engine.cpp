#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cliffalg/tensor_engine.hpp"
#include "test_support.hpp"

using namespace cliffalg;  // NOLINT

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

TensorElement w(std::initializer_list<std::uint16_t> letters, const Rational& c = 1) {
  return TensorElement::word(Word(letters), c);
}

/// Clifford relations of the symmetric form [[1,1],[1,2]].
IdealGenerators tilted_plane() {
  return {2, {w({0, 0}) - TensorElement::scalar(1), w({1, 1}) - TensorElement::scalar(2),
              w({0, 1}) + w({1, 0}) - TensorElement::scalar(2)}};
}

/// Relations of b = [[0,1],[1/2,0]] whose asymmetry is diag(2, 1/2).
IdealGenerators lambda_two() {
  return {2, {w({0, 0}, 2), w({1, 1}, q(1, 2)), w({0, 1}, 2) + w({1, 0}, q(1, 2)) - TensorElement::scalar(q(3, 2))}};
}

/// Classical Clifford relations of <1, 1>.
IdealGenerators euclidean_plane() {
  return {2, {w({0, 0}) - TensorElement::scalar(1), w({1, 1}) - TensorElement::scalar(1), w({0, 1}) + w({1, 0})}};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Parse;
}

}  // namespace

TEST(TensorElement, ArithmeticAndOrder) {
  const TensorElement t = w({1, 0}, 2) + w({0}) - TensorElement::scalar(3);
  EXPECT_EQ(t.degree(), 2U);
  EXPECT_EQ(t.leading_word(), (Word{1, 0}));
  EXPECT_EQ(t.to_string(), "2*e1e0 + e0 - 3");
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_EQ((w({0}) * w({1})), w({0, 1}));
  EXPECT_FALSE(t.is_even());
  EXPECT_TRUE(w({0, 1}).is_even());
  EXPECT_TRUE(DegLexLess{}(Word{1}, Word{0, 0}));
  EXPECT_TRUE(DegLexLess{}(Word{0, 1}, Word{1, 0}));
}

TEST(Quotient, RankOneClifford) {
  const auto qa = quotient({1, {w({0, 0}) - TensorElement::scalar(1)}});
  ASSERT_EQ(qa.dim(), 2U);
  EXPECT_EQ(qa.basis(), (std::vector<Word>{{}, {0}}));
  EXPECT_EQ(qa.product(1, 1), (QVector{1, 0}));
  EXPECT_TRUE(qa.is_associative());
}

TEST(Quotient, TiltedPlane) {
  const auto qa = quotient(tilted_plane());
  ASSERT_EQ(qa.dim(), 4U);
  EXPECT_EQ(qa.basis(), (std::vector<Word>{{}, {0}, {1}, {0, 1}}));
  // e1 * e0 = 2 - e0e1
  EXPECT_EQ(qa.product(2, 1), (QVector{2, 0, 0, -1}));
  EXPECT_EQ(qa.element_image(w({1, 0})), (QVector{2, 0, 0, -1}));
  EXPECT_TRUE(qa.parity_graded());

  EXPECT_EQ(qa.minimal_polynomial(qa.unit()), Polynomial({-1, 1}));
  // (e0e1)^2 = 2 e0e1 - 2
  EXPECT_EQ(qa.minimal_polynomial(unit_vector(4, 3)), Polynomial({2, -2, 1}));
}

TEST(Quotient, LambdaTwoRelationsCollapse) {
  // x^2 = y^2 = 0 and 4xy + yx = 3 give xyx = 3x from the left and 4xyx = 3x
  // from the right, so x lies in the ideal at degree 3 and then 1 = (4xy + yx)/3 does at degree 4.
  const auto gens = lambda_two();
  auto contains = [&](std::size_t degree, const TensorElement& t) {
    auto slice = ideal_slice(gens, degree);
    auto extended = slice;
    extended.push_back(t);
    return same_span(slice, extended);
  };
  EXPECT_FALSE(contains(2, w({0})));
  EXPECT_TRUE(contains(3, w({0})));
  EXPECT_TRUE(contains(4, TensorElement::scalar(1)));
  EXPECT_EQ(quotient(gens).dim(), 0U);
}

TEST(Quotient, GeneratorsVanishAndUnitMapsToUnit) {
  const auto gens = tilted_plane();
  const auto qa = quotient(gens);
  for (const auto& g : gens.generators) {
    EXPECT_TRUE(is_zero(qa.element_image(g)));
    EXPECT_TRUE(is_zero(qa.evaluate(g)));
  }
  EXPECT_EQ(qa.element_image(TensorElement::scalar(1)), qa.unit());
  EXPECT_TRUE(has_two_sided_unit(qa.table(), qa.unit_index()));
}

TEST(Quotient, ElementImageIsMultiplicative) {
  const auto qa = quotient(tilted_plane());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    TensorElement a;
    TensorElement b;
    for (std::uint16_t l = 0; l < 2; ++l) {
      a.add_term({l}, testgen::random_rational(rng, 5));
      b.add_term({l}, testgen::random_rational(rng, 5));
    }
    a.add_term({}, testgen::random_rational(rng, 5));
    EXPECT_EQ(qa.element_image(a * b), qa.multiply(qa.element_image(a), qa.element_image(b)));
    EXPECT_EQ(qa.element_image(a * b), qa.evaluate(a * b));
  }
}

TEST(Quotient, DegreeOverflow) {
  const auto qa = quotient(tilted_plane());
  Word long_word(qa.stable_degree() + 1, 0);
  EXPECT_EQ(code_of([&] { qa.element_image(TensorElement::word(long_word)); }), ErrorCode::DegreeOverflow);
  // evaluate() has no degree bound; e0^n is 1 or e0 by parity
  const QVector expected = long_word.size() % 2 == 0 ? qa.unit() : unit_vector(4, 1);
  EXPECT_EQ(qa.evaluate(TensorElement::word(long_word)), expected);
}

TEST(Quotient, EvenPart) {
  const auto even = even_part(quotient(tilted_plane()));
  ASSERT_EQ(even.dim(), 2U);
  EXPECT_EQ(even.basis(), (std::vector<Word>{{}, {0, 1}}));
  EXPECT_EQ(even.product(1, 1), (QVector{-2, 2}));
  EXPECT_EQ(even.element_image(w({0, 1})), (QVector{0, 1}));
  EXPECT_EQ(even.element_image(w({1, 0})), (QVector{2, -1}));
  EXPECT_EQ(code_of([&] { even.element_image(w({0})); }), ErrorCode::OutsideSubalgebra);

  const auto plane = even_part(quotient(euclidean_plane()));
  ASSERT_EQ(plane.dim(), 2U);
  EXPECT_EQ(plane.product(1, 1), (QVector{-1, 0}));
}

TEST(Quotient, EvenPartNeedsEvenGenerators) {
  const auto qa = quotient({2, {w({0}) - TensorElement::scalar(1), w({1, 1}) - TensorElement::scalar(2)}});
  EXPECT_EQ(qa.dim(), 2U);
  EXPECT_FALSE(qa.parity_graded());
  EXPECT_EQ(code_of([&] { even_part(qa); }), ErrorCode::NotGraded);
}

TEST(Quotient, InfiniteQuotientHitsResourceCap) {
  // commutative polynomial ring in two variables
  EXPECT_EQ(code_of([] { quotient({2, {w({0, 1}) - w({1, 0})}}); }), ErrorCode::ResourceCap);
  EngineConfig tight;
  tight.dimension_cap = 3;
  EXPECT_EQ(code_of([&] { quotient(euclidean_plane(), tight); }), ErrorCode::ResourceCap);
}

TEST(Quotient, RejectsMalformedGenerators) {
  EXPECT_EQ(code_of([] { quotient({2, {w({0, 1, 1})}}); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([] { quotient({2, {w({2})}}); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([] { quotient({2, {TensorElement()}}); }), ErrorCode::ShapeMismatch);
}

TEST(Quotient, OrderIndependentNormalForms) {
  auto gens = tilted_plane();
  const auto reference = quotient(gens);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.generators.begin(), gens.generators.end(), rng);
    const auto shuffled = quotient(gens);
    ASSERT_EQ(shuffled.basis(), reference.basis());
    for (std::uint16_t a = 0; a < 2; ++a)
      for (std::uint16_t b = 0; b < 2; ++b)
        EXPECT_EQ(shuffled.element_image(w({a, b})), reference.element_image(w({a, b})));
    EXPECT_EQ(shuffled.table(), reference.table());
  }
}

TEST(Quotient, Deterministic) {
  EXPECT_TRUE(quotient(euclidean_plane()) == quotient(euclidean_plane()));
}

TEST(Quotient, ZeroAlgebra) {
  const auto qa = quotient({1, {TensorElement::scalar(1)}});
  EXPECT_EQ(qa.dim(), 0U);
}

TEST(StructureTable, CorruptedTableIsNotAssociative) {
  auto table = quotient(euclidean_plane()).table();
  EXPECT_TRUE(is_associative(table));
  table[1][2][3] += 1;  // e0 * e1 perturbed
  EXPECT_FALSE(is_associative(table));
}

TEST(IdealSlice, DegreeTwoSliceOfLinearGenerator) {
  // slice of (e0 - 1) up to degree 2 has the 1 + 2 + 2 - 1 independent products
  const IdealGenerators gens{2, {w({0}) - TensorElement::scalar(1)}};
  const auto slice = ideal_slice(gens, 2);
  const std::vector<TensorElement> by_hand = {
      w({0}) - TensorElement::scalar(1),
      w({0, 0}) - w({0}),
      w({1, 0}) - w({1}),
      w({0, 1}) - w({1}),
  };
  EXPECT_EQ(slice.size(), 4U);
  EXPECT_TRUE(same_span(slice, by_hand));
  EXPECT_FALSE(same_span(slice, {by_hand[0]}));
  for (std::size_t i = 1; i < slice.size(); ++i)
    EXPECT_TRUE(DegLexLess{}(slice[i].leading_word(), slice[i - 1].leading_word()));
}
