#include <gtest/gtest.h>

#include "cliffalg/exactmath.hpp"
#include "test_support.hpp"

using namespace cliffalg;  // NOLINT

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Rational, ParsesExactLiterals) {
  EXPECT_EQ(parse_rational("3/2"), q(3, 2));
  EXPECT_EQ(parse_rational("-12"), q(-12));
  EXPECT_EQ(parse_rational(" 6/4 "), q(3, 2));
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(SquareClass, Examples) {
  EXPECT_EQ(square_class(q(9, 4)), SquareClass(1, 1));
  EXPECT_EQ(square_class(q(1, 2)), SquareClass(1, 2));
  EXPECT_EQ(square_class(q(-12)), SquareClass(-1, 3));
  EXPECT_TRUE(square_class(q(0)).is_zero());
  EXPECT_TRUE(square_class(q(49, 25)).is_trivial());
}

TEST(SquareClass, InvariantUnderSquares) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational x = testgen::random_rational(rng, 60, true);
    const Rational r = testgen::random_rational(rng, 60, true);
    EXPECT_EQ(square_class(x * r * r), square_class(x)) << x << " " << r;
  }
}

TEST(SquareClass, ProductMatchesClassOfProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational x = testgen::random_rational(rng, 40, true);
    const Rational y = testgen::random_rational(rng, 40, true);
    EXPECT_EQ(square_class(x) * square_class(y), square_class(x * y));
  }
  EXPECT_TRUE((SquareClass::zero() * SquareClass(1, 5)).is_zero());
}

TEST(SquareClass, FactorizationLimit) {
  // 101 * 103 has no factor <= 10 and exceeds 10^2, so it cannot be certified.
  EXPECT_THROW(squarefree_part(Integer(101 * 103), 10), Error);
  try {
    squarefree_part(Integer(101 * 103), 10);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FactorizationLimit);
  }
  // A cofactor below bound^2 is certified prime; a perfect-square cofactor is certified too.
  EXPECT_EQ(squarefree_part(Integer(101), 11), Integer(101));
  EXPECT_EQ(squarefree_part(Integer(3 * 101 * 101), 10), Integer(3));
  EXPECT_EQ(squarefree_part(Integer(2 * 2 * 2 * 9 * 5)), Integer(10));
}

TEST(Matrix, DeterminantKernelInverse) {
  EXPECT_EQ(det(QMatrix::identity(2)), 1);

  const auto k = kernel(QMatrix::from_rows({{1, 1}}));
  ASSERT_EQ(k.size(), 1U);
  EXPECT_TRUE(same_span(k, {QVector{1, -1}}, 2));

  const QMatrix m = QMatrix::from_rows({{0, 1}, {q(1, 2), 0}});
  const QMatrix inv = inverse(m);
  EXPECT_EQ(inv, QMatrix::from_rows({{0, 2}, {1, 0}}));
  EXPECT_EQ(m * inv, QMatrix::identity(2));
  EXPECT_EQ(inv * m, QMatrix::identity(2));

  try {
    inverse(QMatrix::from_rows({{1, 2}, {2, 4}}));
    FAIL() << "expected Singular";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
}

TEST(Matrix, RrefHasLeadingOnes) {
  const QMatrix m = QMatrix::from_rows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  const RrefResult r = rref(m);
  ASSERT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced(0, 0), 1);
  EXPECT_EQ(r.reduced(1, 1), 1);
  EXPECT_EQ(r.reduced(0, 1), 0);
  EXPECT_TRUE(r.reduced.row(2) == (QVector{0, 0, 0}));
}

TEST(Matrix, SolveConsistentAndInconsistent) {
  const QMatrix m = QMatrix::from_rows({{1, 1}, {1, -1}});
  auto x = solve(m, {3, 1});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (QVector{2, 1}));
  EXPECT_FALSE(solve(QMatrix::from_rows({{1, 1}, {2, 2}}), {1, 3}).has_value());
}

TEST(Matrix, SingularIffDetZeroIffKernel) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    QMatrix m = testgen::random_matrix(rng, n, n, 4);
    if (trial % 3 == 0 && n > 1) {
      // force a dependency: last row = sum of the first two (or a copy of the first)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + (n > 2 ? m(1, j) : Rational(0));
    }
    const bool det_zero = sgn(det(m)) == 0;
    const bool has_kernel = !kernel(m).empty();
    bool singular = false;
    try {
      const QMatrix inv = inverse(m);
      EXPECT_EQ(m * inv, QMatrix::identity(n));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Singular);
      singular = true;
    }
    EXPECT_EQ(det_zero, has_kernel);
    EXPECT_EQ(det_zero, singular);
    for (const auto& v : kernel(m)) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(QMatrix::identity(2)), Polynomial({-1, 1}));
  EXPECT_EQ(minimal_polynomial(QMatrix::from_rows({{0, -1}, {1, 3}})), Polynomial({1, -3, 1}));

  const QMatrix d = QMatrix::diagonal({2, q(1, 2)});
  const Polynomial expected = Polynomial({-2, 1}) * Polynomial({q(-1, 2), 1});
  const Polynomial p = minimal_polynomial(d);
  EXPECT_EQ(p, expected);
  EXPECT_TRUE(p.evaluate(d).is_zero());
  EXPECT_EQ(p.to_string(), "X^2 - 5/2*X + 1");
}

TEST(MinimalPolynomial, AnnihilatesAndDegreeBounded) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    QMatrix m = testgen::random_matrix(rng, n, n, 3);
    if (trial % 4 == 0) m = QMatrix::identity(n) + m * QMatrix(n, n);  // scalar matrices
    const Polynomial p = minimal_polynomial(m);
    EXPECT_TRUE(p.evaluate(m).is_zero());
    EXPECT_LE(p.degree(), n);
    EXPECT_EQ(p.coefficients().back(), 1);
    // minimality: I, M, ..., M^(d-1) are linearly independent
    std::vector<QVector> powers;
    QMatrix pw = QMatrix::identity(n);
    for (std::size_t k = 0; k < p.degree(); ++k) {
      QVector flat;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(pw(i, j));
      powers.push_back(flat);
      pw = pw * m;
    }
    EXPECT_EQ(span_basis(powers, n * n).size(), p.degree());
  }
}

TEST(Polynomial, QuadraticDiscriminant) {
  EXPECT_EQ(Polynomial({1, -3, 1}).quadratic_discriminant(), 5);
  EXPECT_EQ(Polynomial({0, -3, 1}).quadratic_discriminant(), 9);
  EXPECT_THROW(Polynomial({1, 1}).quadratic_discriminant(), Error);
}
