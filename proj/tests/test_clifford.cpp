#include <gtest/gtest.h>

#include "cliffalg/clifford.hpp"
#include "test_support.hpp"

using namespace cliffalg;  // NOLINT

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

BilinearForm form(std::vector<QVector> rows) { return BilinearForm(QMatrix::from_rows(rows)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Parse;
}

TensorElement letters(const QVector& coords) {
  TensorElement t;
  for (std::size_t p = 0; p < coords.size(); ++p) t.add_term({static_cast<std::uint16_t>(p)}, coords[p]);
  return t;
}

/// Words of length <= 2 over 4 letters as coordinates 0 .. 20.
QVector flat2(const TensorElement& t) {
  QVector v = zero_vector(21);
  for (const auto& [w, c] : t.terms()) {
    std::size_t idx = 0;
    if (w.size() == 1) idx = 1 + w[0];
    if (w.size() == 2) idx = 5 + 4 * w[0] + w[1];
    v[idx] += c;
  }
  return v;
}

/// Independent check that the unit lies in the degree-<=2 part of the ideal:
/// the span of the generators and of l*g, g*l for every letter l and linear g.
bool unit_in_degree_two_ideal(const IdealGenerators& gens) {
  std::vector<QVector> rows;
  for (const auto& g : gens.generators) {
    rows.push_back(flat2(g));
    if (g.degree() > 1) continue;
    for (std::uint16_t l = 0; l < 4; ++l) {
      rows.push_back(flat2(TensorElement::letter(l) * g));
      rows.push_back(flat2(g * TensorElement::letter(l)));
    }
  }
  auto with_unit = rows;
  with_unit.push_back(unit_vector(21, 0));
  return span_basis(rows, 21).size() == span_basis(with_unit, 21).size();
}

}  // namespace

TEST(QuadraticClass, Examples) {
  EXPECT_EQ(QuadraticAlgebraClass::of(0).kind, QuadraticAlgebraClass::Kind::DualNumbers);
  EXPECT_EQ(QuadraticAlgebraClass::of(q(9, 4)).kind, QuadraticAlgebraClass::Kind::Split);
  EXPECT_EQ(QuadraticAlgebraClass::of(20).to_string(), "field(5)");
}

TEST(ClassifyQuadratic, Examples) {
  const auto g = [](std::initializer_list<std::uint16_t> w) { return TensorElement::word(Word(w)); };
  // g^2 = 3g
  EXPECT_EQ(classify_quadratic(quotient({1, {g({0, 0}) - 3 * g({0})}})).kind, QuadraticAlgebraClass::Kind::Split);
  EXPECT_EQ(classify_quadratic(quotient({1, {g({0, 0})}})).kind, QuadraticAlgebraClass::Kind::DualNumbers);
  const auto field = quotient({1, {g({0, 0}) - 3 * g({0}) + TensorElement::scalar(1)}});
  EXPECT_EQ(classify_quadratic(field), (QuadraticAlgebraClass{QuadraticAlgebraClass::Kind::Field, SquareClass(1, 5)}));
  EXPECT_EQ(quadratic_generator_minpoly(field), Polynomial({1, -3, 1}));
  // the class does not depend on the generator: 2 + 3g has the same class
  EXPECT_EQ(field.minimal_polynomial({2, 3}).quadratic_discriminant(), 9 * 5);
  EXPECT_EQ(code_of([&] { classify_quadratic(quotient({2, {g({0}), g({1})}})); }), ErrorCode::WrongDimension);
}

TEST(BuildJ1, CanonicalInvolutionGivesPureQuaternions) {
  const auto a = StructAlgebra::quaternion(-1, -1);
  const auto j1 = build_J1(canonical_involution(a));
  EXPECT_TRUE(same_span(j1, {letters(a.basis(1)), letters(a.basis(2)), letters(a.basis(3))}));
}

TEST(BuildJ1, InnerTwistByOnePlusI) {
  for (long alpha : {-1L, 2L, 5L}) {
    const auto a = StructAlgebra::quaternion(alpha, 3);
    const auto j1 = build_J1(antiaut_from_u(a, {1, 1, 0, 0}));
    // i + alpha (1_A - eps), j, k
    const TensorElement first = letters(a.basis(1)) + Rational(alpha) * (letters(a.one()) - TensorElement::scalar(1));
    EXPECT_TRUE(same_span(j1, {first, letters(a.basis(2)), letters(a.basis(3))}));
  }
}

TEST(BuildJ1, OrthogonalInvolutionUsesSymmetricElements) {
  const Antiaut s = adjoint_antiaut(form({{1, 0}, {0, 1}}));
  const auto& m = s.host();
  // symmetric matrices: E11, E22, E12 + E21
  std::vector<TensorElement> expected = {letters(m.basis(0)) - TensorElement::scalar(q(1, 2)),
                                         letters(m.basis(3)) - TensorElement::scalar(q(1, 2)),
                                         letters(add(m.basis(1), m.basis(2)))};
  EXPECT_TRUE(same_span(build_J1(s), expected));
}

TEST(BuildJ2, CanonicalInvolution) {
  const Rational alpha = 2;
  const Rational beta = 3;
  const auto a = StructAlgebra::quaternion(alpha, beta);
  const Antiaut rho = canonical_involution(a);
  const auto j2 = build_J2(rho);
  EXPECT_EQ(j2.size(), 12U);
  // alpha beta 1 (x) 1 + k (x) k has mu = 0, so it is its own generator
  const TensorElement special = TensorElement::word({0, 0}, alpha * beta) + TensorElement::word({3, 3});
  auto extended = j2;
  extended.push_back(special);
  EXPECT_TRUE(same_span(j2, extended));
  for (const auto& g : j2) EXPECT_EQ(g.degree(), 2U);
}

TEST(CliffordAntiaut, CanonicalInvolutionIsDualNumbers) {
  for (auto [alpha, beta] : {std::pair{-1L, -1L}, std::pair{2L, 3L}}) {
    const auto a = StructAlgebra::quaternion(alpha, beta);
    const auto c = clifford_antiaut(canonical_involution(a));
    ASSERT_EQ(c.dim(), 2U);
    const QVector one_a = c.letter_images()[0];
    EXPECT_TRUE(is_zero(c.multiply(one_a, one_a)));
    EXPECT_FALSE(is_zero(one_a));
    EXPECT_EQ(classify_quadratic(c).kind, QuadraticAlgebraClass::Kind::DualNumbers);
  }
}

TEST(CliffordAntiaut, OrthogonalQuaternionInvolution) {
  for (long alpha : {-1L, 2L, 5L}) {
    const auto a = StructAlgebra::quaternion(alpha, 3);
    const auto c = clifford_antiaut(antiaut_from_u(a, {0, 1, 0, 0}));
    ASSERT_EQ(c.dim(), 2U);
    EXPECT_EQ(classify_quadratic(c), QuadraticAlgebraClass::of(alpha));
  }
}

TEST(CliffordAntiaut, GeneratorsVanish) {
  const auto a = StructAlgebra::quaternion(2, 3);
  for (const Antiaut& s : {canonical_involution(a), antiaut_from_u(a, {0, 1, 1, 0}),
                           adjoint_antiaut(form({{1, 2}, {2, -3}})), adjoint_antiaut(form({{0, 1}, {-1, 0}}))}) {
    const auto c = clifford_antiaut(s);
    for (const auto& g : build_J1(s)) EXPECT_TRUE(is_zero(c.element_image(g)));
    for (const auto& g : build_J2(s)) EXPECT_TRUE(is_zero(c.element_image(g)));
    EXPECT_TRUE(c.is_associative());
  }
}

TEST(CliffordAntiaut, NonInvolutiveQuaternionCollapses) {
  const Rational alpha = 2;
  const auto a = StructAlgebra::quaternion(alpha, 3);
  const Antiaut s = antiaut_from_u(a, {1, 1, 0, 0});
  // u = j (x) j - 210 (1 (x) i) + 297 (1 (x) 1): Sand(u) kills (1+i)^3 = 7 + 5i
  QVector u = zero_vector(16);
  u[2 * 4 + 2] = 1;
  u[0 * 4 + 1] = -210;
  u[0 * 4 + 0] = 297;
  EXPECT_TRUE(is_zero(a.sandwich(u).apply({7, 5, 0, 0})));
  EXPECT_EQ(gamma2_tilde(s).apply(u), u);
  EXPECT_EQ(mu_sigma(s, u), (QVector{60, -42, 0, 0}));
  // Under 1_A -> X, i -> alpha (1 - X), j, k -> 0 (forced by J1) this relation reads
  // 717 X^2 - 492 X + 42 = 0, incompatible with (alpha - 1) X^2 - 2 alpha X + alpha = 0.
  const auto gens = clifford_generators(s);
  EXPECT_TRUE(unit_in_degree_two_ideal(gens));
  EXPECT_EQ(clifford_antiaut(s).dim(), 0U);
}

TEST(CliffordAntiaut, NonInvolutiveSplitCollapses) {
  const Antiaut s = adjoint_antiaut(form({{0, 1}, {q(1, 2), 0}}));
  EXPECT_TRUE(unit_in_degree_two_ideal(clifford_generators(s)));
  EXPECT_EQ(clifford_antiaut(s).dim(), 0U);
}

TEST(CliffordAntiaut, SymplecticSplitIsDualNumbers) {
  const Antiaut s = adjoint_antiaut(form({{0, 1}, {-1, 0}}));
  EXPECT_FALSE(unit_in_degree_two_ideal(clifford_generators(s)));
  const auto c = clifford_antiaut(s);
  ASSERT_EQ(c.dim(), 2U);
  EXPECT_EQ(classify_quadratic(c).kind, QuadraticAlgebraClass::Kind::DualNumbers);
}

TEST(VerifyDeg2, InvolutionsMatch) {
  const auto h = StructAlgebra::quaternion(-1, -1);
  const auto rho = verify_deg2(canonical_involution(h));
  EXPECT_TRUE(rho.match);
  EXPECT_EQ(rho.predicted_value, 0);
  const auto orth = verify_deg2(antiaut_from_u(StructAlgebra::quaternion(2, 3), {0, 1, 0, 0}));
  EXPECT_TRUE(orth.match);
  EXPECT_EQ(orth.predicted, QuadraticAlgebraClass::of(2));
  // orthogonal sigma_b: class equals disc sigma
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    const BilinearForm f(testgen::random_nondegenerate(rng, 2, 4, true));
    const auto r = verify_deg2(adjoint_antiaut(f));
    EXPECT_TRUE(r.match);
    ASSERT_TRUE(r.computed.has_value());
    EXPECT_EQ(r.computed->cls, discriminant(f));
  }
}

TEST(VerifyDeg2, NonInvolutionsHaveNoQuadraticQuotient) {
  const auto r = verify_deg2(adjoint_antiaut(form({{0, 1}, {q(1, 2), 0}})));
  EXPECT_EQ(r.disc, SquareClass(1, 2));
  EXPECT_EQ(r.predicted_value, 9);  // Nrd(a + 1) = 9/2 times the class representative 2
  EXPECT_EQ(r.predicted.kind, QuadraticAlgebraClass::Kind::Split);
  EXPECT_EQ(r.dim, 0U);
  EXPECT_FALSE(r.computed.has_value());
  EXPECT_FALSE(r.match);

  const auto t = verify_deg2(antiaut_from_u(StructAlgebra::quaternion(2, 3), {1, 1, 0, 0}));
  EXPECT_EQ(t.disc, SquareClass(1, 1));
  EXPECT_EQ(t.predicted_value, 8);  // Nrd(4 + 2i) = 8, disc represented by 1
  EXPECT_EQ(t.predicted, QuadraticAlgebraClass::of(2));
  EXPECT_FALSE(t.match);
}

TEST(Invariance, ConjugateAntiautomorphisms) {
  const auto h = StructAlgebra::quaternion(-1, -1);
  const Antiaut s = antiaut_from_u(h, {1, 1, 0, 0});
  EXPECT_TRUE(invariance_check(s, h.one()));
  EXPECT_TRUE(invariance_check(s, h.basis(2)));
  EXPECT_TRUE(invariance_check(canonical_involution(h), {1, 2, 0, -1}));
  const Antiaut orth = adjoint_antiaut(form({{2, 1}, {1, -1}}));
  EXPECT_TRUE(invariance_check(orth, {1, 2, 3, -1}));
}

TEST(PhiMap, ColumnsAreElementaryTimesGram) {
  const BilinearForm f = form({{0, 1}, {q(1, 2), 0}});
  const QMatrix phi = phi_map(f);
  // phi(e_0 (x) e_1) = E_01 B: x -> e_0 b(e_1, x)
  EXPECT_EQ(phi.column(1), (QVector{q(1, 2), 0, 0, 0}));
  EXPECT_NE(det(phi), 0);
}

TEST(SplitCheck, OrthogonalSymplecticAndCollapsing) {
  const auto id = split_check(form({{1, 0}, {0, 1}}));
  EXPECT_TRUE(id.ok());
  ASSERT_TRUE(id.antiaut_class.has_value());
  EXPECT_EQ(id.antiaut_class->cls, SquareClass(-1, 1));
  EXPECT_EQ(id.even_half_class, id.antiaut_class);
  EXPECT_TRUE(split_check(form({{0, 1}, {-1, 0}})).ok());
  const auto lambda2 = split_check(form({{0, 1}, {q(1, 2), 0}}));
  EXPECT_TRUE(lambda2.slices_match);
  EXPECT_TRUE(lambda2.lemmas_hold);
  EXPECT_EQ(lambda2.antiaut_dim, 0U);
  EXPECT_EQ(lambda2.even_half_dim, 0U);
  const auto second = split_check(form({{0, 1}, {-1, q(-1, 2)}}));
  EXPECT_TRUE(second.ok());
  EXPECT_EQ(second.antiaut_dim, 1U);
}

TEST(SplitCheck, RandomForms) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const BilinearForm f(testgen::random_nondegenerate(rng, 2, 4, trial % 2 == 0));
    const auto r = split_check(f);
    EXPECT_TRUE(r.slices_match);
    EXPECT_TRUE(r.lemmas_hold);
    EXPECT_EQ(r.antiaut_dim, r.even_half_dim);
  }
}
