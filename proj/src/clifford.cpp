#include "cliffalg/clifford.hpp"

namespace cliffalg {

namespace {

constexpr std::size_t kD = StructAlgebra::kDim;

TensorElement linear_element(const QVector& coords) {
  TensorElement t;
  for (std::size_t p = 0; p < coords.size(); ++p) t.add_term({static_cast<std::uint16_t>(p)}, coords[p]);
  return t;
}

std::optional<QuadraticAlgebraClass> try_classify(const QuotientAlgebra& q) {
  if (q.dim() != 2) return std::nullopt;
  return classify_quadratic(q);
}

}  // namespace

QuadraticAlgebraClass QuadraticAlgebraClass::of(const Rational& c) {
  if (sgn(c) == 0) return {Kind::DualNumbers, SquareClass::zero()};
  const SquareClass cls = square_class(c);
  return {cls.is_trivial() ? Kind::Split : Kind::Field, cls};
}

std::string QuadraticAlgebraClass::kind_name() const {
  switch (kind) {
    case Kind::DualNumbers:
      return "dual_numbers";
    case Kind::Split:
      return "split";
    case Kind::Field:
      return "field";
  }
  return "?";
}

std::string QuadraticAlgebraClass::to_string() const {
  if (kind == Kind::Field) return "field(" + cls.to_string() + ")";
  return kind_name();
}

std::vector<TensorElement> build_J1(const Antiaut& sigma) {
  const StructAlgebra& host = sigma.host();
  std::vector<TensorElement> out;
  for (const auto& s : kernel(sigma.gamma() - QMatrix::identity(kD))) {
    out.push_back(linear_element(s) - TensorElement::scalar(host.trd(s) / 2));
  }
  return out;
}

std::vector<TensorElement> build_J2(const Antiaut& sigma) {
  std::vector<TensorElement> out;
  for (const auto& u : kernel(gamma2_tilde(sigma) - QMatrix::identity(kD * kD))) {
    TensorElement t;
    for (std::uint16_t p = 0; p < kD; ++p)
      for (std::uint16_t q = 0; q < kD; ++q) t.add_term({p, q}, u[p * kD + q]);
    out.push_back(t - Rational(1, 2) * linear_element(mu_sigma(sigma, u)));
  }
  return out;
}

IdealGenerators clifford_generators(const Antiaut& sigma) {
  IdealGenerators gens{kD, build_J1(sigma)};
  for (auto& g : build_J2(sigma)) gens.generators.push_back(std::move(g));
  return gens;
}

QuotientAlgebra clifford_antiaut(const Antiaut& sigma, const EngineConfig& cfg) {
  QuotientAlgebra q = quotient(clifford_generators(sigma), cfg);
  if (q.dim() > 2) {
    throw Error(ErrorCode::WrongDimension, "C(A, sigma) has dimension " + std::to_string(q.dim()) + " > 2");
  }
  return q;
}

Polynomial quadratic_generator_minpoly(const QuotientAlgebra& q) {
  if (q.dim() != 2) throw Error(ErrorCode::WrongDimension, "expected a 2-dimensional algebra");
  return q.minimal_polynomial(unit_vector(2, q.unit_index() == 0 ? 1 : 0));
}

QuadraticAlgebraClass classify_quadratic(const QuotientAlgebra& q) {
  if (q.dim() != 2) {
    throw Error(ErrorCode::WrongDimension, "classification needs dimension 2, got " + std::to_string(q.dim()));
  }
  if (!q.is_commutative()) throw Error(ErrorCode::NotCommutative, "quadratic algebra is not commutative");
  return QuadraticAlgebraClass::of(quadratic_generator_minpoly(q).quadratic_discriminant());
}

CliffordReport verify_deg2(const Antiaut& sigma, const EngineConfig& cfg) {
  const StructAlgebra& host = sigma.host();
  CliffordReport r;
  r.input = host.describe();
  r.asymmetry = sigma.asymmetry();
  r.disc = disc_sigma(sigma);
  const QuotientAlgebra c = clifford_antiaut(sigma, cfg);
  r.dim = c.dim();
  r.basis_labels = c.basis_labels(host.labels());
  r.table = c.table();
  r.computed = try_classify(c);
  if (c.dim() > 0 && !c.letter_images().empty()) r.unit_letter_minpoly = c.minimal_polynomial(c.letter_images()[0]);
  r.predicted_value = host.nrd(add(sigma.asymmetry(), host.one())) * Rational(r.disc.representative());
  r.predicted = QuadraticAlgebraClass::of(r.predicted_value);
  r.match = r.computed.has_value() && *r.computed == r.predicted;
  return r;
}

bool invariance_check(const Antiaut& sigma, const QVector& w, const EngineConfig& cfg) {
  const QuotientAlgebra lhs = clifford_antiaut(sigma, cfg);
  const QuotientAlgebra rhs = clifford_antiaut(conjugate_antiaut(sigma, w), cfg);
  if (lhs.dim() != rhs.dim()) return false;
  return try_classify(lhs) == try_classify(rhs);
}

QMatrix phi_map(const BilinearForm& f) {
  const std::size_t n = f.dim();
  std::vector<QVector> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix e(n, n);
      e(i, j) = 1;
      const QMatrix m = e * f.gram();
      QVector flat;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) flat.push_back(m(r, c));
      cols.push_back(flat);
    }
  return QMatrix::from_columns(cols);
}

IdealGenerators even_form_generators(const BilinearForm& f) {
  const std::size_t n = f.dim();
  const QMatrix a = asymmetry(f);
  const QMatrix& b = f.gram();
  auto letter = [n](std::size_t i, std::size_t j) { return static_cast<std::uint16_t>(i * n + j); };
  // a(e_s) (x) e_t as a linear element
  auto a_then = [&](std::size_t s, std::size_t t) {
    TensorElement x;
    for (std::size_t k = 0; k < n; ++k) x.add_term({letter(k, t)}, a(k, s));
    return x;
  };
  // (e_v (x) a(e_s)) (e_r (x) e_t)
  auto quartic = [&](std::size_t v, std::size_t s, std::size_t r, std::size_t t) {
    TensorElement x;
    for (std::size_t k = 0; k < n; ++k) x.add_term({letter(v, k), letter(r, t)}, a(k, s));
    return x;
  };
  IdealGenerators gens{n * n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    gens.generators.push_back(a_then(i, i) - TensorElement::scalar(b(i, i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      gens.generators.push_back(a_then(i, j) + a_then(j, i) - TensorElement::scalar(b(i, j) + b(j, i)));
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t i = 0; i < n; ++i) {
        gens.generators.push_back(quartic(v, i, i, t) - TensorElement::letter(letter(v, t), b(i, i)));
        for (std::size_t j = i + 1; j < n; ++j) {
          gens.generators.push_back(quartic(v, i, j, t) + quartic(v, j, i, t) -
                                    TensorElement::letter(letter(v, t), b(i, j) + b(j, i)));
        }
      }
  return gens;
}

SplitCheckResult split_check(const BilinearForm& f, const EngineConfig& cfg) {
  if (f.dim() != 2) throw Error(ErrorCode::WrongDimension, "split check is implemented for n = 2");
  const std::size_t n = f.dim();
  const Antiaut sigma = adjoint_antiaut(f);
  const StructAlgebra& host = sigma.host();
  const QMatrix phi = phi_map(f);
  const QMatrix a = asymmetry(f);
  const QMatrix a_inv = inverse(a);
  SplitCheckResult r;

  const QuotientAlgebra lhs = clifford_antiaut(sigma, cfg);
  const BilinearForm half = f.scaled(Rational(1, 2));
  const QuotientAlgebra rhs = even_clifford(half, cfg);
  r.antiaut_dim = lhs.dim();
  r.even_half_dim = rhs.dim();
  r.antiaut_class = try_classify(lhs);
  r.even_half_class = try_classify(rhs);
  r.even_full_class = try_classify(even_clifford(f, cfg));
  r.classes_match = lhs.dim() == rhs.dim() && r.antiaut_class == r.even_half_class;

  std::vector<TensorElement> images;
  for (std::size_t l = 0; l < n * n; ++l) images.push_back(linear_element(phi.column(l)));
  std::vector<TensorElement> pulled;
  for (const auto& t : ideal_slice(even_form_generators(half), 2)) pulled.push_back(t.substitute(images));
  r.slices_match = same_span(pulled, ideal_slice(clifford_generators(sigma), 2));

  auto phi_of = [&](const QVector& x, const QVector& y) { return phi.apply(kronecker(QMatrix::from_columns({x}), QMatrix::from_columns({y})).column(0)); };
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  const QMatrix g2 = gamma2_tilde(sigma);
  bool lemmas = true;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      lemmas = lemmas && sigma.apply(phi_of(e(v), e(w))) == phi_of(a.column(w), e(v));
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const QVector lhs2 = g2.apply(host.pure_tensor(phi_of(e(v), e(w)), phi_of(e(s), e(t))));
          const QVector rhs2 = host.pure_tensor(phi_of(e(v), a.column(s)), phi_of(a_inv.column(w), e(t)));
          lemmas = lemmas && lhs2 == rhs2;
        }
    }
  r.lemmas_hold = lemmas;
  return r;
}

}  // namespace cliffalg
