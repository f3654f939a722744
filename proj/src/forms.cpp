#include "cliffalg/forms.hpp"

#include <random>

namespace cliffalg {

BilinearForm::BilinearForm(QMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw Error(ErrorCode::ShapeMismatch, "form matrix must be square");
  if (sgn(det(gram_)) == 0) throw Error(ErrorCode::Degenerate, "bilinear form is degenerate");
}

Rational BilinearForm::operator()(const QVector& x, const QVector& y) const { return dot(x, gram_.apply(y)); }

QMatrix asymmetry(const BilinearForm& f) { return inverse(f.gram()) * f.gram().transpose(); }

SquareClass discriminant(const BilinearForm& f) {
  const std::size_t n = f.dim();
  const Rational sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  return square_class(sign * det(f.gram()));
}

FormFromAsymmetry form_from_asymmetry(const QMatrix& a, std::size_t attempts, std::uint64_t seed) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "asymmetry must be square");
  const std::size_t n = a.rows();
  // Unknowns B_rc at index r*n + c; equation (B A - B^T)_ij = 0.
  QMatrix system(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eq = i * n + j;
      for (std::size_t k = 0; k < n; ++k) system(eq, i * n + k) += a(k, j);
      system(eq, j * n + i) -= 1;
    }
  const auto basis = kernel(system);
  if (basis.empty()) {
    throw Error(ErrorCode::NoNondegenerateSolution, "B A = B^T has only the zero solution");
  }
  auto to_matrix = [n](const QVector& v) {
    QMatrix b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) b(r, c) = v[r * n + c];
    return b;
  };
  // A one-dimensional solution space needs no randomness.
  if (basis.size() == 1) {
    const QMatrix b = to_matrix(basis[0]);
    if (sgn(det(b)) != 0) return {BilinearForm(b), seed, 1};
    throw Error(ErrorCode::NoNondegenerateSolution, "every solution of B A = B^T is degenerate");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-10, 10);
  for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
    QVector v(n * n);
    for (const auto& k : basis) v = add(v, scale(Rational(coeff(rng)), k));
    const QMatrix b = to_matrix(v);
    if (sgn(det(b)) != 0) return {BilinearForm(b), seed, attempt};
  }
  throw Error(ErrorCode::NoNondegenerateSolution,
              "no non-degenerate solution of B A = B^T after " + std::to_string(attempts) + " attempts");
}

IdealGenerators clifford_form_generators(const BilinearForm& f) {
  const std::size_t n = f.dim();
  const QMatrix a = asymmetry(f);
  const QMatrix& b = f.gram();
  auto a_times = [&](std::size_t i, std::size_t j) {
    // a(e_i) (x) e_j = sum_k A_ki e_k e_j
    TensorElement t;
    for (std::size_t k = 0; k < n; ++k)
      t.add_term({static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(j)}, a(k, i));
    return t;
  };
  IdealGenerators gens{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    gens.generators.push_back(a_times(i, i) - TensorElement::scalar(b(i, i)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      gens.generators.push_back(a_times(i, j) + a_times(j, i) - TensorElement::scalar(b(i, j) + b(j, i)));
    }
  return gens;
}

QuotientAlgebra clifford_form(const BilinearForm& f, const EngineConfig& cfg) {
  return quotient(clifford_form_generators(f), cfg);
}

QuotientAlgebra even_clifford(const BilinearForm& f, const EngineConfig& cfg) {
  return even_part(clifford_form(f, cfg));
}

}  // namespace cliffalg
