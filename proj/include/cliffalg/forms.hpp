#pragma once

#include <cstdint>

#include "cliffalg/exactmath.hpp"
#include "cliffalg/tensor_engine.hpp"

namespace cliffalg {

/// Non-degenerate bilinear form b(x, y) = x^T B y on Q^n.
class BilinearForm {
 public:
  /// Throws Degenerate when det(B) = 0 and ShapeMismatch for non-square B.
  explicit BilinearForm(QMatrix gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const QMatrix& gram() const noexcept { return gram_; }
  Rational operator()(const QVector& x, const QVector& y) const;
  bool is_symmetric() const { return gram_ == gram_.transpose(); }
  BilinearForm scaled(const Rational& c) const { return BilinearForm(c * gram_); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

 private:
  QMatrix gram_;
};

/// Matrix A of the asymmetry a_b, characterized by b(x, y) = b(y, A x):
/// A = B^-1 B^T.
QMatrix asymmetry(const BilinearForm& f);

/// Square class of (-1)^(n(n-1)/2) det B.
SquareClass discriminant(const BilinearForm& f);

struct FormFromAsymmetry {
  BilinearForm form;
  std::uint64_t seed;
  std::size_t attempts_used;
};

inline constexpr std::uint64_t kDefaultFormSeed = 0x5eed;

/// Solves B A = B^T and returns a non-degenerate solution, trying seeded
/// random combinations (coefficients in [-10, 10]) of a kernel basis.
/// NoNondegenerateSolution when none is found.
FormFromAsymmetry form_from_asymmetry(const QMatrix& a, std::size_t attempts = 64,
                                      std::uint64_t seed = kDefaultFormSeed);

/// Polarized relations a(e_i) e_i - b_ii and a(e_i) e_j + a(e_j) e_i - b_ij - b_ji (i < j).
IdealGenerators clifford_form_generators(const BilinearForm& f);

/// C(V, b) = T(V) / <a_b(v) v - b(v, v)>.
QuotientAlgebra clifford_form(const BilinearForm& f, const EngineConfig& cfg = {});
QuotientAlgebra even_clifford(const BilinearForm& f, const EngineConfig& cfg = {});

/// Clifford algebra of a symmetric form built directly: diagonalize by
/// congruence, multiply signed subsets of the orthogonal basis, then express
/// everything on the strictly increasing words e_i1 ... e_ik (deg-lex order).
struct ClassicalClifford {
  std::vector<Word> basis;
  StructureTable table;
};

/// ShapeMismatch unless f is symmetric.
ClassicalClifford classical_clifford(const BilinearForm& f);

}  // namespace cliffalg
