#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffalg/exactmath.hpp"
#include "cliffalg/forms.hpp"
#include "cliffalg/tensor_engine.hpp"

namespace cliffalg {

enum class AlgebraKind { Matrix, Quaternion };

/// Degree-2 central simple algebra given by structure constants on a fixed
/// 4-element basis: (1, i, j, k) for quaternions, (E11, E12, E21, E22) for M_2.
class StructAlgebra {
 public:
  static constexpr std::size_t kDim = 4;

  /// (alpha, beta)_Q with i^2 = alpha, j^2 = beta, ij = -ji = k. ZeroParameter on zero input.
  static StructAlgebra quaternion(const Rational& alpha, const Rational& beta);
  static StructAlgebra matrix2();

  AlgebraKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return kDim; }
  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const StructureTable& table() const noexcept { return table_; }
  std::string describe() const;

  const QVector& one() const noexcept { return one_; }
  QVector basis(std::size_t p) const { return unit_vector(kDim, p); }
  QVector multiply(const QVector& x, const QVector& y) const;
  QMatrix left_mult(const QVector& x) const;
  QMatrix right_mult(const QVector& x) const;

  Rational trd(const QVector& x) const;
  Rational nrd(const QVector& x) const;
  bool is_invertible(const QVector& x) const { return sgn(nrd(x)) != 0; }
  /// Solves x*y = 1; NotInvertible when x is a zero divisor.
  QVector inverse(const QVector& x) const;

  /// Matrix of Int(w): x -> w x w^-1.
  QMatrix int_w(const QVector& w) const;

  /// For the matrix kind: element <-> 2x2 matrix.
  QMatrix to_matrix(const QVector& x) const;
  QVector from_matrix(const QMatrix& m) const;

  /// Sandwich map A (x) A^op -> End(A): index p*4 + q stands for e_p (x) e_q,
  /// acting as z -> e_p z e_q.
  QMatrix sandwich(const QVector& u) const;
  QVector sandwich_inverse(const QMatrix& m) const;
  /// Product in A (x) A^op: (x (x) y)(x' (x) y') = xx' (x) y'y.
  QVector tensor_op_multiply(const QVector& u, const QVector& v) const;
  QVector pure_tensor(const QVector& x, const QVector& y) const;

  friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
    return a.kind_ == b.kind_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  StructAlgebra(AlgebraKind kind, Rational alpha, Rational beta, std::vector<std::string> labels,
                StructureTable table);

  AlgebraKind kind_;
  Rational alpha_;
  Rational beta_;
  std::vector<std::string> labels_;
  StructureTable table_;
  QVector one_;
  std::vector<QMatrix> left_basis_;
  std::vector<QMatrix> right_basis_;
  std::shared_ptr<const QMatrix> sandwich_inverse_;  // 16 x 16, columns indexed by flattened End(A)
};

/// Antiautomorphism sigma of a degree-2 algebra together with its asymmetry a
/// and gamma(x) = sigma(x) a. The constructor checks every defining identity.
class Antiaut {
 public:
  /// InvalidAntiaut when an identity fails.
  Antiaut(StructAlgebra host, QMatrix sigma, QVector asymmetry);

  const StructAlgebra& host() const noexcept { return host_; }
  const QMatrix& sigma() const noexcept { return sigma_; }
  const QVector& asymmetry() const noexcept { return a_; }
  const QMatrix& gamma() const noexcept { return gamma_; }
  QVector apply(const QVector& x) const { return sigma_.apply(x); }
  QVector apply_inverse(const QVector& x) const { return sigma_inverse_.apply(x); }
  QVector apply_gamma(const QVector& x) const { return gamma_.apply(x); }
  bool is_involution() const { return sigma_ * sigma_ == QMatrix::identity(sigma_.rows()); }

 private:
  StructAlgebra host_;
  QMatrix sigma_;
  QMatrix sigma_inverse_;
  QVector a_;
  QMatrix gamma_;
};

/// x + yi + zj + tk -> x - yi - zj - tk, with asymmetry -1.
Antiaut canonical_involution(const StructAlgebra& quaternions);
/// Int(u) o rho with asymmetry -u rho(u)^-1. NotInvertible for singular u.
Antiaut antiaut_from_u(const StructAlgebra& quaternions, const QVector& u);
/// Adjoint of a 2x2 form on M_2: M -> B^-1 M^T B with asymmetry B^-1 B^T.
Antiaut adjoint_antiaut(const BilinearForm& f);
/// (Int w) o sigma o (Int w)^-1 with asymmetry w a w^-1.
Antiaut conjugate_antiaut(const Antiaut& sigma, const QVector& w);

/// x -> a gamma(x) a.
QMatrix gamma_tilde(const Antiaut& sigma);
/// 16x16 matrix of u -> Sand^-1(Sand(u) o g) for a linear map g of A.
QMatrix gamma2_from(const StructAlgebra& host, const QMatrix& g);
inline QMatrix gamma2_tilde(const Antiaut& sigma) { return gamma2_from(sigma.host(), gamma_tilde(sigma)); }
inline QMatrix gamma2_plain(const Antiaut& sigma) { return gamma2_from(sigma.host(), sigma.gamma()); }
/// Sand(u)(a).
QVector mu_sigma(const Antiaut& sigma, const QVector& u);

inline constexpr std::size_t kSkewScanBudget = 10'000;

/// Class of -Nrd(x) for the first invertible x of the skew scan after skipping
/// `skip` invertible candidates. NoInvertibleSkew when the budget runs out.
SquareClass disc_sigma(const Antiaut& sigma, std::size_t skip = 0);

}  // namespace cliffalg
