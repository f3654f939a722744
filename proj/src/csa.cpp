#include "cliffalg/csa.hpp"

#include <algorithm>
#include <cstdlib>

namespace cliffalg {

namespace {

constexpr std::size_t kD = StructAlgebra::kDim;

QMatrix matrix_of(const std::function<QVector(const QVector&)>& f) {
  std::vector<QVector> cols;
  for (std::size_t p = 0; p < kD; ++p) cols.push_back(f(unit_vector(kD, p)));
  return QMatrix::from_columns(cols);
}

QVector flatten(const QMatrix& m) {
  QVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidAntiaut, what); }

}  // namespace

StructAlgebra::StructAlgebra(AlgebraKind kind, Rational alpha, Rational beta, std::vector<std::string> labels,
                             StructureTable table)
    : kind_(kind), alpha_(std::move(alpha)), beta_(std::move(beta)), labels_(std::move(labels)),
      table_(std::move(table)) {
  one_ = kind_ == AlgebraKind::Quaternion ? unit_vector(kD, 0) : QVector{1, 0, 0, 1};
  for (std::size_t p = 0; p < kD; ++p) {
    left_basis_.push_back(left_mult(unit_vector(kD, p)));
    right_basis_.push_back(right_mult(unit_vector(kD, p)));
  }
  if (!has_two_sided_unit(table_, 0) && kind_ == AlgebraKind::Quaternion) {
    throw Error(ErrorCode::ShapeMismatch, "quaternion table lost its unit");
  }
  if (!is_associative(table_)) throw Error(ErrorCode::ShapeMismatch, "structure constants are not associative");
  std::vector<QVector> cols;
  for (std::size_t p = 0; p < kD; ++p)
    for (std::size_t q = 0; q < kD; ++q) cols.push_back(flatten(left_basis_[p] * right_basis_[q]));
  sandwich_inverse_ = std::make_shared<const QMatrix>(cliffalg::inverse(QMatrix::from_columns(cols)));
}

StructAlgebra StructAlgebra::quaternion(const Rational& alpha, const Rational& beta) {
  if (sgn(alpha) == 0 || sgn(beta) == 0) throw Error(ErrorCode::ZeroParameter, "quaternion parameters must be nonzero");
  StructureTable t(kD, std::vector<QVector>(kD, zero_vector(kD)));
  auto set = [&](std::size_t p, std::size_t q, std::size_t r, const Rational& c) { t[p][q][r] = c; };
  for (std::size_t p = 0; p < kD; ++p) {
    set(0, p, p, 1);
    set(p, 0, p, 1);
  }
  set(1, 1, 0, alpha);
  set(2, 2, 0, beta);
  set(3, 3, 0, -alpha * beta);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(1, 3, 2, alpha);
  set(3, 1, 2, -alpha);
  set(2, 3, 1, -beta);
  set(3, 2, 1, beta);
  return StructAlgebra(AlgebraKind::Quaternion, alpha, beta, {"1_A", "i", "j", "k"}, std::move(t));
}

StructAlgebra StructAlgebra::matrix2() {
  StructureTable t(kD, std::vector<QVector>(kD, zero_vector(kD)));
  // E_ab E_cd = [b == c] E_ad with E_ab at index 2a + b
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) t[2 * a + b][2 * b + d][2 * a + d] = 1;
  return StructAlgebra(AlgebraKind::Matrix, 0, 0, {"E11", "E12", "E21", "E22"}, std::move(t));
}

std::string StructAlgebra::describe() const {
  if (kind_ == AlgebraKind::Matrix) return "M_2(Q)";
  return "(" + cliffalg::to_string(alpha_) + ", " + cliffalg::to_string(beta_) + ")_Q";
}

QVector StructAlgebra::multiply(const QVector& x, const QVector& y) const {
  QVector out = zero_vector(kD);
  for (std::size_t p = 0; p < kD; ++p) {
    if (sgn(x[p]) == 0) continue;
    for (std::size_t q = 0; q < kD; ++q) {
      if (sgn(y[q]) == 0) continue;
      const Rational c = x[p] * y[q];
      for (std::size_t r = 0; r < kD; ++r) out[r] += c * table_[p][q][r];
    }
  }
  return out;
}

QMatrix StructAlgebra::left_mult(const QVector& x) const {
  return matrix_of([&](const QVector& z) { return multiply(x, z); });
}

QMatrix StructAlgebra::right_mult(const QVector& x) const {
  return matrix_of([&](const QVector& z) { return multiply(z, x); });
}

Rational StructAlgebra::trd(const QVector& x) const {
  if (kind_ == AlgebraKind::Matrix) return x[0] + x[3];
  return 2 * x[0];
}

Rational StructAlgebra::nrd(const QVector& x) const {
  if (kind_ == AlgebraKind::Matrix) return x[0] * x[3] - x[1] * x[2];
  return x[0] * x[0] - alpha_ * x[1] * x[1] - beta_ * x[2] * x[2] + alpha_ * beta_ * x[3] * x[3];
}

QVector StructAlgebra::inverse(const QVector& x) const {
  auto y = solve(left_mult(x), one_);
  if (!y) throw Error(ErrorCode::NotInvertible, "element is not invertible");
  return *y;
}

QMatrix StructAlgebra::int_w(const QVector& w) const { return left_mult(w) * right_mult(inverse(w)); }

QMatrix StructAlgebra::to_matrix(const QVector& x) const {
  if (kind_ != AlgebraKind::Matrix) throw Error(ErrorCode::ShapeMismatch, "not a matrix algebra");
  return QMatrix::from_rows({{x[0], x[1]}, {x[2], x[3]}});
}

QVector StructAlgebra::from_matrix(const QMatrix& m) const {
  if (kind_ != AlgebraKind::Matrix) throw Error(ErrorCode::ShapeMismatch, "not a matrix algebra");
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::ShapeMismatch, "expected a 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

QMatrix StructAlgebra::sandwich(const QVector& u) const {
  if (u.size() != kD * kD) throw Error(ErrorCode::ShapeMismatch, "sandwich expects a vector of A (x) A");
  QMatrix out(kD, kD);
  for (std::size_t p = 0; p < kD; ++p)
    for (std::size_t q = 0; q < kD; ++q)
      if (sgn(u[p * kD + q]) != 0) out = out + u[p * kD + q] * (left_basis_[p] * right_basis_[q]);
  return out;
}

QVector StructAlgebra::sandwich_inverse(const QMatrix& m) const {
  if (m.rows() != kD || m.cols() != kD) throw Error(ErrorCode::ShapeMismatch, "expected an endomorphism of A");
  return sandwich_inverse_->apply(flatten(m));
}

QVector StructAlgebra::tensor_op_multiply(const QVector& u, const QVector& v) const {
  QVector out = zero_vector(kD * kD);
  for (std::size_t p = 0; p < kD; ++p)
    for (std::size_t q = 0; q < kD; ++q) {
      if (sgn(u[p * kD + q]) == 0) continue;
      for (std::size_t r = 0; r < kD; ++r)
        for (std::size_t s = 0; s < kD; ++s) {
          if (sgn(v[r * kD + s]) == 0) continue;
          const Rational c = u[p * kD + q] * v[r * kD + s];
          out = add(out, scale(c, pure_tensor(table_[p][r], table_[s][q])));
        }
    }
  return out;
}

QVector StructAlgebra::pure_tensor(const QVector& x, const QVector& y) const {
  QVector out(kD * kD);
  for (std::size_t p = 0; p < kD; ++p)
    for (std::size_t q = 0; q < kD; ++q) out[p * kD + q] = x[p] * y[q];
  return out;
}

Antiaut::Antiaut(StructAlgebra host, QMatrix sigma, QVector asymmetry)
    : host_(std::move(host)), sigma_(std::move(sigma)), a_(std::move(asymmetry)) {
  if (sigma_.rows() != kD || sigma_.cols() != kD || a_.size() != kD) {
    throw Error(ErrorCode::ShapeMismatch, "antiautomorphism data must be 4-dimensional");
  }
  const QVector& one = host_.one();
  if (apply(one) != one) invalid("sigma(1) != 1");
  if (sgn(det(sigma_)) == 0) invalid("sigma is not bijective");
  sigma_inverse_ = inverse(sigma_);
  for (std::size_t p = 0; p < kD; ++p)
    for (std::size_t q = 0; q < kD; ++q) {
      const QVector ep = host_.basis(p);
      const QVector eq = host_.basis(q);
      if (apply(host_.multiply(ep, eq)) != host_.multiply(apply(eq), apply(ep))) {
        invalid("sigma(xy) != sigma(y)sigma(x)");
      }
    }
  if (!host_.is_invertible(a_)) invalid("asymmetry is not invertible");
  const QVector a_inv = host_.inverse(a_);
  if (apply(a_) != a_inv) invalid("sigma(a) != a^-1");
  if (sigma_ * sigma_ != host_.int_w(a_)) invalid("sigma^2 != Int(a)");
  gamma_ = host_.right_mult(a_) * sigma_;
  if (gamma_ * gamma_ != QMatrix::identity(kD)) invalid("gamma is not an involution");
  if (apply_gamma(one) != a_) invalid("gamma(1) != a");
}

Antiaut canonical_involution(const StructAlgebra& quaternions) {
  if (quaternions.kind() != AlgebraKind::Quaternion) {
    throw Error(ErrorCode::ShapeMismatch, "canonical involution needs a quaternion algebra");
  }
  return Antiaut(quaternions, QMatrix::diagonal({1, -1, -1, -1}), scale(-1, quaternions.one()));
}

Antiaut antiaut_from_u(const StructAlgebra& quaternions, const QVector& u) {
  const Antiaut rho = canonical_involution(quaternions);
  if (u.size() != kD) throw Error(ErrorCode::ShapeMismatch, "u must have 4 coordinates");
  if (!quaternions.is_invertible(u)) throw Error(ErrorCode::NotInvertible, "u is not invertible");
  const QMatrix s = quaternions.int_w(u) * rho.sigma();
  const QVector a = scale(-1, quaternions.multiply(u, quaternions.inverse(rho.apply(u))));
  return Antiaut(quaternions, s, a);
}

Antiaut adjoint_antiaut(const BilinearForm& f) {
  if (f.dim() != 2) throw Error(ErrorCode::WrongDimension, "adjoint antiautomorphism needs a 2x2 form");
  const StructAlgebra m2 = StructAlgebra::matrix2();
  const QMatrix b = f.gram();
  const QMatrix b_inv = inverse(b);
  const QMatrix s = matrix_of([&](const QVector& x) { return m2.from_matrix(b_inv * m2.to_matrix(x).transpose() * b); });
  return Antiaut(m2, s, m2.from_matrix(asymmetry(f)));
}

Antiaut conjugate_antiaut(const Antiaut& sigma, const QVector& w) {
  const StructAlgebra& host = sigma.host();
  if (!host.is_invertible(w)) throw Error(ErrorCode::NotInvertible, "w is not invertible");
  const QVector w_inv = host.inverse(w);
  const QMatrix s = host.int_w(w) * sigma.sigma() * host.int_w(w_inv);
  const QVector a = host.multiply(host.multiply(w, sigma.asymmetry()), w_inv);
  return Antiaut(host, s, a);
}

QMatrix gamma_tilde(const Antiaut& sigma) {
  const StructAlgebra& host = sigma.host();
  return host.left_mult(sigma.asymmetry()) * host.right_mult(sigma.asymmetry()) * sigma.gamma();
}

QMatrix gamma2_from(const StructAlgebra& host, const QMatrix& g) {
  std::vector<QVector> cols;
  for (std::size_t pq = 0; pq < kD * kD; ++pq) {
    cols.push_back(host.sandwich_inverse(host.sandwich(unit_vector(kD * kD, pq)) * g));
  }
  return QMatrix::from_columns(cols);
}

QVector mu_sigma(const Antiaut& sigma, const QVector& u) {
  return sigma.host().sandwich(u).apply(sigma.asymmetry());
}

SquareClass disc_sigma(const Antiaut& sigma, std::size_t skip) {
  const StructAlgebra& host = sigma.host();
  const auto skew = kernel(sigma.gamma() + QMatrix::identity(kD));
  const std::size_t k = skew.size();
  if (k == 0) throw Error(ErrorCode::NoInvertibleSkew, "gamma has no skew elements");
  std::size_t budget = kSkewScanBudget;
  for (long height = 1;; ++height) {
    // values ordered 0, 1, -1, 2, -2, ..., height, -height; keep tuples reaching |height|
    std::vector<long> values{0};
    for (long v = 1; v <= height; ++v) {
      values.push_back(v);
      values.push_back(-v);
    }
    std::vector<std::size_t> digits(k, 0);
    for (;;) {
      long top = 0;
      for (auto d : digits) top = std::max(top, std::labs(values[d]));
      if (top == height) {
        if (budget-- == 0) throw Error(ErrorCode::NoInvertibleSkew, "skew scan budget exhausted");
        QVector x = zero_vector(kD);
        for (std::size_t i = 0; i < k; ++i) x = add(x, scale(Rational(values[digits[i]]), skew[i]));
        const Rational n = host.nrd(x);
        if (sgn(n) != 0) {
          if (skip == 0) return square_class(-n);
          --skip;
        }
      }
      std::size_t pos = 0;
      while (pos < k && ++digits[pos] == values.size()) digits[pos++] = 0;
      if (pos == k) break;
    }
  }
}

}  // namespace cliffalg
