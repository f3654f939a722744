#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffalg/error.hpp"

namespace cliffalg {

/// Exact rational scalar. GMP keeps it canonical (positive denominator,
/// reduced) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

/// Parses "p/q" or an integer literal; rejects decimals and zero denominators.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
Rational dot(const QVector& a, const QVector& b);

// ---------------------------------------------------------------------------
// Square classes

/// Element of Q^x/(Q^x)^2 together with 0. A nonzero class is stored as a
/// sign and a squarefree positive radical.
class SquareClass {
 public:
  static constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

  SquareClass() = default;  // the zero class
  SquareClass(int sign, Integer radical);

  static SquareClass zero() { return SquareClass(); }
  static SquareClass one() { return SquareClass(1, 1); }

  bool is_zero() const noexcept { return sign_ == 0; }
  /// The class of 1, i.e. the rational is a nonzero square.
  bool is_trivial() const noexcept { return sign_ == 1 && radical_ == 1; }
  int sign() const noexcept { return sign_; }
  const Integer& radical() const noexcept { return radical_; }

  /// A canonical representative: sign * radical (0 for the zero class).
  Integer representative() const { return sign_ * radical_; }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.sign_ == b.sign_ && a.radical_ == b.radical_;
  }

  std::string to_string() const;

 private:
  int sign_ = 0;
  Integer radical_ = 0;
};

/// Squarefree part of a positive integer. Trial division up to `trial_bound`;
/// an uncertified cofactor raises FactorizationLimit.
Integer squarefree_part(const Integer& n,
                        std::uint64_t trial_bound = SquareClass::kDefaultTrialBound);

SquareClass square_class(const Rational& q,
                         std::uint64_t trial_bound = SquareClass::kDefaultTrialBound);

// ---------------------------------------------------------------------------
// Dense matrices

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major nested initializer, e.g. QMatrix::from_rows({{0, 1}, {Rational(1, 2), 0}}).
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& cols);
  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const QVector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;
  QMatrix transpose() const;
  bool is_zero() const;

  QVector apply(const QVector& v) const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; with column-major vec this realizes f (x) g on V (x) W
/// using the index convention p * dim(W) + q.
QMatrix kronecker(const QMatrix& a, const QMatrix& b);

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Basis of the right null space {x : m x = 0}, one vector per free column.
std::vector<QVector> kernel(const QMatrix& m);
Rational det(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
std::optional<QVector> solve(const QMatrix& m, const QVector& rhs);

/// Basis (as rows in reduced echelon form) of the span of the given vectors.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim);
bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim);

// ---------------------------------------------------------------------------
// Polynomials

/// Dense univariate rational polynomial, coefficients from X^0 upwards.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(QVector coefficients);

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const QVector& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational evaluate(const Rational& x) const;
  QMatrix evaluate(const QMatrix& m) const;
  Polynomial monic() const;
  /// Discriminant of a degree-2 polynomial, b^2 - 4ac.
  Rational quadratic_discriminant() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "X") const;

 private:
  void trim();
  QVector coeffs_;
};

/// Monic polynomial of least degree annihilating x, found as the first
/// linear dependency among x^0, x^1, ... . `one` is x^0 and `times_x` maps
/// x^k to x^(k+1); all powers are flat vectors of the same length.
Polynomial minimal_polynomial_by_powers(const QVector& one,
                                        const std::function<QVector(const QVector&)>& times_x);

Polynomial minimal_polynomial(const QMatrix& m);

}  // namespace cliffalg
