#include "cliffalg/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace cliffalg {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_same_size(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::Parse, "not an exact rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QVector zero_vector(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QVector add(const QVector& a, const QVector& b) {
  require_same_size(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  require_same_size(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector scale(const Rational& c, const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  require_same_size(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------

SquareClass::SquareClass(int sign, Integer radical) : sign_(sign), radical_(std::move(radical)) {
  if (sign_ == 0) {
    radical_ = 0;
  } else if ((sign_ != 1 && sign_ != -1) || radical_ <= 0) {
    throw Error(ErrorCode::ShapeMismatch, "square class needs sign +-1 and a positive radical");
  }
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  if (a.is_zero() || b.is_zero()) return SquareClass::zero();
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.radical_.get_mpz_t(), b.radical_.get_mpz_t());
  Integer r = (a.radical_ / g) * (b.radical_ / g);
  return SquareClass(a.sign_ * b.sign_, r);
}

std::string SquareClass::to_string() const {
  if (is_zero()) return "0";
  return (sign_ < 0 ? "-" : "") + radical_.get_str();
}

Integer squarefree_part(const Integer& n, std::uint64_t trial_bound) {
  if (n <= 0) throw Error(ErrorCode::ShapeMismatch, "squarefree_part needs a positive integer");
  Integer rest = n;
  Integer radical = 1;
  for (std::uint64_t p = 2; p <= trial_bound; p += (p == 2 ? 1 : 2)) {
    const Integer pz(static_cast<unsigned long>(p));
    if (pz * pz > rest) break;
    unsigned parity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      rest /= pz;
      parity ^= 1U;
    }
    if (parity != 0) radical *= pz;
  }
  if (rest == 1) return radical;
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) return radical;
  // No factor <= trial_bound remains, so a cofactor below bound^2 is prime.
  const Integer bound(static_cast<unsigned long>(trial_bound));
  if (rest < bound * bound) return radical * rest;
  throw Error(ErrorCode::FactorizationLimit,
              "cannot certify squarefree part of " + n.get_str() + " with trial bound " +
                  std::to_string(trial_bound));
}

SquareClass square_class(const Rational& q, std::uint64_t trial_bound) {
  const int s = sgn(q);
  if (s == 0) return SquareClass::zero();
  Integer n = abs(q.get_num()) * q.get_den();
  return SquareClass(s, squarefree_part(n, trial_bound));
}

// ---------------------------------------------------------------------------

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  const std::size_t c = cols.size();
  const std::size_t r = c == 0 ? 0 : cols[0].size();
  QMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (cols[j].size() != r) throw Error(ErrorCode::ShapeMismatch, "ragged matrix columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const QVector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const { return cliffalg::is_zero(data_); }

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
  QVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) s += (*this)(i, j) * v[j];
    }
    r[i] = s;
  }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  }
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& a) {
  QMatrix r = a;
  for (auto& x : r.data_) x *= c;
  return r;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

// ---------------------------------------------------------------------------

RrefResult rref(const QMatrix& m) {
  RrefResult out{m, {}};
  QMatrix& a = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));
    }
    const Rational inv = 1 / a(lead_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (sgn(a(lead_row, j)) != 0) a(i, j) -= f * a(lead_row, j);
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVector> kernel(const QMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::Singular, "matrix is singular");
  }
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: rhs length");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
  return x;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  QMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw Error(ErrorCode::ShapeMismatch, "span_basis: length");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  }
  const RrefResult r = rref(m);
  std::vector<QVector> out;
  for (std::size_t k = 0; k < r.pivots.size(); ++k) out.push_back(r.reduced.row(k));
  return out;
}

bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(QVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QMatrix Polynomial::evaluate(const QMatrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "polynomial of a non-square matrix");
  QMatrix acc(m.rows(), m.cols());
  const QMatrix id = QMatrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  return Polynomial(scale(1 / coeffs_.back(), coeffs_));
}

Rational Polynomial::quadratic_discriminant() const {
  if (coeffs_.size() != 3) throw Error(ErrorCode::WrongDimension, "not a quadratic polynomial");
  return coeffs_[1] * coeffs_[1] - 4 * coeffs_[2] * coeffs_[0];
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  QVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool first = out.empty();
    if (sgn(c) < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    const Rational mag = abs(c);
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial minimal_polynomial_by_powers(const QVector& one,
                                        const std::function<QVector(const QVector&)>& times_x) {
  // Incrementally keep an echelon form of the powers so far, tracking how
  // each reduced row is expressed in terms of the original powers.
  std::vector<QVector> rows;        // reduced power vectors
  std::vector<QVector> combos;      // row = sum combos[r][k] * x^k
  std::vector<std::size_t> pivots;  // pivot column of each row
  QVector power = one;
  for (std::size_t k = 0; k <= one.size(); ++k) {
    QVector v = power;
    QVector combo(k + 1);
    combo[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
      for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (nz == v.end()) return Polynomial(std::move(combo)).monic();
    const auto col = static_cast<std::size_t>(nz - v.begin());
    const Rational inv = 1 / v[col];
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(col);
    power = times_x(power);
  }
  throw Error(ErrorCode::ShapeMismatch, "no linear dependency among powers");
}

Polynomial minimal_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  auto flatten = [n](const QMatrix& a) {
    QVector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    return v;
  };
  auto unflatten = [n](const QVector& v) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
    return a;
  };
  return minimal_polynomial_by_powers(flatten(QMatrix::identity(n)),
                                      [&](const QVector& p) { return flatten(unflatten(p) * m); });
}

}  // namespace cliffalg
