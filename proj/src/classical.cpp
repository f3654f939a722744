#include <algorithm>
#include <bit>

#include "cliffalg/forms.hpp"

namespace cliffalg {

namespace {

/// Columns of P with P^T B P diagonal.
std::vector<QVector> orthogonal_basis(const QMatrix& b) {
  const std::size_t n = b.rows();
  auto form = [&](const QVector& x, const QVector& y) { return dot(x, b.apply(y)); };
  std::vector<QVector> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit_vector(n, i));
  std::vector<QVector> out;
  while (!rest.empty()) {
    auto pick = std::find_if(rest.begin(), rest.end(), [&](const QVector& v) { return sgn(form(v, v)) != 0; });
    if (pick == rest.end()) {
      // all isotropic: some pair pairs nontrivially since b is non-degenerate
      bool found = false;
      for (std::size_t j = 1; j < rest.size() && !found; ++j) {
        if (sgn(form(rest[0], rest[j])) != 0) {
          rest[0] = add(rest[0], rest[j]);
          found = true;
        }
      }
      if (!found) throw Error(ErrorCode::Degenerate, "form is degenerate");
      pick = rest.begin();
    }
    const QVector v = *pick;
    rest.erase(pick);
    const Rational q = form(v, v);
    for (auto& w : rest) w = sub(w, scale(form(w, v) / q, v));
    out.push_back(v);
  }
  return out;
}

}  // namespace

ClassicalClifford classical_clifford(const BilinearForm& f) {
  if (!f.is_symmetric()) throw Error(ErrorCode::ShapeMismatch, "classical Clifford algebra needs a symmetric form");
  const std::size_t n = f.dim();
  const std::size_t size = std::size_t{1} << n;
  const auto basis_f = orthogonal_basis(f.gram());
  QVector squares;
  for (const auto& v : basis_f) squares.push_back(f(v, v));

  // f_S * f_T = sign * prod_{k in S and T} squares_k * f_{S xor T}
  auto blade_product = [&](std::size_t s, std::size_t t) {
    int swaps = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (t >> k & 1U) swaps += std::popcount(s >> (k + 1));
    Rational c = swaps % 2 == 0 ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k)
      if ((s & t) >> k & 1U) c *= squares[k];
    QVector out = zero_vector(size);
    out[s ^ t] = c;
    return out;
  };
  auto multiply = [&](const QVector& x, const QVector& y) {
    QVector out = zero_vector(size);
    for (std::size_t s = 0; s < size; ++s) {
      if (sgn(x[s]) == 0) continue;
      for (std::size_t t = 0; t < size; ++t)
        if (sgn(y[t]) != 0) out = add(out, scale(x[s] * y[t], blade_product(s, t)));
    }
    return out;
  };

  // e_i = sum_k (P^-1)_{k i} f_k
  const QMatrix p_inv = inverse(QMatrix::from_columns(basis_f));
  std::vector<QVector> letters;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e = zero_vector(size);
    for (std::size_t k = 0; k < n; ++k) e[std::size_t{1} << k] = p_inv(k, i);
    letters.push_back(e);
  }

  ClassicalClifford out;
  for (std::size_t mask = 0; mask < size; ++mask) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) w.push_back(static_cast<std::uint16_t>(i));
    out.basis.push_back(w);
  }
  std::sort(out.basis.begin(), out.basis.end(), DegLexLess{});
  std::vector<QVector> images;
  for (const auto& w : out.basis) {
    QVector x = unit_vector(size, 0);
    for (auto l : w) x = multiply(x, letters[l]);
    images.push_back(x);
  }
  const QMatrix to_words = inverse(QMatrix::from_columns(images));
  out.table.assign(size, std::vector<QVector>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out.table[i][j] = to_words.apply(multiply(images[i], images[j]));
  return out;
}

}  // namespace cliffalg
