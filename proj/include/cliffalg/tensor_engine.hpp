#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffalg/exactmath.hpp"

namespace cliffalg {

/// A word over the alphabet {0, ..., m-1}; the empty word is the unit of T(W).
using Word = std::vector<std::uint16_t>;

/// Degree-lexicographic order: shorter words first, then lexicographic by
/// letter index. Every reduction in the engine is with respect to this order.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);

/// Finite rational combination of words, i.e. an element of T(W).
class TensorElement {
 public:
  using Terms = std::map<Word, Rational, DegLexLess>;

  TensorElement() = default;
  static TensorElement scalar(const Rational& c);
  static TensorElement word(Word w, const Rational& c = 1);
  static TensorElement letter(std::uint16_t l, const Rational& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Length of the longest word; 0 for the zero element.
  std::size_t degree() const;
  Rational coefficient(const Word& w) const;
  /// Largest word in deg-lex order (the element must be nonzero).
  const Word& leading_word() const;
  /// Every word has even length.
  bool is_even() const;

  TensorElement& add_term(const Word& w, const Rational& c);
  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& c, const TensorElement& a);
  /// Concatenation product in T(W).
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  /// Substitutes each letter l by `images[l]` (an algebra map T(W) -> T(W')).
  TensorElement substitute(const std::vector<TensorElement>& images) const;

  std::string to_string(const std::vector<std::string>& letter_names = {}) const;

 private:
  Terms terms_;
};

std::string word_label(const Word& w, const std::vector<std::string>& letter_names = {});

/// Generators of a two-sided ideal of T(W), each of degree at most 2.
struct IdealGenerators {
  std::size_t alphabet_size = 0;
  std::vector<TensorElement> generators;

  /// Throws ShapeMismatch on out-of-range letters, zero or degree > 2 generators.
  void validate() const;
  bool all_even() const;
};

struct EngineConfig {
  std::optional<std::size_t> degree_cap;     // default: alphabet size + 4
  std::size_t slack_cap = 4;
  std::optional<std::size_t> dimension_cap;  // default: 2^alphabet size
  /// Largest number of words of length <= D + slack the engine will index.
  std::size_t word_budget = std::size_t{1} << 22;

  std::size_t resolved_degree_cap(std::size_t m) const { return degree_cap.value_or(m + 4); }
  std::size_t resolved_dimension_cap(std::size_t m) const {
    return dimension_cap.value_or(m >= 63 ? SIZE_MAX : (std::size_t{1} << m));
  }
};

/// table[i][j] = coordinates of basis_i * basis_j.
using StructureTable = std::vector<std::vector<QVector>>;

bool is_associative(const StructureTable& table);
bool is_commutative(const StructureTable& table);
bool has_two_sided_unit(const StructureTable& table, std::size_t unit);

namespace detail {
class Reducer;
}

/// Finite-dimensional quotient T(W)/I with a normal-form word basis.
class QuotientAlgebra {
 public:
  QuotientAlgebra(std::size_t alphabet_size, std::vector<Word> basis, StructureTable table,
                  std::vector<QVector> letter_images, std::shared_ptr<const detail::Reducer> reducer,
                  std::size_t stable_degree, std::size_t slack, bool parity_graded);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Word>& basis() const noexcept { return basis_; }
  std::size_t unit_index() const noexcept { return 0; }
  QVector unit() const { return dim() == 0 ? QVector{} : unit_vector(dim(), unit_index()); }
  const StructureTable& table() const noexcept { return table_; }
  const QVector& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  /// Image of each letter (empty for an even part, which contains no letters).
  const std::vector<QVector>& letter_images() const noexcept { return letter_images_; }
  std::size_t stable_degree() const noexcept { return stable_degree_; }
  std::size_t slack() const noexcept { return slack_; }
  bool parity_graded() const noexcept { return parity_graded_; }
  std::optional<std::size_t> index_of(const Word& w) const;

  /// Normal-form coordinates of t; DegreeOverflow above the stabilized degree,
  /// OutsideSubalgebra if t's normal form leaves this basis.
  QVector element_image(const TensorElement& t) const;
  /// Image of t computed multiplicatively from the letter images and the table.
  QVector evaluate(const TensorElement& t) const;

  QVector multiply(const QVector& u, const QVector& v) const;
  Polynomial minimal_polynomial(const QVector& u) const;
  bool is_associative() const { return cliffalg::is_associative(table_); }
  bool is_commutative() const { return cliffalg::is_commutative(table_); }

  /// Labels of the basis words ("1" for the empty word).
  std::vector<std::string> basis_labels(const std::vector<std::string>& letter_names = {}) const;

  friend bool operator==(const QuotientAlgebra& a, const QuotientAlgebra& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.basis_ == b.basis_ && a.table_ == b.table_ &&
           a.letter_images_ == b.letter_images_ && a.stable_degree_ == b.stable_degree_ &&
           a.slack_ == b.slack_;
  }

  friend QuotientAlgebra even_part(const QuotientAlgebra& q);

 private:
  std::size_t alphabet_size_;
  std::vector<Word> basis_;
  StructureTable table_;
  std::vector<QVector> letter_images_;
  std::shared_ptr<const detail::Reducer> reducer_;
  std::map<Word, std::size_t, DegLexLess> index_;
  std::size_t stable_degree_;
  std::size_t slack_;
  bool parity_graded_;
};

/// Computes T(W)/(gens). Raises ResourceCap when no certified quotient is
/// found within the configured caps.
QuotientAlgebra quotient(const IdealGenerators& gens, const EngineConfig& cfg = {});

/// Subalgebra spanned by the even-length basis words; NotGraded unless every
/// generator of q has only even-length words.
QuotientAlgebra even_part(const QuotientAlgebra& q);

/// Echelon basis (leading coefficient 1, deg-lex leading words strictly
/// decreasing) of the span of all products x*g*y of formal degree <= degree.
std::vector<TensorElement> ideal_slice(const IdealGenerators& gens, std::size_t degree);

/// Subspace equality of two finite families of tensor elements.
bool same_span(const std::vector<TensorElement>& a, const std::vector<TensorElement>& b);

}  // namespace cliffalg
