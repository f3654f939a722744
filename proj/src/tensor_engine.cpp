#include "cliffalg/tensor_engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>
#include <utility>

namespace cliffalg {

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement TensorElement::scalar(const Rational& c) { return word({}, c); }

TensorElement TensorElement::word(Word w, const Rational& c) {
  TensorElement t;
  t.add_term(w, c);
  return t;
}

TensorElement TensorElement::letter(std::uint16_t l, const Rational& c) { return word(Word{l}, c); }

std::size_t TensorElement::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Rational TensorElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Word& TensorElement::leading_word() const {
  if (terms_.empty()) throw Error(ErrorCode::ShapeMismatch, "leading word of zero element");
  return terms_.rbegin()->first;
}

bool TensorElement::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.size() % 2 == 0; });
}

TensorElement& TensorElement::add_term(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

TensorElement operator*(const Rational& c, const TensorElement& a) {
  TensorElement r;
  if (sgn(c) == 0) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
  return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

TensorElement TensorElement::substitute(const std::vector<TensorElement>& images) const {
  TensorElement r;
  for (const auto& [w, c] : terms_) {
    TensorElement term = scalar(c);
    for (auto l : w) term = term * images.at(l);
    r += term;
  }
  return r;
}

std::string word_label(const Word& w, const std::vector<std::string>& letter_names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!letter_names.empty()) {
      if (i > 0) s += "*";
      s += letter_names.at(w[i]);
    } else {
      s += "e" + std::to_string(w[i]);
    }
  }
  return s;
}

std::string TensorElement::to_string(const std::vector<std::string>& letter_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    const bool first = out.empty();
    if (sgn(c) < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    const Rational mag = abs(c);
    if (it->first.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += word_label(it->first, letter_names);
    }
  }
  return out;
}

void IdealGenerators::validate() const {
  if (alphabet_size == 0 || alphabet_size > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::ShapeMismatch, "alphabet size out of range");
  }
  for (const auto& g : generators) {
    if (g.is_zero()) throw Error(ErrorCode::ShapeMismatch, "zero ideal generator");
    if (g.degree() > 2) throw Error(ErrorCode::ShapeMismatch, "ideal generator of degree > 2");
    for (const auto& [w, c] : g.terms())
      for (auto l : w)
        if (l >= alphabet_size) throw Error(ErrorCode::ShapeMismatch, "letter outside alphabet");
  }
}

bool IdealGenerators::all_even() const {
  return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_even(); });
}

// ---------------------------------------------------------------------------
// Table checks

namespace {

QVector table_multiply(const StructureTable& table, const QVector& u, const QVector& v) {
  const std::size_t n = table.size();
  QVector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      const Rational c = u[i] * v[j];
      const QVector& p = table[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(p[k]) != 0) r[k] += c * p[k];
    }
  }
  return r;
}

}  // namespace

bool is_associative(const StructureTable& table) {
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVector left = table_multiply(table, table[i][j], unit_vector(n, k));
        const QVector right = table_multiply(table, unit_vector(n, i), table[j][k]);
        if (left != right) return false;
      }
  return true;
}

bool is_commutative(const StructureTable& table) {
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

bool has_two_sided_unit(const StructureTable& table, std::size_t unit) {
  const std::size_t n = table.size();
  if (unit >= n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const QVector e = unit_vector(n, i);
    if (table[unit][i] != e || table[i][unit] != e) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Word indexing and sparse echelon machinery

namespace detail {

using Key = std::uint64_t;
using SparseRow = std::vector<std::pair<Key, Rational>>;  // leading term first, keys decreasing
using Accumulator = std::map<Key, Rational, std::greater<>>;

/// Bijection between words of length <= max_length and integers that is
/// monotone for the deg-lex order: key = (#words shorter) + base-m value.
class WordCodec {
 public:
  WordCodec(std::size_t m, std::size_t max_length) : m_(m) {
    offsets_.push_back(0);
    Key pw = 1;
    for (std::size_t len = 0; len <= max_length; ++len) {
      powers_.push_back(pw);
      if (offsets_.back() > kLimit - pw) throw Error(ErrorCode::ResourceCap, "word index overflow");
      offsets_.push_back(offsets_.back() + pw);
      if (len < max_length) {
        if (pw > kLimit / m) throw Error(ErrorCode::ResourceCap, "word index overflow");
        pw *= m;
      }
    }
  }

  std::size_t max_length() const { return powers_.size() - 1; }
  Key words_up_to(std::size_t len) const { return offsets_.at(len + 1); }

  Key key(const Word& w) const {
    Key v = 0;
    for (auto l : w) v = v * m_ + l;
    return offsets_.at(w.size()) + v;
  }

  std::size_t length(Key k) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
  }

  Word decode(Key k) const {
    const std::size_t len = length(k);
    Key v = k - offsets_[len];
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<std::uint16_t>(v % m_);
      v /= m_;
    }
    return w;
  }

  Key left(std::uint16_t l, Key k) const {
    const std::size_t len = length(k);
    return offsets_.at(len + 1) + l * powers_.at(len) + (k - offsets_[len]);
  }

  Key right(Key k, std::uint16_t l) const {
    const std::size_t len = length(k);
    return offsets_.at(len + 1) + (k - offsets_[len]) * m_ + l;
  }

 private:
  static constexpr Key kLimit = Key{1} << 62;
  std::size_t m_;
  std::vector<Key> powers_;
  std::vector<Key> offsets_;
};

/// Normal-form data: pivot rows of the ideal slice, keyed by leading word.
class Reducer {
 public:
  Reducer(WordCodec codec, std::size_t max_degree) : codec_(std::move(codec)), max_degree_(max_degree) {}

  const WordCodec& codec() const { return codec_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t pivot_count() const { return rows_.size(); }
  bool is_pivot(Key k) const { return rows_.count(k) != 0; }

  void add_row(SparseRow row) {
    const Key lead = row.front().first;
    rows_.emplace(lead, std::move(row));
  }

  /// Sweeps terms from the largest word down, replacing pivot words by their
  /// row tails (which are strictly smaller), so one pass reaches normal form.
  void reduce(Accumulator& acc) const {
    for (auto it = acc.begin(); it != acc.end();) {
      auto p = rows_.find(it->first);
      if (p == rows_.end()) {
        ++it;
        continue;
      }
      const Rational c = it->second;
      const SparseRow& row = p->second;
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto [slot, inserted] = acc.try_emplace(row[t].first, 0);
        slot->second -= c * row[t].second;
        if (sgn(slot->second) == 0) acc.erase(slot);
      }
      it = acc.erase(it);
    }
  }

  Accumulator reduce(const TensorElement& t) const {
    Accumulator acc;
    for (const auto& [w, c] : t.terms()) acc.emplace(codec_.key(w), c);
    reduce(acc);
    return acc;
  }

  SparseRow row(Key lead) const { return rows_.at(lead); }

 private:
  WordCodec codec_;
  std::size_t max_degree_;
  std::unordered_map<Key, SparseRow> rows_;
};

/// Incrementally builds echelon bases of S(N) = span{x g y : formal degree <= N}.
/// S(N) = gens of degree N + letters * S(N-1) + S(N-1) * letters, so only the
/// rows added at level N-1 need to be multiplied at level N.
class SliceBuilder {
 public:
  SliceBuilder(const IdealGenerators& gens, const WordCodec& codec, std::size_t word_budget)
      : gens_(gens), codec_(codec), reducer_(codec, codec.max_length()), word_budget_(word_budget) {}

  /// Level of the last completed step; -1 before the first call to advance().
  long level() const { return level_; }

  void advance() {
    const std::size_t n = static_cast<std::size_t>(level_ + 1);
    if (n > codec_.max_length()) throw Error(ErrorCode::ResourceCap, "degree cap reached");
    if (codec_.words_up_to(n) > word_budget_) {
      throw Error(ErrorCode::ResourceCap,
                  "word budget exceeded at degree " + std::to_string(n) + " (" +
                      std::to_string(codec_.words_up_to(n)) + " words)");
    }
    level_ = static_cast<long>(n);
    pivot_level_.resize(codec_.words_up_to(n), 0);
    std::vector<Key> added;
    for (const auto& g : gens_.generators) {
      if (g.degree() == n) insert(reducer_.reduce(g), added);
    }
    const std::uint16_t m = static_cast<std::uint16_t>(gens_.alphabet_size);
    for (Key lead : previous_) {
      const SparseRow row = reducer_.row(lead);
      for (std::uint16_t l = 0; l < m; ++l) {
        Accumulator left;
        Accumulator right;
        for (const auto& [k, c] : row) {
          left.emplace(codec_.left(l, k), c);
          right.emplace(codec_.right(k, l), c);
        }
        reducer_.reduce(left);
        insert(std::move(left), added);
        reducer_.reduce(right);
        insert(std::move(right), added);
      }
    }
    previous_ = std::move(added);
  }

  /// Pivot words of S(level) are exactly the leading words of its elements.
  bool is_pivot_at(Key k, std::size_t level) const {
    return k < pivot_level_.size() && pivot_level_[k] != 0 && pivot_level_[k] <= level + 1;
  }

  /// Non-leading words of length <= degree with respect to S(level).
  std::vector<Key> basis(std::size_t degree, std::size_t level) const {
    std::vector<Key> out;
    const Key end = codec_.words_up_to(degree);
    for (Key k = 0; k < end; ++k)
      if (!is_pivot_at(k, level)) out.push_back(k);
    return out;
  }

  const Reducer& reducer() const { return reducer_; }

  std::vector<SparseRow> rows_up_to_degree(std::size_t degree) const {
    std::vector<SparseRow> out;
    const Key end = codec_.words_up_to(degree);
    for (Key k = 0; k < end && k < pivot_level_.size(); ++k)
      if (pivot_level_[k] != 0) out.push_back(reducer_.row(k));
    return out;
  }

 private:
  void insert(Accumulator acc, std::vector<Key>& added) {
    if (acc.empty()) return;
    const Rational inv = 1 / acc.begin()->second;
    SparseRow row;
    row.reserve(acc.size());
    for (auto& [k, c] : acc) row.emplace_back(k, c * inv);
    const Key lead = row.front().first;
    pivot_level_.at(lead) = static_cast<std::uint8_t>(level_ + 1);
    reducer_.add_row(std::move(row));
    added.push_back(lead);
  }

  const IdealGenerators& gens_;
  const WordCodec& codec_;
  Reducer reducer_;
  std::size_t word_budget_;
  long level_ = -1;
  std::vector<std::uint8_t> pivot_level_;
  std::vector<Key> previous_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// QuotientAlgebra

QuotientAlgebra::QuotientAlgebra(std::size_t alphabet_size, std::vector<Word> basis, StructureTable table,
                                 std::vector<QVector> letter_images,
                                 std::shared_ptr<const detail::Reducer> reducer, std::size_t stable_degree,
                                 std::size_t slack, bool parity_graded)
    : alphabet_size_(alphabet_size),
      basis_(std::move(basis)),
      table_(std::move(table)),
      letter_images_(std::move(letter_images)),
      reducer_(std::move(reducer)),
      stable_degree_(stable_degree),
      slack_(slack),
      parity_graded_(parity_graded) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

QVector QuotientAlgebra::element_image(const TensorElement& t) const {
  if (t.degree() > stable_degree_) {
    throw Error(ErrorCode::DegreeOverflow, "element of degree " + std::to_string(t.degree()) +
                                               " exceeds stabilized degree " + std::to_string(stable_degree_));
  }
  QVector v(dim());
  for (const auto& [k, c] : reducer_->reduce(t)) {
    auto idx = index_of(reducer_->codec().decode(k));
    if (!idx) throw Error(ErrorCode::OutsideSubalgebra, "normal form leaves this subalgebra");
    v[*idx] = c;
  }
  return v;
}

QVector QuotientAlgebra::evaluate(const TensorElement& t) const {
  if (letter_images_.size() != alphabet_size_) {
    throw Error(ErrorCode::OutsideSubalgebra, "no letter images on this algebra");
  }
  QVector v(dim());
  for (const auto& [w, c] : t.terms()) {
    QVector term = unit();
    for (auto l : w) term = multiply(term, letter_images_.at(l));
    v = add(v, scale(c, term));
  }
  return v;
}

QVector QuotientAlgebra::multiply(const QVector& u, const QVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorCode::ShapeMismatch, "vector not over basis");
  return table_multiply(table_, u, v);
}

Polynomial QuotientAlgebra::minimal_polynomial(const QVector& u) const {
  if (u.size() != dim()) throw Error(ErrorCode::ShapeMismatch, "vector not over basis");
  return minimal_polynomial_by_powers(unit(), [&](const QVector& p) { return multiply(p, u); });
}

std::vector<std::string> QuotientAlgebra::basis_labels(const std::vector<std::string>& letter_names) const {
  std::vector<std::string> out;
  for (const auto& w : basis_) out.push_back(word_label(w, letter_names));
  return out;
}

// ---------------------------------------------------------------------------
// The quotient procedure

namespace {

using detail::Key;

QVector coordinates(const detail::Accumulator& acc, const std::map<Key, std::size_t>& index, std::size_t dim) {
  QVector v(dim);
  for (const auto& [k, c] : acc) v[index.at(k)] = c;
  return v;
}

std::optional<QuotientAlgebra> certify(const IdealGenerators& gens, const detail::SliceBuilder& builder,
                                       const detail::WordCodec& codec, const std::vector<Key>& basis_keys,
                                       std::size_t degree, std::size_t slack) {
  auto reducer = std::make_shared<detail::Reducer>(codec, degree);
  for (auto& row : builder.rows_up_to_degree(degree)) reducer->add_row(std::move(row));

  const std::size_t n = basis_keys.size();
  std::map<Key, std::size_t> index;
  std::vector<Word> basis;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(basis_keys[i], i);
    basis.push_back(codec.decode(basis_keys[i]));
  }
  const std::size_t m = gens.alphabet_size;

  // right_mult[l][i] = normal form of basis_i * letter_l; all such words have length <= degree.
  std::vector<std::vector<QVector>> right_mult(m, std::vector<QVector>(n));
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      detail::Accumulator acc;
      acc.emplace(codec.right(basis_keys[i], static_cast<std::uint16_t>(l)), 1);
      reducer->reduce(acc);
      right_mult[l][i] = coordinates(acc, index, n);
    }
  auto times_letter = [&](const QVector& v, std::uint16_t l) {
    QVector r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(v[i]) == 0) continue;
      const QVector& img = right_mult[l][i];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(img[k]) != 0) r[k] += v[i] * img[k];
    }
    return r;
  };

  StructureTable table(n, std::vector<QVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVector v = unit_vector(n, i);
      for (auto l : basis[j]) v = times_letter(v, l);
      table[i][j] = std::move(v);
    }

  std::vector<QVector> letters(m);
  for (std::size_t l = 0; l < m; ++l) {
    letters[l] = coordinates(reducer->reduce(TensorElement::letter(static_cast<std::uint16_t>(l))), index, n);
  }

  QuotientAlgebra q(m, std::move(basis), std::move(table), std::move(letters), reducer, degree, slack,
                    gens.all_even());
  if (n > 0 && !has_two_sided_unit(q.table(), q.unit_index())) return std::nullopt;
  for (const auto& g : gens.generators) {
    if (!is_zero(q.element_image(g)) || !is_zero(q.evaluate(g))) return std::nullopt;
  }
  if (!q.is_associative()) return std::nullopt;
  return q;
}

}  // namespace

QuotientAlgebra quotient(const IdealGenerators& gens, const EngineConfig& cfg) {
  gens.validate();
  const std::size_t m = gens.alphabet_size;
  const std::size_t degree_cap = cfg.resolved_degree_cap(m);
  const std::size_t dim_cap = cfg.resolved_dimension_cap(m);
  if (degree_cap < 2 || cfg.slack_cap < 1) {
    throw Error(ErrorCode::ResourceCap, "degree cap must be >= 2 and slack cap >= 1");
  }
  const detail::WordCodec codec(m, degree_cap + cfg.slack_cap);
  detail::SliceBuilder builder(gens, codec, cfg.word_budget);

  // Candidates (D, k) are visited by increasing D + k, so the most expensive
  // slice ever built is the first one at which some candidate certifies.
  std::set<std::pair<std::size_t, std::size_t>> rejected;
  while (true) {
    builder.advance();
    const auto level = static_cast<std::size_t>(builder.level());
    for (std::size_t d = 2; d <= degree_cap && d < level; ++d) {
      const std::size_t k = level - d;
      if (k < 1 || k > cfg.slack_cap || rejected.count({d, k})) continue;
      const std::vector<Key> b = builder.basis(d, level);
      if (b != builder.basis(d - 1, level - 1) || b != builder.basis(d, level - 1)) continue;
      const bool closed = std::all_of(b.begin(), b.end(), [&](Key key) { return codec.length(key) < d; });
      if (!closed) continue;
      if (b.size() > dim_cap) {
        throw Error(ErrorCode::ResourceCap, "stabilized basis of size " + std::to_string(b.size()) +
                                                " exceeds dimension cap " + std::to_string(dim_cap));
      }
      if (auto q = certify(gens, builder, codec, b, d, k)) return std::move(*q);
      rejected.insert({d, k});
    }
    if (level >= degree_cap + cfg.slack_cap) {
      throw Error(ErrorCode::ResourceCap, "no certified quotient within degree cap " +
                                              std::to_string(degree_cap) + " and slack " +
                                              std::to_string(cfg.slack_cap));
    }
  }
}

QuotientAlgebra even_part(const QuotientAlgebra& q) {
  if (!q.parity_graded_) throw Error(ErrorCode::NotGraded, "generators are not all of even length");
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (q.basis_[i].size() % 2 == 0) even.push_back(i);
  const std::size_t n = even.size();
  std::vector<Word> basis;
  for (auto i : even) basis.push_back(q.basis_[i]);
  StructureTable table(n, std::vector<QVector>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const QVector& full = q.table_[even[a]][even[b]];
      QVector v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = full[even[c]];
      for (std::size_t i = 0; i < full.size(); ++i) {
        if (q.basis_[i].size() % 2 == 1 && sgn(full[i]) != 0) {
          throw Error(ErrorCode::NotGraded, "product of even words has odd component");
        }
      }
      table[a][b] = std::move(v);
    }
  return QuotientAlgebra(q.alphabet_size_, std::move(basis), std::move(table), {}, q.reducer_,
                         q.stable_degree_, q.slack_, true);
}

std::vector<TensorElement> ideal_slice(const IdealGenerators& gens, std::size_t degree) {
  gens.validate();
  const detail::WordCodec codec(gens.alphabet_size, degree);
  detail::SliceBuilder builder(gens, codec, std::numeric_limits<std::size_t>::max());
  while (builder.level() < static_cast<long>(degree)) builder.advance();
  std::vector<TensorElement> out;
  auto rows = builder.rows_up_to_degree(degree);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    TensorElement t;
    for (const auto& [k, c] : *it) t.add_term(codec.decode(k), c);
    out.push_back(std::move(t));
  }
  return out;
}

bool same_span(const std::vector<TensorElement>& a, const std::vector<TensorElement>& b) {
  std::map<Word, std::size_t, DegLexLess> columns;
  for (const auto* family : {&a, &b})
    for (const auto& t : *family)
      for (const auto& [w, c] : t.terms()) columns.try_emplace(w, 0);
  std::size_t col = 0;
  for (auto& [w, idx] : columns) idx = col++;
  auto to_vectors = [&](const std::vector<TensorElement>& family) {
    std::vector<QVector> out;
    for (const auto& t : family) {
      QVector v(columns.size());
      for (const auto& [w, c] : t.terms()) v[columns.at(w)] = c;
      out.push_back(std::move(v));
    }
    return out;
  };
  return same_span(to_vectors(a), to_vectors(b), columns.size());
}

}  // namespace cliffalg
