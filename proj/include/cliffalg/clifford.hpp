#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffalg/csa.hpp"
#include "cliffalg/forms.hpp"
#include "cliffalg/tensor_engine.hpp"

namespace cliffalg {

/// Isomorphism type of a 2-dimensional commutative algebra Q[X]/(X^2 - c).
struct QuadraticAlgebraClass {
  enum class Kind { DualNumbers, Split, Field };

  Kind kind = Kind::DualNumbers;
  SquareClass cls;  // zero for dual numbers

  /// Type of Q[X]/(X^2 - c).
  static QuadraticAlgebraClass of(const Rational& c);
  std::string kind_name() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticAlgebraClass& a, const QuadraticAlgebraClass& b) {
    return a.kind == b.kind && a.cls == b.cls;
  }
};

/// s - Trd(s)/2 for s in a basis of Sym(gamma); letter p is basis vector p of A.
std::vector<TensorElement> build_J1(const Antiaut& sigma);
/// u - mu(u)/2 for u in a basis of Sym(gamma2_tilde); e_p (x) e_q is the word (p, q).
std::vector<TensorElement> build_J2(const Antiaut& sigma);
IdealGenerators clifford_generators(const Antiaut& sigma);

/// T(A)/(J1 + J2). WrongDimension if the result exceeds dimension 2.
QuotientAlgebra clifford_antiaut(const Antiaut& sigma, const EngineConfig& cfg = {});

/// WrongDimension unless dim 2, NotCommutative for a non-commutative table.
QuadraticAlgebraClass classify_quadratic(const QuotientAlgebra& q);
/// Minimal polynomial of the first basis element other than the unit.
Polynomial quadratic_generator_minpoly(const QuotientAlgebra& q);

struct CliffordReport {
  std::string input;
  QVector asymmetry;
  SquareClass disc;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  StructureTable table;
  std::optional<QuadraticAlgebraClass> computed;
  std::optional<Polynomial> unit_letter_minpoly;
  Rational predicted_value;  // Nrd(a + 1) times the representative of disc
  QuadraticAlgebraClass predicted;
  bool match = false;
};

CliffordReport verify_deg2(const Antiaut& sigma, const EngineConfig& cfg = {});

/// Compares C(A, sigma) with C(A, Int(w) sigma Int(w)^-1).
bool invariance_check(const Antiaut& sigma, const QVector& w, const EngineConfig& cfg = {});

/// Matrix (n^2 x n^2) of v (x) w -> (x -> v b(w, x)); column i*n + j is E_ij B.
QMatrix phi_map(const BilinearForm& f);

struct SplitCheckResult {
  std::size_t antiaut_dim = 0;
  std::size_t even_half_dim = 0;
  std::optional<QuadraticAlgebraClass> antiaut_class;
  std::optional<QuadraticAlgebraClass> even_half_class;
  std::optional<QuadraticAlgebraClass> even_full_class;  // C_0(V, b), recorded for scaling
  bool classes_match = false;
  bool slices_match = false;
  bool lemmas_hold = false;

  bool ok() const { return classes_match && slices_match && lemmas_hold; }
};

/// Generators in T(V (x) V) of the ideal pulled back along T(phi): letter i*n + j is e_i (x) e_j.
IdealGenerators even_form_generators(const BilinearForm& f);

SplitCheckResult split_check(const BilinearForm& f, const EngineConfig& cfg = {});

}  // namespace cliffalg
