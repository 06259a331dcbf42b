#pragma once

#include "superpi/freealg.hpp"
#include "superpi/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superpi {

/// Finite-dimensional associative superalgebra over Q given by structure
/// constants e_i e_j = Σ_k c_{ij}^k e_k, a parity per basis element and the
/// matrix of the involution # (column j holds the coordinates of e_j^#).
class SuperAlgebra {
public:
  struct Term {
    std::size_t index;
    Rational coeff;
  };
  /// Sparse structure-constant entry (i, j, k, c_{ij}^k), 0-based.
  struct Constant {
    std::size_t i, j, k;
    Rational value;
  };

  /// Structural checks only (sizes, index ranges, 0/1 parities, nonzero
  /// dimension); throws ValidationError. Axioms are checked by validate().
  SuperAlgebra(std::vector<std::string> basis_names, std::vector<int> grading, const std::vector<Constant>& mult,
               Matrix inv, Mode mode, std::optional<Vector> unit = std::nullopt);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const std::vector<int>& grading() const noexcept { return grading_; }
  const Matrix& inv() const noexcept { return inv_; }
  Mode mode() const noexcept { return mode_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }

  /// Nonzero terms of e_i e_j.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  std::vector<Constant> constants() const;

  Vector basis_vector(std::size_t i) const;
  Vector apply_inv(const Vector& v) const;

private:
  std::vector<std::string> names_;
  std::vector<int> grading_;
  std::vector<std::vector<Term>> table_;
  Matrix inv_;
  Mode mode_;
  std::optional<Vector> unit_;
};

/// Bilinear product through the structure constants. Throws SizeMismatch
/// on a length mismatch.
Vector element_mul(const SuperAlgebra& a, const Vector& v, const Vector& w);

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string counterexample; // first failing basis tuple, empty on pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const noexcept;
  std::string to_string() const;
};

/// Checks associativity, grading, inv² = 1, inv graded,
/// anti-multiplicativity with the mode's sign, and the unit axioms.
ValidationReport validate(const SuperAlgebra& a);

/// Bases of A₀⁺, A₀⁻, A₁⁺, A₁⁻ (indexed like VarType), primitive integer
/// vectors. Throws ValidationError if the algebra fails validate().
struct ComponentBases {
  std::array<std::vector<Vector>, 4> bases;

  const std::vector<Vector>& of(VarType t) const { return bases[static_cast<std::size_t>(index_of(t))]; }
  Multidegree dims() const noexcept;
};
ComponentBases component_bases(const SuperAlgebra& a);

/// True if v lies in the component of the given type (parity-homogeneous
/// and a ±1 eigenvector of #).
bool in_component(const SuperAlgebra& a, VarType t, const Vector& v);

// Gallery. Every constructor validates and throws ValidationError on
// failure.

/// 2-generated non-unitary Grassmann algebra, basis (e1, e2, e1e2),
/// grading (1,1,0), e_i^# = −e_i.
SuperAlgebra grassmann2();

/// Grassmann algebra on m generators with canonical grading and
/// e_i^# = −e_i. Basis: subsets of {1..m} ordered by size then
/// lexicographically; the empty subset (the unit) only when unital.
SuperAlgebra grassmann_trunc(int m, bool unital = true);

/// M_{k,k}(Q), grading (0^k,1^k), transpose superinvolution
/// (A B; C D) ↦ (Dᵗ −Bᵗ; Cᵗ Aᵗ). Basis e_{ij} row-major.
SuperAlgebra matrix_super(int k);

/// M_n(Q), trivial grading, transpose, graded-involution mode.
SuperAlgebra matrix_algebra(int n);

/// Resolves "grassmann2", "grassmann_trunc:M[:nonunital]",
/// "matrix_super:K", "matrix:N". Throws std::invalid_argument on unknown
/// names.
SuperAlgebra gallery(std::string_view spec);

/// JSON algebra file format.
SuperAlgebra algebra_from_json(std::string_view json_text);
SuperAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_json(const SuperAlgebra& a);

} // namespace superpi
