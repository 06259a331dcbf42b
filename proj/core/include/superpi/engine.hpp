#pragma once

#include "superpi/algebras.hpp"
#include "superpi/combinat.hpp"
#include "superpi/freealg.hpp"
#include "superpi/rational.hpp"
#include "superpi/symgroup.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace superpi {

/// Size limits and parallelism. Limits are checked before any work starts
/// and raise ResourceLimitExceeded; results never depend on `jobs`.
struct EngineOptions {
  double max_entries = 1e8;
  int max_degree = 5;
  unsigned jobs = 1;

  /// Defaults, with max_entries taken from SUPERPI_BUDGET when set.
  static EngineOptions from_env();
};

using EvaluationFrame = std::map<Variable, Vector>;

/// Evaluates f with every variable replaced by its frame vector. Throws
/// std::invalid_argument on a missing assignment or a vector outside the
/// variable's component.
Vector evaluate(const SuperPolynomial& f, const SuperAlgebra& a, const EvaluationFrame& frame);

struct IdentityResult {
  bool holds = true;
  std::optional<EvaluationFrame> witness; // first basis frame with a nonzero value
  Vector value;
};

/// Exhaustive check over frames of component basis vectors; sufficient
/// because f is multilinear. Throws std::invalid_argument on
/// non-multilinear input.
IdentityResult check_identity(const SuperPolynomial& f, const SuperAlgebra& a, const EngineOptions& opts = {});
bool is_identity(const SuperPolynomial& f, const SuperAlgebra& a, const EngineOptions& opts = {});

/// Multilinearizes a multihomogeneous f first.
bool is_identity_general(const SuperPolynomial& f, const SuperAlgebra& a, const EngineOptions& opts = {});

/// P_⟨n⟩ with its monomial basis: monomial r is the word whose letters are
/// the canonical variables in the order of the r-th permutation (lex on
/// image lists), so index 0 is y0_1 y0_2 … z1_{n4}.
class MultilinearSpace {
public:
  MultilinearSpace(const Multidegree& n, Mode mode);

  const Multidegree& multidegree() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  int degree() const noexcept { return static_cast<int>(vars_.size()); }
  std::size_t size() const noexcept { return size_; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }

  /// Letter sequence (0-based canonical variable numbers) of monomial r.
  std::vector<int> letters(std::size_t r) const;
  std::size_t rank(const std::vector<int>& letters) const;
  Word word(std::size_t r) const;
  std::size_t index(const Word& w) const;

  /// Coordinates of f; throws SizeMismatch if f is not in P_⟨n⟩.
  Vector to_vector(const SuperPolynomial& f) const;
  SuperPolynomial to_polynomial(const Vector& v) const;

  /// Permutation of the canonical variable numbers induced by ⟨σ⟩.
  std::vector<int> variable_permutation(const MultiPermutation& sigma) const;

private:
  Multidegree n_;
  Mode mode_;
  std::vector<Variable> vars_;
  std::map<Variable, int> number_;
  std::vector<std::size_t> fact_;
  std::size_t size_;
};

/// The span C ⊂ Q^{n!} of the evaluation-matrix columns, in RREF. Its
/// rank is c_⟨n⟩(A) and its orthogonal complement is P_⟨n⟩ ∩ Id(A).
struct ImageSpace {
  MultilinearSpace space;
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return basis.size(); }
};

ImageSpace image_space(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts = {});

std::size_t codimension(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts = {});

/// Σ multinomial(n; ⟨n⟩) c_⟨n⟩(A) over all ⟨n⟩ of total n.
Integer graded_codimension(const SuperAlgebra& a, int n, const EngineOptions& opts = {});

/// c_n(A) of the bare associative algebra: every variable ranges over the
/// whole basis, grading and involution are ignored (and not validated).
std::size_t ordinary_codimension(const SuperAlgebra& a, int n, const EngineOptions& opts = {});

/// Trace of ⟨σ⟩ on P_⟨n⟩/(P_⟨n⟩ ∩ Id(A)). Equal to its trace on C, since
/// C is the dual module and symmetric-group characters are real.
Rational quotient_trace(const ImageSpace& image, const MultiPermutation& sigma);
Rational quotient_trace(const SuperAlgebra& a, const Multidegree& n, const MultiPermutation& sigma,
                        const EngineOptions& opts = {});

struct CocharacterReport {
  Multidegree multidegree{};
  std::size_t codim = 0;
  std::map<MultiPartition, Integer> mults; // only nonzero multiplicities

  bool operator==(const CocharacterReport&) const = default;
};

/// Multiplicities from class-function traces. Throws
/// InternalConsistencyError if a multiplicity is not a non-negative
/// integer or Σ m d differs from the codimension.
CocharacterReport cocharacter(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts = {});

/// Basis of P_⟨n⟩ ∩ Id(A).
std::vector<SuperPolynomial> identity_space(const SuperAlgebra& a, const Multidegree& n,
                                            const EngineOptions& opts = {});

/// True iff m_⟨μ⟩ = 0, decided independently of the trace method: e_T w
/// must be an identity for the row-reading tableau T of shape ⟨μ⟩ and every
/// monomial w of P_⟨n⟩.
bool multiplicity_oracle(const SuperAlgebra& a, const MultiPartition& mu, const EngineOptions& opts = {});

struct Subspace {
  Multidegree multidegree{};
  std::vector<SuperPolynomial> basis; // RREF order
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Multilinear part of degree ⟨n⟩ of the ideal generated by the
/// generators and their images under #, closed under substitutions
/// x ↦ w ± w^# (sign by symmetry type, w a word of the variable's parity)
/// and multiplication by words on both sides.
Subspace tideal_span(const std::vector<SuperPolynomial>& generators, const Multidegree& n, Mode mode,
                     const EngineOptions& opts = {});

/// True if the two lists span the same subspace of P_⟨n⟩.
bool same_span(const std::vector<SuperPolynomial>& a, const std::vector<SuperPolynomial>& b, const Multidegree& n,
               Mode mode);

} // namespace superpi
