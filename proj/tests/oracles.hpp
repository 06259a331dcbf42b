#pragma once

// Slow, independent reimplementations used to cross-check the library.
// They share only the data types with the code under test.

#include "superpi/algebras.hpp"
#include "superpi/combinat.hpp"
#include "superpi/freealg.hpp"
#include "superpi/rational.hpp"
#include "superpi/symgroup.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using superpi::Matrix;
using superpi::Rational;

/// Plain Gauss-Jordan over Q.
std::size_t rank(Matrix m);

/// χ_λ(σ) as the trace of left multiplication by σ on the left ideal
/// F S_n e_T, computed by linear algebra in the regular representation.
Rational specht_character(const superpi::Partition& lambda, const superpi::Permutation& sigma);

/// c_⟨n⟩(A) from a dense matrix of evaluate() values, one row per
/// monomial, one column per (frame, coordinate).
std::size_t codimension(const superpi::SuperAlgebra& a, const superpi::Multidegree& n);

/// P_⟨n⟩ ∩ Id(A) as polynomials, via dense nullspace of the same matrix.
std::vector<superpi::SuperPolynomial> identities(const superpi::SuperAlgebra& a, const superpi::Multidegree& n);

/// Every monomial of P_⟨n⟩ (all orderings of the canonical variables).
std::vector<superpi::Word> monomials(const superpi::Multidegree& n);

/// Number of partitions of n by the pentagonal-number recurrence.
std::int64_t partition_count(int n);

/// Number of standard tableaux by brute force over fillings.
std::int64_t count_standard_fillings(const superpi::Partition& lambda);

/// p/q in canonical form (mpq_class(p, q) does not reduce).
Rational ratio(std::int64_t p, std::int64_t q);

/// Row-by-column products of square matrices stored row-major.
std::vector<Rational> matmul(const std::vector<Rational>& x, const std::vector<Rational>& y, int n);

} // namespace oracle
