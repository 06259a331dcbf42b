#pragma once

#include "superpi/rational.hpp"

#include <cstddef>
#include <vector>

namespace superpi {

/// Incrementally grown row-echelon basis of a subspace of Q^width.
///
/// Rows are stored as primitive integer vectors (content divided out) and
/// reduced by cross-multiplication, so insertion never leaves the
/// integers. Pivots are the leftmost nonzero column of each row and rows
/// are kept in pivot order, which makes the basis independent of
/// insertion order only up to row scaling; rref() gives the canonical form.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == width_; }

  /// Returns true if v enlarged the span.
  bool insert(const Vector& v);
  bool insert_integer(std::vector<Integer> v);

  /// v lies in the span.
  bool contains(const Vector& v) const;

  /// Reduced row-echelon basis over Q (pivot entries 1, zeros above and
  /// below each pivot), rows ordered by pivot column.
  Matrix rref() const;
  std::vector<std::size_t> pivots() const;

private:
  std::vector<Integer> reduce(std::vector<Integer> v) const;

  std::size_t width_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a dense rational matrix by fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, in RREF-derived order.
Matrix nullspace(const Matrix& m, std::size_t width);

/// Basis of the row span in reduced row-echelon form.
Matrix row_basis(const Matrix& rows, std::size_t width);

/// Clears denominators and divides by the content; zero stays zero.
std::vector<Integer> primitive(const Vector& v);

} // namespace superpi
