#include "superpi/linalg.hpp"

#include "superpi/errors.hpp"

#include <algorithm>

namespace superpi {

std::vector<Integer> primitive(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer y = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    out.push_back(std::move(y));
  }
  if (g > 1)
    for (auto& y : out) mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

void make_primitive(std::vector<Integer>& v, std::size_t pivot) {
  Integer g = 0;
  for (const auto& y : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& y : v) mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
  if (v[pivot] < 0)
    for (auto& y : v) y = -y;
}

std::size_t leading(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

} // namespace

std::vector<Integer> EchelonBasis::reduce(std::vector<Integer> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const auto& row = rows_[r];
    // v <- row[p]*v - v[p]*row, divided by gcd(row[p], v[p]) first
    Integer g;
    mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
    const Integer a = row[p] / g;
    const Integer b = v[p] / g;
    for (std::size_t i = 0; i < width_; ++i) {
      if (row[i] == 0) {
        if (a != 1 && v[i] != 0) v[i] *= a;
        continue;
      }
      v[i] = a * v[i] - b * row[i];
    }
    const std::size_t lead = leading(v);
    if (lead == width_) return v;
    make_primitive(v, lead);
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  if (v.size() != width_) throw SizeMismatch("EchelonBasis: vector width mismatch");
  return insert_integer(primitive(v));
}

bool EchelonBasis::insert_integer(std::vector<Integer> v) {
  if (v.size() != width_) throw SizeMismatch("EchelonBasis: vector width mismatch");
  if (full()) return false;
  v = reduce(std::move(v));
  const std::size_t p = leading(v);
  if (p == width_) return false;
  make_primitive(v, p);
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, p);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

bool EchelonBasis::contains(const Vector& v) const {
  if (v.size() != width_) throw SizeMismatch("EchelonBasis: vector width mismatch");
  auto r = reduce(primitive(v));
  return leading(r) == width_;
}

std::vector<std::size_t> EchelonBasis::pivots() const { return pivots_; }

Matrix EchelonBasis::rref() const {
  Matrix out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    Vector v;
    v.reserve(width_);
    for (const auto& y : row) v.emplace_back(y);
    out.push_back(std::move(v));
  }
  // back-substitute from the bottom so every pivot column is a unit column
  for (std::size_t r = out.size(); r-- > 0;) {
    const std::size_t p = pivots_[r];
    const Rational inv = 1 / out[r][p];
    for (auto& x : out[r]) x *= inv;
    for (std::size_t s = 0; s < r; ++s) {
      const Rational f = out[s][p];
      if (f == 0) continue;
      for (std::size_t i = p; i < width_; ++i)
        if (out[r][i] != 0) out[s][i] -= f * out[r][i];
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  EchelonBasis b(m.front().size());
  for (const auto& row : m) b.insert(row);
  return b.rank();
}

Matrix row_basis(const Matrix& rows, std::size_t width) {
  EchelonBasis b(width);
  for (const auto& row : rows) b.insert(row);
  return b.rref();
}

Matrix nullspace(const Matrix& m, std::size_t width) {
  const Matrix r = row_basis(m, width);
  std::vector<bool> is_pivot(width, false);
  std::vector<std::size_t> piv;
  for (const auto& row : r) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    is_pivot[p] = true;
    piv.push_back(p);
  }
  Matrix out;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vector x(width, Rational(0));
    x[free] = 1;
    for (std::size_t k = 0; k < r.size(); ++k) x[piv[k]] = -r[k][free];
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace superpi
