#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

using namespace superpi;

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

using Perm = std::vector<int>; // 0-based images

std::vector<Perm> permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& a, const Perm& b) { // (a∘b)(i) = a(b(i))
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

int inversion_sign(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

bool preserves(const Perm& p, const std::vector<std::vector<int>>& blocks) {
  for (const auto& b : blocks)
    for (int x : b)
      if (std::find(b.begin(), b.end(), p[static_cast<std::size_t>(x)]) == b.end()) return false;
  return true;
}

Vector multiply(const SuperAlgebra& a, const Vector& x, const Vector& y) {
  Vector out(a.dim(), Rational(0));
  for (const auto& c : a.constants()) out[c.k] += c.value * x[c.i] * y[c.j];
  return out;
}

Matrix evaluation_matrix(const SuperAlgebra& a, const Multidegree& n, std::vector<Word>& rows) {
  rows = monomials(n);
  const auto cb = component_bases(a);
  const auto vars = canonical_variables(n);
  std::vector<std::vector<Vector>> frames{{}};
  for (const auto& v : vars) {
    std::vector<std::vector<Vector>> next;
    for (const auto& f : frames)
      for (const auto& b : cb.of(v.type)) {
        auto g = f;
        g.push_back(b);
        next.push_back(std::move(g));
      }
    frames = std::move(next);
  }
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& f : frames) {
      Vector acc;
      for (const auto& letter : rows[r]) {
        const auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), letter) - vars.begin());
        acc = acc.empty() ? f[pos] : multiply(a, acc, f[pos]);
      }
      m[r].insert(m[r].end(), acc.begin(), acc.end());
    }
  return m;
}

} // namespace

std::size_t rank(Matrix m) { return gauss_jordan(m).size(); }

Rational specht_character(const Partition& lambda, const Permutation& sigma) {
  const int n = lambda.size();
  const auto group = permutations(n);
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;

  std::vector<std::vector<int>> rows, cols;
  int next = 0;
  for (int len : lambda.parts()) {
    std::vector<int> r;
    for (int k = 0; k < len; ++k) r.push_back(next++);
    rows.push_back(r);
  }
  for (int c = 0; c < lambda.part(0); ++c) {
    std::vector<int> col;
    int start = 0;
    for (int len : lambda.parts()) {
      if (c < len) col.push_back(start + c);
      start += len;
    }
    cols.push_back(col);
  }
  Vector e(group.size(), Rational(0));
  for (const auto& r : group) {
    if (!preserves(r, rows)) continue;
    for (const auto& c : group)
      if (preserves(c, cols)) e[index.at(compose(r, c))] += inversion_sign(c);
  }
  Matrix span;
  for (const auto& g : group) {
    Vector ge(group.size(), Rational(0));
    for (std::size_t h = 0; h < group.size(); ++h)
      if (e[h] != 0) ge[index.at(compose(g, group[h]))] += e[h];
    span.push_back(std::move(ge));
  }
  const auto pivots = gauss_jordan(span);
  Perm s;
  for (int i = 1; i <= n; ++i) s.push_back(sigma(i) - 1);
  Perm s_inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) s_inv[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  Rational tr = 0;
  for (std::size_t i = 0; i < span.size(); ++i) tr += span[i][index.at(compose(s_inv, group[pivots[i]]))];
  return tr;
}

std::vector<Word> monomials(const Multidegree& n) {
  const auto vars = canonical_variables(n);
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Word> out;
  do {
    Word w;
    for (auto i : order) w.push_back(vars[i]);
    out.push_back(std::move(w));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::size_t codimension(const SuperAlgebra& a, const Multidegree& n) {
  std::vector<Word> rows;
  return rank(evaluation_matrix(a, n, rows));
}

std::vector<SuperPolynomial> identities(const SuperAlgebra& a, const Multidegree& n) {
  std::vector<Word> rows;
  const Matrix m = evaluation_matrix(a, n, rows);
  // left nullspace of m = nullspace of its transpose
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  Matrix t(cols, Vector(rows.size(), Rational(0)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  std::vector<std::size_t> pivots;
  if (!t.empty()) pivots = gauss_jordan(t);
  std::vector<SuperPolynomial> out;
  for (std::size_t free = 0; free < rows.size(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    SuperPolynomial f(a.mode());
    f.add_term(rows[free], Rational(1));
    for (std::size_t k = 0; k < pivots.size(); ++k) f.add_term(rows[pivots[k]], -t[k][free]);
    out.push_back(std::move(f));
  }
  return out;
}

std::int64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = k % 2 ? 1 : -1;
      p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
    }
  return p[static_cast<std::size_t>(n)];
}

std::int64_t count_standard_fillings(const Partition& lambda) {
  const int n = lambda.size();
  std::int64_t count = 0;
  for (const auto& p : permutations(n)) {
    // p lists the entries row by row
    std::vector<std::vector<int>> grid;
    std::size_t k = 0;
    for (int len : lambda.parts()) {
      std::vector<int> row;
      for (int c = 0; c < len; ++c) row.push_back(p[k++]);
      grid.push_back(row);
    }
    bool ok = true;
    for (std::size_t r = 0; r < grid.size() && ok; ++r)
      for (std::size_t c = 0; c < grid[r].size() && ok; ++c) {
        if (c + 1 < grid[r].size() && grid[r][c] > grid[r][c + 1]) ok = false;
        if (r + 1 < grid.size() && c < grid[r + 1].size() && grid[r][c] > grid[r + 1][c]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

std::vector<Rational> matmul(const std::vector<Rational>& x, const std::vector<Rational>& y, int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<Rational> z(N * N, Rational(0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) z[i * N + j] += x[i * N + k] * y[k * N + j];
  return z;
}

Rational ratio(std::int64_t p, std::int64_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

} // namespace oracle
