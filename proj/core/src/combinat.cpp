#include "superpi/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace superpi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; c < part(0); ++c) {
    int h = 0;
    while (h < length() && part(h) > c) ++h;
    out.push_back(h);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::strong_ordering Partition::operator<=>(const Partition& other) const noexcept {
  if (size_ != other.size_) return size_ <=> other.size_;
  // larger lexicographic comes first
  return std::lexicographical_compare_three_way(other.parts_.begin(), other.parts_.end(), parts_.begin(),
                                                parts_.end());
}

int total(const Multidegree& n) noexcept { return n[0] + n[1] + n[2] + n[3]; }

std::string to_string(const Multidegree& n) {
  return "(" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]) + "," +
         std::to_string(n[3]) + ")";
}

Multidegree MultiPartition::multidegree() const noexcept {
  return {components[0].size(), components[1].size(), components[2].size(), components[3].size()};
}

std::string MultiPartition::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += components[static_cast<std::size_t>(i)].empty() ? "∅" : components[static_cast<std::size_t>(i)].to_string();
  }
  return s + ")";
}

Tableau::Tableau(Partition shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto n = static_cast<std::size_t>(shape_.size());
  if (entries_.size() != n) throw std::invalid_argument("tableau entry count does not match shape");
  std::vector<bool> seen(n + 1, false);
  for (int e : entries_) {
    if (e < 1 || static_cast<std::size_t>(e) > n || seen[static_cast<std::size_t>(e)])
      throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
    seen[static_cast<std::size_t>(e)] = true;
  }
}

Tableau Tableau::row_reading(const Partition& shape) {
  std::vector<int> e(static_cast<std::size_t>(shape.size()));
  std::iota(e.begin(), e.end(), 1);
  return Tableau(shape, std::move(e));
}

int Tableau::at(int row, int col) const {
  int offset = 0;
  for (int r = 0; r < row; ++r) offset += shape_.part(r);
  return entries_[static_cast<std::size_t>(offset + col)];
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out;
  std::size_t k = 0;
  for (int len : shape_.parts()) {
    out.emplace_back(entries_.begin() + static_cast<std::ptrdiff_t>(k),
                     entries_.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(len)));
    k += static_cast<std::size_t>(len);
  }
  return out;
}

std::vector<std::vector<int>> Tableau::columns() const {
  auto r = rows();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.part(0)));
  for (const auto& row : r)
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  return out;
}

bool Tableau::is_standard() const {
  auto r = rows();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t c = 0; c < r[i].size(); ++c) {
      if (c + 1 < r[i].size() && r[i][c] > r[i][c + 1]) return false;
      if (i + 1 < r.size() && c < r[i + 1].size() && r[i][c] > r[i + 1][c]) return false;
    }
  return true;
}

Tableau Tableau::relabel(const std::vector<int>& images) const {
  if (images.size() != entries_.size()) throw std::invalid_argument("relabelling degree mismatch");
  std::vector<int> e;
  e.reserve(entries_.size());
  for (int x : entries_) e.push_back(images[static_cast<std::size_t>(x - 1)]);
  return Tableau(shape_, std::move(e));
}

MultiPartition MultiTableau::shape() const {
  return {{components[0].shape(), components[1].shape(), components[2].shape(), components[3].shape()}};
}

MultiTableau MultiTableau::row_reading(const MultiPartition& shape) {
  MultiTableau t;
  for (std::size_t i = 0; i < 4; ++i) t.components[i] = Tableau::row_reading(shape.components[i]);
  return t;
}

std::array<int, 8> QuadHookSpec::flat() const noexcept {
  std::array<int, 8> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    out[2 * i] = pairs[i].d;
    out[2 * i + 1] = pairs[i].l;
  }
  return out;
}

std::string QuadHookSpec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ";";
    s += std::to_string(pairs[i].d) + "," + std::to_string(pairs[i].l);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

std::vector<MultiPartition> multipartitions_of(const Multidegree& n) {
  std::array<std::vector<Partition>, 4> lists;
  for (std::size_t i = 0; i < 4; ++i) lists[i] = partitions_of(n[i]);
  std::vector<MultiPartition> out;
  for (const auto& a : lists[0])
    for (const auto& b : lists[1])
      for (const auto& c : lists[2])
        for (const auto& d : lists[3]) out.push_back({{a, b, c, d}});
  return out;
}

bool hook_contains(const HookSpec& h, const Partition& lambda) noexcept { return lambda.part(h.d) <= h.l; }

bool quad_hook_contains(const QuadHookSpec& h, const MultiPartition& lambda) noexcept {
  for (std::size_t i = 0; i < 4; ++i)
    if (!hook_contains(h.pairs[i], lambda.components[i])) return false;
  return true;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  // Place 1..n one at a time onto an outer corner of the growing shape.
  const int n = lambda.size();
  const int rows = lambda.length();
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
  std::vector<Tableau> out;
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      std::vector<int> e;
      for (const auto& r : grid) e.insert(e.end(), r.begin(), r.end());
      out.emplace_back(lambda, std::move(e));
      return;
    }
    for (int r = 0; r < rows; ++r) {
      auto& row = grid[static_cast<std::size_t>(r)];
      const auto len = static_cast<int>(row.size());
      if (len >= lambda.part(r)) continue;
      if (r > 0 && static_cast<int>(grid[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
      row.push_back(next);
      place(next + 1);
      row.pop_back();
    }
  };
  place(1);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.entries() < b.entries(); });
  return out;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument outside 0..20");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t character_degree(const Partition& lambda) {
  const int n = lambda.size();
  if (n > 20) throw std::out_of_range("character_degree: n > 20");
  auto conj = lambda.conjugate();
  // multiply/divide alternately over a running gcd to stay in range
  std::int64_t num = factorial(n);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) {
      const std::int64_t hook = (lambda.part(i) - j) + (conj.part(j) - i) - 1;
      num /= hook;
    }
  return num;
}

std::int64_t multi_character_degree(const MultiPartition& lambda) {
  std::int64_t d = 1;
  for (const auto& p : lambda.components) d *= character_degree(p);
  return d;
}

std::int64_t multinomial(const Multidegree& n) {
  std::int64_t r = factorial(total(n));
  for (int k : n) r /= factorial(k);
  return r;
}

std::vector<Multidegree> compositions_of(int n) {
  std::vector<Multidegree> out;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b)
      for (int c = n - a - b; c >= 0; --c) out.push_back({a, b, c, n - a - b - c});
  return out;
}

} // namespace superpi
