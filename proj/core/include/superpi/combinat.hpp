#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace superpi {

/// Weakly decreasing list of positive parts. The zero partition is the
/// empty list.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part, 0-based; 0 past the end.
  int part(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// Cellwise diagram containment: other ⊆ *this.
  bool contains(const Partition& other) const noexcept;
  Partition conjugate() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  /// Reverse-lexicographic: (3) < (2,1) < (1,1,1), matching enumeration order.
  std::strong_ordering operator<=>(const Partition& other) const noexcept;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Multidegree = std::array<int, 4>;

int total(const Multidegree& n) noexcept;
std::string to_string(const Multidegree& n);

struct MultiPartition {
  std::array<Partition, 4> components;

  Multidegree multidegree() const noexcept;
  std::string to_string() const;

  bool operator==(const MultiPartition&) const = default;
  auto operator<=>(const MultiPartition&) const = default;
};

/// A filling of a Young diagram with 1..n, stored row by row.
class Tableau {
public:
  Tableau() = default;
  /// Throws std::invalid_argument unless entries are a bijection onto 1..n.
  Tableau(Partition shape, std::vector<int> entries);

  /// Row-reading filling 1..n.
  static Tableau row_reading(const Partition& shape);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int size() const noexcept { return shape_.size(); }

  int at(int row, int col) const;
  std::vector<std::vector<int>> rows() const;
  std::vector<std::vector<int>> columns() const;
  bool is_standard() const;

  /// Entry-wise relabelling i -> images[i-1]; images is a 1-based one-line
  /// permutation of length n.
  Tableau relabel(const std::vector<int>& images) const;

  bool operator==(const Tableau&) const = default;

private:
  Partition shape_;
  std::vector<int> entries_;
};

struct MultiTableau {
  std::array<Tableau, 4> components;

  MultiPartition shape() const;
  static MultiTableau row_reading(const MultiPartition& shape);
};

/// Hook H(d,l): partitions whose (d+1)-th part is at most l.
struct HookSpec {
  int d = 0;
  int l = 0;
  bool operator==(const HookSpec&) const = default;
  auto operator<=>(const HookSpec&) const = default;
};

/// Quadruple hook ⟨d,l⟩ = (d1,l1; d2,l2; d3,l3; d4,l4).
struct QuadHookSpec {
  std::array<HookSpec, 4> pairs;

  std::array<int, 8> flat() const noexcept;
  std::string to_string() const;
  bool operator==(const QuadHookSpec&) const = default;
  auto operator<=>(const QuadHookSpec&) const = default;
};

/// All partitions of n in reverse-lexicographic order; {()} for n = 0.
std::vector<Partition> partitions_of(int n);
/// Number of partitions of n.
std::int64_t partition_count(int n);

/// Cartesian product of the component partition lists, first component
/// varying slowest.
std::vector<MultiPartition> multipartitions_of(const Multidegree& n);

bool hook_contains(const HookSpec& h, const Partition& lambda) noexcept;
bool quad_hook_contains(const QuadHookSpec& h, const MultiPartition& lambda) noexcept;

/// Standard Young tableaux of the shape, in lexicographic order of their
/// row-major entry lists.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Degree of the irreducible S_n character, by the hook-length formula.
std::int64_t character_degree(const Partition& lambda);
std::int64_t multi_character_degree(const MultiPartition& lambda);

std::int64_t factorial(int n);
/// n! / (n1! n2! n3! n4!).
std::int64_t multinomial(const Multidegree& n);

/// All multidegrees with the given total, lexicographically decreasing
/// ((n,0,0,0) first).
std::vector<Multidegree> compositions_of(int n);

} // namespace superpi
