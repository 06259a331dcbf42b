#pragma once

#include "superpi/combinat.hpp"
#include "superpi/errors.hpp"
#include "superpi/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superpi {

/// Permutation of {1..n} in one-line image notation. Stored 0-based;
/// the public surface speaks 1-based.
class Permutation {
public:
  Permutation() = default;
  /// 1-based images; throws std::invalid_argument unless a bijection.
  explicit Permutation(std::vector<int> images_one_based);

  static Permutation identity(int n);
  /// Product of disjoint or overlapping cycles (1-based), applied right to
  /// left as written.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(map_.size()); }
  /// σ(i), 1-based.
  int operator()(int i) const { return map_[static_cast<std::size_t>(i - 1)] + 1; }
  std::vector<int> images() const;

  /// (σ·τ)(i) = σ(τ(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const noexcept;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> map_;
};

Partition cycle_type(const Permutation& sigma);

/// One representative per cycle type together with the class size; the
/// representative has consecutive cycles in decreasing length.
struct ConjugacyClass {
  Partition type;
  Permutation representative;
  std::int64_t size = 0;
};
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

/// Element of S_⟨n⟩ = S_{n1} × S_{n2} × S_{n3} × S_{n4}.
struct MultiPermutation {
  std::array<Permutation, 4> components;

  static MultiPermutation identity(const Multidegree& n);
  Multidegree degree() const noexcept;
  MultiPermutation operator*(const MultiPermutation& rhs) const;
  MultiPermutation inverse() const;
  std::string to_string() const;

  bool operator==(const MultiPermutation&) const = default;
  auto operator<=>(const MultiPermutation&) const = default;
};

std::array<Partition, 4> cycle_type(const MultiPermutation& sigma);

/// χ_λ on the class with the given cycle type (Murnaghan–Nakayama).
/// Memoized; safe for concurrent callers. Throws SizeMismatch when
/// |λ| != |class|.
std::int64_t character_value(const Partition& lambda, const Partition& cls);
std::int64_t character_value(const Partition& lambda, const Permutation& sigma);

/// Product of the four component character values.
std::int64_t multi_character_value(const MultiPartition& lambda, const std::array<Partition, 4>& cls);
std::int64_t multi_character_value(const MultiPartition& lambda, const MultiPermutation& sigma);

/// Sparse Σ c_g g over a group whose elements are G. Zero coefficients
/// are never stored.
template <class G>
class GroupAlgebraElement {
public:
  using Group = G;
  using Degree = decltype(std::declval<const G&>().degree());

  explicit GroupAlgebraElement(Degree degree) : degree_(degree) {}

  static GroupAlgebraElement unit(Degree degree) {
    GroupAlgebraElement e(degree);
    e.add_term(G::identity(degree), Rational(1));
    return e;
  }
  static GroupAlgebraElement basis(const G& g) {
    GroupAlgebraElement e(g.degree());
    e.add_term(g, Rational(1));
    return e;
  }

  const Degree& degree() const noexcept { return degree_; }
  const std::map<G, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const G& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const G& g, const Rational& c) {
    if (g.degree() != degree_) throw SizeMismatch("group element degree does not match algebra degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs) {
    check(rhs);
    for (const auto& [g, c] : rhs.terms_) add_term(g, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs) {
    check(rhs);
    for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
    return *this;
  }
  GroupAlgebraElement& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
  friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }

  /// Convolution product.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    GroupAlgebraElement out(a.degree_);
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) out.add_term(g * h, c * d);
    return out;
  }

  bool operator==(const GroupAlgebraElement& rhs) const { return degree_ == rhs.degree_ && terms_ == rhs.terms_; }

private:
  void check(const GroupAlgebraElement& rhs) const {
    if (rhs.degree_ != degree_) throw SizeMismatch("group algebra elements of different degree");
  }

  Degree degree_;
  std::map<G, Rational> terms_;
};

using SnElement = GroupAlgebraElement<Permutation>;
using MultiElement = GroupAlgebraElement<MultiPermutation>;

/// Free function form of the convolution product.
template <class G>
GroupAlgebraElement<G> ga_multiply(const GroupAlgebraElement<G>& a, const GroupAlgebraElement<G>& b) {
  return a * b;
}

/// Row stabilizer / column stabilizer of a tableau as subgroup lists.
std::vector<Permutation> row_stabilizer(const Tableau& t);
std::vector<Permutation> column_stabilizer(const Tableau& t);

/// e_T = Σ_{σ ∈ R_T, τ ∈ C_T} sgn(τ) στ.
SnElement essential_idempotent(const Tableau& t);

/// e_{T(1)} ⊗ e_{T(2)} ⊗ e_{T(3)} ⊗ e_{T(4)} in FS_⟨n⟩.
MultiElement multi_essential_idempotent(const MultiTableau& t);

/// E_λ = Σ_σ χ_λ(σ) σ over all of S_n.
SnElement central_idempotent(const Partition& lambda);
MultiElement multi_central_idempotent(const MultiPartition& lambda);

/// Outer tensor product of four S_{n_i} elements.
MultiElement tensor(const std::array<SnElement, 4>& parts);

/// Places an S_{n_i} element in component i (0-based) of FS_⟨n⟩, identities
/// elsewhere.
MultiElement embed(const SnElement& a, int component, const Multidegree& n);

/// ⟨σ⟩ a ⟨σ⟩⁻¹.
template <class G>
GroupAlgebraElement<G> conjugate(const GroupAlgebraElement<G>& a, const G& g) {
  GroupAlgebraElement<G> out(a.degree());
  const G gi = g.inverse();
  for (const auto& [h, c] : a.terms()) out.add_term(g * h * gi, c);
  return out;
}

/// Σ_λ (d_λ / n!) E_λ == identity in FS_n. Materializes FS_n, so n must be
/// at most max_n (ResourceLimitExceeded otherwise).
bool decompose_check(int n, int max_n = 5);

} // namespace superpi
