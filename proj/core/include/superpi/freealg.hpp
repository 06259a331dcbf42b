#pragma once

#include "superpi/combinat.hpp"
#include "superpi/rational.hpp"
#include "superpi/symgroup.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superpi {

/// Sign rule of the involution: superinvolution picks up (−1)^{s(s−1)/2}
/// from the s odd letters, graded involution does not.
enum class Mode { Superinvolution, GradedInvolution };

std::string to_string(Mode m);
Mode parse_mode(std::string_view text);

/// Y0 even symmetric, Z0 even skew, Y1 odd symmetric, Z1 odd skew.
/// The enumerator value is the component index 0..3.
enum class VarType { Y0 = 0, Z0 = 1, Y1 = 2, Z1 = 3 };

inline constexpr std::array<VarType, 4> kAllVarTypes{VarType::Y0, VarType::Z0, VarType::Y1, VarType::Z1};

constexpr int index_of(VarType t) noexcept { return static_cast<int>(t); }
constexpr int parity(VarType t) noexcept { return t == VarType::Y1 || t == VarType::Z1 ? 1 : 0; }
constexpr bool is_skew(VarType t) noexcept { return t == VarType::Z0 || t == VarType::Z1; }
std::string_view token(VarType t) noexcept; // "y0", "z0", "y1", "z1"

struct Variable {
  VarType type = VarType::Y0;
  int index = 1;

  std::string to_string() const;
  bool operator==(const Variable&) const = default;
  auto operator<=>(const Variable&) const = default;
};

using Word = std::vector<Variable>;

/// Orders words by length, then letter by letter.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const noexcept;
};

std::string to_string(const Word& w);

/// (sign, reversed word) with w^# = sign · reversed.
std::pair<int, Word> sharp(const Word& w, Mode mode);

/// Element of the free #-superalgebra: sparse exact combination of words.
class SuperPolynomial {
public:
  using Terms = std::map<Word, Rational, WordLess>;

  explicit SuperPolynomial(Mode mode = Mode::Superinvolution) : mode_(mode) {}
  static SuperPolynomial variable(Variable v, Mode mode);
  static SuperPolynomial monomial(Word w, Mode mode, Rational c = Rational(1));

  Mode mode() const noexcept { return mode_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& c);

  SuperPolynomial& operator+=(const SuperPolynomial& rhs);
  SuperPolynomial& operator-=(const SuperPolynomial& rhs);
  SuperPolynomial& operator*=(const Rational& s);
  SuperPolynomial operator-() const;

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(SuperPolynomial a, const Rational& s) { return a *= s; }
  friend SuperPolynomial operator*(const Rational& s, SuperPolynomial a) { return a *= s; }
  /// Concatenation product. Throws SizeMismatch on mixed modes.
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);

  /// Sorted distinct variables occurring anywhere.
  std::vector<Variable> variables() const;
  /// Every word uses each of its variables exactly once and all words use
  /// the same variable set.
  bool is_multilinear() const;
  /// Every variable occurs the same number of times in every word.
  bool is_multihomogeneous() const;
  /// Per-type counts of the variable set (meaningful when multilinear).
  Multidegree multidegree() const;

  /// Canonical text: terms in WordLess order, explicit '*'.
  std::string to_string() const;

  bool operator==(const SuperPolynomial& rhs) const { return mode_ == rhs.mode_ && terms_ == rhs.terms_; }

private:
  void check_mode(const SuperPolynomial& rhs) const;

  Mode mode_;
  Terms terms_;
};

/// Linear extension of the involution on words.
SuperPolynomial sharp_poly(const SuperPolynomial& f);

/// Canonical variables of P_⟨n⟩ in order y0_1..y0_n1, z0_.., y1_.., z1_...
std::vector<Variable> canonical_variables(const Multidegree& n);

/// Re-indexing action: every y_{i,j} of component i becomes y_{i,σ_i(j)}.
/// Throws SizeMismatch if f uses a variable outside the canonical set of
/// ⟨σ⟩'s multidegree.
SuperPolynomial act(const MultiPermutation& sigma, const SuperPolynomial& f);
SuperPolynomial ga_act(const MultiElement& a, const SuperPolynomial& f);

/// Substitutes variables by variables (identification of letters).
SuperPolynomial rename(const SuperPolynomial& f, const std::map<Variable, Variable>& mapping);

/// Replaces each variable by a polynomial (missing keys are kept).
SuperPolynomial substitute(const SuperPolynomial& f, const std::map<Variable, SuperPolynomial>& mapping);

/// St_k on variables of one type with indices 1..k.
SuperPolynomial standard_poly(int k, VarType type, Mode mode);
/// St_k where the j-th argument is the variable of type types[j], index j+1.
SuperPolynomial standard_poly(const std::vector<VarType>& types, Mode mode);
/// St_k evaluated on the given distinct variables.
SuperPolynomial standard_poly(const std::vector<Variable>& vars, Mode mode);

/// m-fold product in the free algebra.
SuperPolynomial poly_power(const SuperPolynomial& f, int m);

/// Next unused index per variable type; handed in by callers so fresh
/// names are deterministic.
class FreshIndices {
public:
  FreshIndices() { next_.fill(1); }
  /// Starts past every index used by f.
  explicit FreshIndices(const SuperPolynomial& f);
  Variable next(VarType t);
  void reserve_past(const Variable& v);

private:
  std::array<int, 4> next_;
};

/// Full polarization. A variable occurring m > 1 times is replaced by
/// itself plus m − 1 fresh copies, summed over all assignments of copies to
/// occurrences. Throws std::invalid_argument on non-multihomogeneous input.
SuperPolynomial multilinearize(const SuperPolynomial& f, FreshIndices& fresh);
SuperPolynomial multilinearize(const SuperPolynomial& f);

/// One slot x_j of an Amitsur frame: a fresh variable type, or nullopt for
/// x_j = 1 (the slot is omitted).
using FrameSlot = std::optional<VarType>;

/// Σ_{σ ∈ S_k} χ_λ̂(σ) x_1 a_{σ(1)} x_2 … x_k a_{σ(k)} x_{k+1} with
/// λ̂ = ((l+1)^{d+1}), k = (d+1)(l+1), special variables a of the given type
/// (indices 1..k) and slot j's variable, if any, of index k + j.
SuperPolynomial amitsur_poly(VarType special, int d, int l, const std::vector<FrameSlot>& frame, Mode mode);

/// Recursive-descent parser for the polynomial grammar; throws ParseError
/// with a byte position.
SuperPolynomial parse(std::string_view text, Mode mode);

} // namespace superpi
