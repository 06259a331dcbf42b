#include "superpi/freealg.hpp"

#include "superpi/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superpi {

std::string to_string(Mode m) { return m == Mode::Superinvolution ? "superinvolution" : "graded_involution"; }

Mode parse_mode(std::string_view text) {
  if (text == "superinvolution") return Mode::Superinvolution;
  if (text == "graded_involution") return Mode::GradedInvolution;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::string_view token(VarType t) noexcept {
  switch (t) {
  case VarType::Y0: return "y0";
  case VarType::Z0: return "z0";
  case VarType::Y1: return "y1";
  case VarType::Z1: return "z1";
  }
  return "?";
}

std::string Variable::to_string() const { return std::string(token(type)) + "_" + std::to_string(index); }

bool WordLess::operator()(const Word& a, const Word& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += w[i].to_string();
  }
  return s;
}

std::pair<int, Word> sharp(const Word& w, Mode mode) {
  int s = 0;
  int t = 0;
  for (const auto& v : w) {
    s += parity(v.type);
    t += is_skew(v.type) ? 1 : 0;
  }
  int exponent = t;
  if (mode == Mode::Superinvolution) exponent += s * (s - 1) / 2;
  return {exponent % 2 ? -1 : 1, Word(w.rbegin(), w.rend())};
}

SuperPolynomial SuperPolynomial::variable(Variable v, Mode mode) { return monomial(Word{v}, mode); }

SuperPolynomial SuperPolynomial::monomial(Word w, Mode mode, Rational c) {
  SuperPolynomial p(mode);
  p.add_term(w, c);
  return p;
}

Rational SuperPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperPolynomial::check_mode(const SuperPolynomial& rhs) const {
  if (rhs.mode_ != mode_) throw SizeMismatch("cannot mix superinvolution and graded-involution polynomials");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& rhs) {
  check_mode(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& rhs) {
  check_mode(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial p = *this;
  return p *= Rational(-1);
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  a.check_mode(b);
  SuperPolynomial out(a.mode_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, c * d);
    }
  return out;
}

std::vector<Variable> SuperPolynomial::variables() const {
  std::set<Variable> vars;
  for (const auto& [w, c] : terms_) vars.insert(w.begin(), w.end());
  return {vars.begin(), vars.end()};
}

bool SuperPolynomial::is_multilinear() const {
  std::optional<std::vector<Variable>> common;
  for (const auto& [w, c] : terms_) {
    std::vector<Variable> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!common) common = sorted;
    else if (*common != sorted) return false;
  }
  return true;
}

bool SuperPolynomial::is_multihomogeneous() const {
  std::optional<std::vector<Variable>> common;
  for (const auto& [w, c] : terms_) {
    std::vector<Variable> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (!common) common = sorted;
    else if (*common != sorted) return false;
  }
  return true;
}

Multidegree SuperPolynomial::multidegree() const {
  Multidegree n{0, 0, 0, 0};
  for (const auto& v : variables()) ++n[static_cast<std::size_t>(index_of(v.type))];
  return n;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    if (mag != 1) s += superpi::to_string(mag) + "*";
    s += superpi::to_string(w);
  }
  return s;
}

SuperPolynomial sharp_poly(const SuperPolynomial& f) {
  SuperPolynomial out(f.mode());
  for (const auto& [w, c] : f.terms()) {
    auto [sign, rev] = sharp(w, f.mode());
    out.add_term(rev, sign > 0 ? c : Rational(-c));
  }
  return out;
}

std::vector<Variable> canonical_variables(const Multidegree& n) {
  std::vector<Variable> out;
  for (VarType t : kAllVarTypes)
    for (int j = 1; j <= n[static_cast<std::size_t>(index_of(t))]; ++j) out.push_back({t, j});
  return out;
}

SuperPolynomial act(const MultiPermutation& sigma, const SuperPolynomial& f) {
  const Multidegree n = sigma.degree();
  SuperPolynomial out(f.mode());
  for (const auto& [w, c] : f.terms()) {
    Word img;
    img.reserve(w.size());
    for (const auto& v : w) {
      const auto comp = static_cast<std::size_t>(index_of(v.type));
      if (v.index < 1 || v.index > n[comp])
        throw SizeMismatch("act: variable " + v.to_string() + " outside the canonical set of " + superpi::to_string(n));
      img.push_back({v.type, sigma.components[comp](v.index)});
    }
    out.add_term(img, c);
  }
  return out;
}

SuperPolynomial ga_act(const MultiElement& a, const SuperPolynomial& f) {
  SuperPolynomial out(f.mode());
  for (const auto& [g, c] : a.terms()) {
    auto moved = act(g, f);
    moved *= c;
    out += moved;
  }
  return out;
}

SuperPolynomial rename(const SuperPolynomial& f, const std::map<Variable, Variable>& mapping) {
  SuperPolynomial out(f.mode());
  for (const auto& [w, c] : f.terms()) {
    Word img = w;
    for (auto& v : img) {
      auto it = mapping.find(v);
      if (it != mapping.end()) v = it->second;
    }
    out.add_term(img, c);
  }
  return out;
}

SuperPolynomial substitute(const SuperPolynomial& f, const std::map<Variable, SuperPolynomial>& mapping) {
  SuperPolynomial out(f.mode());
  for (const auto& [w, c] : f.terms()) {
    SuperPolynomial prod = SuperPolynomial::monomial(Word{}, f.mode(), c);
    for (const auto& v : w) {
      auto it = mapping.find(v);
      prod = prod * (it == mapping.end() ? SuperPolynomial::variable(v, f.mode()) : it->second);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

SuperPolynomial standard_poly(const std::vector<Variable>& vars, Mode mode) {
  const auto k = static_cast<int>(vars.size());
  if (k < 1) throw std::invalid_argument("standard polynomial needs k >= 1");
  SuperPolynomial out(mode);
  for (const auto& s : all_permutations(k)) {
    Word w;
    for (int i = 1; i <= k; ++i) w.push_back(vars[static_cast<std::size_t>(s(i) - 1)]);
    out.add_term(w, Rational(s.sign()));
  }
  return out;
}

SuperPolynomial standard_poly(const std::vector<VarType>& types, Mode mode) {
  std::vector<Variable> vars;
  for (std::size_t j = 0; j < types.size(); ++j) vars.push_back({types[j], static_cast<int>(j) + 1});
  return standard_poly(vars, mode);
}

SuperPolynomial standard_poly(int k, VarType type, Mode mode) {
  return standard_poly(std::vector<VarType>(static_cast<std::size_t>(std::max(k, 0)), type), mode);
}

SuperPolynomial poly_power(const SuperPolynomial& f, int m) {
  if (m < 1) throw std::invalid_argument("poly_power needs m >= 1");
  SuperPolynomial out = f;
  for (int i = 1; i < m; ++i) out = out * f;
  return out;
}

FreshIndices::FreshIndices(const SuperPolynomial& f) : FreshIndices() {
  for (const auto& v : f.variables()) reserve_past(v);
}

Variable FreshIndices::next(VarType t) {
  auto& slot = next_[static_cast<std::size_t>(index_of(t))];
  return {t, slot++};
}

void FreshIndices::reserve_past(const Variable& v) {
  auto& slot = next_[static_cast<std::size_t>(index_of(v.type))];
  slot = std::max(slot, v.index + 1);
}

SuperPolynomial multilinearize(const SuperPolynomial& f, FreshIndices& fresh) {
  if (!f.is_multihomogeneous()) throw std::invalid_argument("multilinearize: input is not multihomogeneous");
  if (f.is_zero()) return f;
  SuperPolynomial cur = f;
  for (const auto& v : f.variables()) {
    const Word& sample = cur.terms().begin()->first;
    const auto m = static_cast<int>(std::count(sample.begin(), sample.end(), v));
    if (m <= 1) continue;
    std::vector<Variable> copies{v};
    for (int i = 1; i < m; ++i) copies.push_back(fresh.next(v.type));
    SuperPolynomial next(f.mode());
    std::vector<int> order(static_cast<std::size_t>(m));
    for (const auto& [w, c] : cur.terms()) {
      std::iota(order.begin(), order.end(), 0);
      do {
        Word img = w;
        int k = 0;
        for (auto& x : img)
          if (x == v) x = copies[static_cast<std::size_t>(order[static_cast<std::size_t>(k++)])];
        next.add_term(img, c);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    cur = std::move(next);
  }
  return cur;
}

SuperPolynomial multilinearize(const SuperPolynomial& f) {
  FreshIndices fresh(f);
  return multilinearize(f, fresh);
}

SuperPolynomial amitsur_poly(VarType special, int d, int l, const std::vector<FrameSlot>& frame, Mode mode) {
  if (d < 0 || l < 0) throw std::invalid_argument("amitsur_poly: negative rank");
  const int k = (d + 1) * (l + 1);
  if (static_cast<int>(frame.size()) != k + 1)
    throw SizeMismatch("amitsur_poly: frame must have k+1 = " + std::to_string(k + 1) + " slots");
  const Partition rect(std::vector<int>(static_cast<std::size_t>(d + 1), l + 1));
  auto slot = [&](int j) -> std::optional<Variable> {
    const auto& s = frame[static_cast<std::size_t>(j - 1)];
    if (!s) return std::nullopt;
    return Variable{*s, k + j};
  };
  SuperPolynomial out(mode);
  for (const auto& s : all_permutations(k)) {
    const auto chi = character_value(rect, s);
    if (chi == 0) continue;
    Word w;
    for (int j = 1; j <= k; ++j) {
      if (auto x = slot(j)) w.push_back(*x);
      w.push_back({special, s(j)});
    }
    if (auto x = slot(k + 1)) w.push_back(*x);
    out.add_term(w, Rational(chi));
  }
  return out;
}

} // namespace superpi
