#include "superpi/theorems.hpp"

#include "superpi/errors.hpp"
#include "superpi/freealg.hpp"
#include "superpi/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace superpi {

std::vector<HookSpec> minimal_hooks(const std::vector<Partition>& observed) {
  int depth = 0;
  for (const auto& p : observed) depth = std::max(depth, p.length());
  std::vector<HookSpec> out;
  int prev = -1;
  for (int d = 0; d <= depth; ++d) {
    int l = 0;
    for (const auto& p : observed) l = std::max(l, p.part(d));
    if (d == 0 || l < prev) out.push_back({d, l});
    prev = l;
  }
  return out;
}

HookReport hook_report(const SuperAlgebra& a, int max_degree, const EngineOptions& opts) {
  if (max_degree < 0) throw std::invalid_argument("hook_report: negative degree");
  HookReport rep;
  rep.max_degree = max_degree;
  if (max_degree == 0) return rep;
  std::array<std::vector<Partition>, 4> observed;
  for (int n = 1; n <= max_degree; ++n)
    for (const auto& m : compositions_of(n)) {
      rep.reports.push_back(cocharacter(a, m, opts));
      for (const auto& [lambda, mult] : rep.reports.back().mults)
        for (std::size_t i = 0; i < 4; ++i) observed[i].push_back(lambda.components[i]);
    }
  std::array<std::vector<HookSpec>, 4> per;
  for (std::size_t i = 0; i < 4; ++i) per[i] = minimal_hooks(observed[i]);
  for (const auto& h0 : per[0])
    for (const auto& h1 : per[1])
      for (const auto& h2 : per[2])
        for (const auto& h3 : per[3]) rep.minimal_hooks.push_back({{h0, h1, h2, h3}});
  std::sort(rep.minimal_hooks.begin(), rep.minimal_hooks.end(),
            [](const QuadHookSpec& x, const QuadHookSpec& y) { return x.flat() < y.flat(); });
  rep.canonical = rep.minimal_hooks.front();
  return rep;
}

std::array<bool, 4> check_standard_powers(const SuperAlgebra& a, const StandardPowerSpec& spec,
                                          const EngineOptions& opts) {
  std::array<bool, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [k, m] = spec[i];
    if (k < 1 || m < 1) throw std::invalid_argument("standard powers need k, m >= 1");
    const auto f = poly_power(standard_poly(k, kAllVarTypes[i], a.mode()), m);
    out[i] = is_identity_general(f, a, opts);
  }
  return out;
}

bool lemma_identification_check(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("lemma_identification_check: k, m must be positive");
  if (k * m > 8)
    throw ResourceLimitExceeded("symbolic expansion over S_" + std::to_string(k * m), k * m, 8);
  const int n = k * m;
  std::vector<int> entries;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < m; ++j) entries.push_back(j * k + i);
  const Tableau t(Partition(std::vector<int>(static_cast<std::size_t>(k), m)), entries);
  const MultiElement e = embed(essential_idempotent(t), 0, {n, 0, 0, 0});

  const Mode mode = Mode::GradedInvolution;
  const auto vars = canonical_variables({n, 0, 0, 0});
  const auto lhs_full = ga_act(e, SuperPolynomial::monomial(vars, mode));
  std::map<Variable, Variable> ident;
  for (int j = 0; j < m; ++j)
    for (int i = 1; i <= k; ++i) ident[{VarType::Y0, j * k + i}] = {VarType::Y0, i};
  const auto lhs = rename(lhs_full, ident);

  Rational scale = 1;
  for (int i = 0; i < k; ++i) scale *= Rational(static_cast<long>(factorial(m)));
  const auto rhs = poly_power(standard_poly(k, VarType::Y0, mode), m) * scale;
  return lhs == rhs;
}

AmitsurResult amitsur_check(const SuperAlgebra& a, const QuadHookSpec& rank, const EngineOptions& opts) {
  static constexpr std::array<FrameSlot, 5> kChoices{std::nullopt, VarType::Y0, VarType::Z0, VarType::Y1,
                                                     VarType::Z1};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [d, l] = rank.pairs[i];
    if (d < 0 || l < 0) throw std::invalid_argument("amitsur_check: negative rank");
    const int k = (d + 1) * (l + 1);
    const double frames = std::pow(5.0, k + 1);
    const double predicted = frames * static_cast<double>(factorial(std::min(k, 20)));
    if (predicted > opts.max_entries)
      throw ResourceLimitExceeded("Amitsur frames for component " + std::to_string(i + 1), predicted,
                                  opts.max_entries);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [d, l] = rank.pairs[i];
    const int k = (d + 1) * (l + 1);
    std::vector<std::size_t> digit(static_cast<std::size_t>(k + 1), 0);
    std::vector<FrameSlot> frame(digit.size());
    for (;;) {
      for (std::size_t j = 0; j < digit.size(); ++j) frame[j] = kChoices[digit[j]];
      const auto f = amitsur_poly(kAllVarTypes[i], d, l, frame, a.mode());
      if (!is_identity(f, a, opts)) return {false, static_cast<int>(i) + 1, frame};
      std::size_t j = 0;
      for (; j < digit.size(); ++j) {
        if (++digit[j] < kChoices.size()) break;
        digit[j] = 0;
      }
      if (j == digit.size()) break;
    }
  }
  return {};
}

AmitsurEquivalence amitsur_equivalence_check(const SuperAlgebra& a, const QuadHookSpec& rank, int max_degree,
                                             const EngineOptions& opts) {
  AmitsurEquivalence out;
  out.amitsur = amitsur_check(a, rank, opts).holds;
  out.hook_contained = true;
  for (int n = 1; n <= max_degree && out.hook_contained; ++n)
    for (const auto& m : compositions_of(n)) {
      for (const auto& [lambda, mult] : cocharacter(a, m, opts).mults)
        if (!quad_hook_contains(rank, lambda)) out.hook_contained = false;
      if (!out.hook_contained) break;
    }
  return out;
}

} // namespace superpi
