#pragma once

#include "superpi/algebras.hpp"
#include "superpi/combinat.hpp"
#include "superpi/engine.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace superpi {

struct HookReport {
  int max_degree = 0;
  std::vector<CocharacterReport> reports; // every ⟨n⟩ with 1 ≤ Σn_i ≤ N
  std::vector<QuadHookSpec> minimal_hooks; // Pareto set, sorted by flat()
  std::optional<QuadHookSpec> canonical;   // lexicographically least member

  bool operator==(const HookReport&) const = default;
};

/// Cocharacters up to total degree N and the componentwise-minimal
/// quadruple hooks containing every ⟨λ⟩ with m_⟨λ⟩ > 0.
HookReport hook_report(const SuperAlgebra& a, int max_degree, const EngineOptions& opts = {});

/// Pareto-minimal hooks (d, l) for one component: the corner points of the
/// staircase l(d) = max λ_{d+1} over the observed partitions.
std::vector<HookSpec> minimal_hooks(const std::vector<Partition>& observed);

/// Pairs (k_i, m_i), one per variable type.
using StandardPowerSpec = std::array<std::pair<int, int>, 4>;

/// St_{k_i}^{m_i} in type-i variables is an identity, per type.
std::array<bool, 4> check_standard_powers(const SuperAlgebra& a, const StandardPowerSpec& spec,
                                          const EngineOptions& opts = {});

/// e_T (x_1 … x_{km}) for the rectangle (m^k) whose i-th row holds
/// i, k+i, …, (m−1)k+i, after identifying x_{jk+i} with x_i, equals
/// (m!)^k St_k^m(x_1, …, x_k). Requires km ≤ 8.
bool lemma_identification_check(int k, int m);

struct AmitsurResult {
  bool holds = true;
  int component = 0; // 1-based witness component when !holds
  std::vector<FrameSlot> frame;
};

/// Every Amitsur polynomial of the given rank, over all 5^{k_i+1} frames
/// (slots omitted first), is an identity of A.
AmitsurResult amitsur_check(const SuperAlgebra& a, const QuadHookSpec& rank, const EngineOptions& opts = {});

struct AmitsurEquivalence {
  bool amitsur = false;
  bool hook_contained = false; // all cocharacters up to N lie in the hook
  bool agree() const noexcept { return amitsur == hook_contained; }
};

AmitsurEquivalence amitsur_equivalence_check(const SuperAlgebra& a, const QuadHookSpec& rank, int max_degree,
                                             const EngineOptions& opts = {});

} // namespace superpi
