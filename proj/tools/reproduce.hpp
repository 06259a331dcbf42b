#pragma once

#include "superpi/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace superpi::cli {

struct Check {
  std::string quantity;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct ReproduceReport {
  std::string name;
  std::vector<Check> checks;

  bool ok() const noexcept;
};

/// Names of the embedded fixtures, in a fixed order.
const std::vector<std::string>& fixture_names();
std::string_view fixture_text(std::string_view name);

/// Recomputes every quantity listed in the named fixture and diffs it
/// against the stored value. Throws std::invalid_argument for an unknown
/// name.
ReproduceReport reproduce(std::string_view name, const EngineOptions& opts);

} // namespace superpi::cli
