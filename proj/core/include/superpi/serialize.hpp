#pragma once

#include "superpi/engine.hpp"
#include "superpi/theorems.hpp"

#include <string>
#include <string_view>

namespace superpi {

inline constexpr std::string_view kSchema = "superpi/1";

/// {"schema", "multidegree", "codim", "mults": [{"lambda", "m"}]}, fields in
/// that order, multiplicities in MultiPartition order. indent < 0 gives a
/// single line.
std::string to_json(const CocharacterReport& r, int indent = -1);

/// Cocharacter fields under "reports" plus "minimal_hooks" and "canonical"
/// as flat [d1,l1,…,d4,l4] arrays.
std::string to_json(const HookReport& r, int indent = -1);

/// Inverses of to_json; throw std::invalid_argument on malformed or
/// wrong-schema input.
CocharacterReport cocharacter_from_json(std::string_view text);
HookReport hook_report_from_json(std::string_view text);

} // namespace superpi
