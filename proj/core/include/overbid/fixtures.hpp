#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "overbid/scenario.hpp"

namespace overbid::fixtures {

/// Two consumers (C1, C2), two suppliers (S1, S2), three LNG delivery
/// points. Overbidding facilitates trade here.
Scenario scenario_one();

/// Same topology with different capacities and costs. Uniform overbidding
/// collapses the contracted quantity here.
Scenario scenario_two();

/// Looks up "scenario1" / "scenario2".
std::optional<Scenario> builtin(std::string_view name);
std::vector<std::string_view> builtin_names();

}  // namespace overbid::fixtures
