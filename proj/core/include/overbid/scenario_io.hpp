#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "overbid/scenario.hpp"

namespace overbid {

/// Malformed scenario document: bad JSON, missing keys or wrong types.
/// Invariant violations are not reported here; see validate().
class ScenarioFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the scenario JSON schema:
///   { "name": str, "delivery_points": [str...],
///     "consumers": [{ "id", "qr", "u", "qbar": [..], "ct": [..] }...],
///     "suppliers": [{ "id", "qa", "cp", "qbar": [..], "ct": [..] }...] }
/// Per-DP arrays are positionally aligned with "delivery_points".
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// Serializes to the same schema (pretty-printed, two-space indent).
std::string scenario_to_json(const Scenario& scenario);

}  // namespace overbid
