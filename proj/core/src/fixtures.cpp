#include "overbid/fixtures.hpp"

namespace overbid::fixtures {

Scenario scenario_one() {
  Scenario sc;
  sc.name = "scenario1";
  sc.dp_names = {"DP1", "DP2", "DP3"};
  sc.consumers = {
      {"C1", 400.0, 25.0, {30.0, 140.0, 400.0}, {1.1, 3.3, 2.0}},
      {"C2", 200.0, 25.0, {50.0, 40.0, 120.0}, {3.6, 1.7, 2.0}},
  };
  sc.suppliers = {
      {"S1", 200.0, 5.0, {121.0, 446.0, 526.0}, {6.0, 6.6, 6.1}},
      {"S2", 250.0, 7.8, {121.0, 446.0, 526.0}, {8.0, 6.1, 8.3}},
  };
  return sc;
}

Scenario scenario_two() {
  Scenario sc;
  sc.name = "scenario2";
  sc.dp_names = {"DP1", "DP2", "DP3"};
  sc.consumers = {
      {"C1", 320.0, 25.0, {234.0, 257.0, 121.0}, {1.6, 1.5, 1.3}},
      {"C2", 150.0, 25.0, {294.0, 35.0, 155.0}, {2.1, 3.1, 2.7}},
  };
  sc.suppliers = {
      {"S1", 240.0, 5.7, {228.0, 125.0, 184.0}, {7.3, 5.4, 5.9}},
      {"S2", 180.0, 8.0, {144.0, 40.0, 205.0}, {8.0, 6.1, 8.4}},
  };
  return sc;
}

std::optional<Scenario> builtin(std::string_view name) {
  if (name == "scenario1") return scenario_one();
  if (name == "scenario2") return scenario_two();
  return std::nullopt;
}

std::vector<std::string_view> builtin_names() { return {"scenario1", "scenario2"}; }

}  // namespace overbid::fixtures
