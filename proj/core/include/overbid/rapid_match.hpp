#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace overbid {

/// A participant's ranked list of acceptable partners, best first.
/// Anyone not listed is unacceptable.
struct PreferenceList {
  std::string id;
  std::vector<std::string> prefs;

  friend bool operator==(const PreferenceList&, const PreferenceList&) = default;
};

/// One-round marriage market with optional overbidding.
struct PreferenceScenario {
  std::vector<PreferenceList> proposers;
  std::vector<PreferenceList> responders;
  std::size_t k = 2;         // offers per proposer (and acceptances per responder) when overbidding
  std::size_t capacity = 1;  // dates each participant is up to

  friend bool operator==(const PreferenceScenario&, const PreferenceScenario&) = default;
};

/// Violations of: unique ids, prefs drawn from the other side, no
/// duplicates in a list, k >= 1.
std::vector<std::string> validate(const PreferenceScenario& scenario);

/// JSON: { "proposers": [{"id", "prefs": [...]}...], "responders": [...],
///         "k": int, "capacity": int }. k defaults to 2 and capacity to 1.
PreferenceScenario parse_preferences(std::string_view json_text);
PreferenceScenario load_preferences(const std::filesystem::path& path);
std::string preferences_to_json(const PreferenceScenario& scenario);

struct Pairing {
  std::string proposer;
  std::string responder;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

struct RapidResult {
  std::vector<Pairing> offers;
  std::vector<Pairing> matches;  // accepted offers
  std::vector<Pairing> dates;    // matches neither side dropped
};

/// Single offer/accept round followed by one simultaneous drop. Proposers
/// offer to their top 1 (or top k when overbidding); responders accept up
/// to as many acceptable offers, most preferred first; then everyone keeps
/// only their `capacity` best matches without knowing what the others drop.
RapidResult run_rapid(const PreferenceScenario& scenario, bool overbid);

namespace fixtures {

/// A,B,C propose to D,E,F. Overbidding creates three dates from none.
PreferenceScenario rapid_example_one();
/// Same players, different lists. Overbidding destroys all three dates.
PreferenceScenario rapid_example_two();

}  // namespace fixtures

}  // namespace overbid
