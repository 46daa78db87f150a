#include "overbid/rapid_match.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "overbid/scenario_io.hpp"

namespace overbid {

namespace {

using json = nlohmann::ordered_json;

std::size_t rank_of(const PreferenceList& list, const std::string& id) {
  auto it = std::find(list.prefs.begin(), list.prefs.end(), id);
  return static_cast<std::size_t>(it - list.prefs.begin());  // == size() if unacceptable
}

void check_side(std::vector<std::string>& out, const std::vector<PreferenceList>& side,
                const std::set<std::string>& other, const char* label) {
  std::set<std::string> seen;
  for (const auto& p : side) {
    if (!seen.insert(p.id).second) out.push_back(std::string(label) + ": duplicate id " + p.id);
    std::set<std::string> listed;
    for (const auto& q : p.prefs) {
      if (!other.count(q)) out.push_back(p.id + ": " + q + " is not on the other side");
      if (!listed.insert(q).second) out.push_back(p.id + ": " + q + " listed twice");
    }
  }
}

std::vector<PreferenceList> read_side(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    throw ScenarioFormatError(std::string("preferences: missing array \"") + key + "\"");
  std::vector<PreferenceList> out;
  for (const auto& p : doc.at(key)) {
    if (!p.is_object() || !p.contains("id") || !p.at("id").is_string() || !p.contains("prefs") ||
        !p.at("prefs").is_array())
      throw ScenarioFormatError(std::string("preferences.") + key +
                                ": entries need a string \"id\" and a \"prefs\" array");
    PreferenceList list{p.at("id").get<std::string>(), {}};
    for (const auto& q : p.at("prefs")) {
      if (!q.is_string()) throw ScenarioFormatError("preferences: prefs must be strings");
      list.prefs.push_back(q.get<std::string>());
    }
    out.push_back(std::move(list));
  }
  return out;
}

std::size_t read_count(const json& doc, const char* key, std::size_t fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ScenarioFormatError(std::string("preferences.") + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

std::vector<std::string> validate(const PreferenceScenario& scenario) {
  std::vector<std::string> out;
  std::set<std::string> proposer_ids, responder_ids;
  for (const auto& p : scenario.proposers) proposer_ids.insert(p.id);
  for (const auto& r : scenario.responders) responder_ids.insert(r.id);
  check_side(out, scenario.proposers, responder_ids, "proposers");
  check_side(out, scenario.responders, proposer_ids, "responders");
  if (scenario.k == 0) out.push_back("k must be >= 1");
  return out;
}

PreferenceScenario parse_preferences(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioFormatError("preferences: expected a JSON object");
  PreferenceScenario sc;
  sc.proposers = read_side(doc, "proposers");
  sc.responders = read_side(doc, "responders");
  sc.k = read_count(doc, "k", 2);
  sc.capacity = read_count(doc, "capacity", 1);
  return sc;
}

PreferenceScenario load_preferences(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioFormatError("cannot open preference file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_preferences(buf.str());
}

std::string preferences_to_json(const PreferenceScenario& scenario) {
  json doc;
  auto side = [](const std::vector<PreferenceList>& lists) {
    json arr = json::array();
    for (const auto& l : lists) arr.push_back({{"id", l.id}, {"prefs", l.prefs}});
    return arr;
  };
  doc["proposers"] = side(scenario.proposers);
  doc["responders"] = side(scenario.responders);
  doc["k"] = scenario.k;
  doc["capacity"] = scenario.capacity;
  return doc.dump(2) + "\n";
}

RapidResult run_rapid(const PreferenceScenario& scenario, bool overbid) {
  const std::size_t multiplicity = overbid ? scenario.k : 1;
  std::unordered_map<std::string, const PreferenceList*> proposer_by_id, responder_by_id;
  for (const auto& p : scenario.proposers) proposer_by_id[p.id] = &p;
  for (const auto& r : scenario.responders) responder_by_id[r.id] = &r;

  RapidResult result;
  for (const auto& p : scenario.proposers)
    for (std::size_t n = 0; n < std::min(multiplicity, p.prefs.size()); ++n)
      result.offers.push_back({p.id, p.prefs[n]});

  // Responders accept their most preferred acceptable offers.
  std::set<std::pair<std::string, std::string>> accepted;
  for (const auto& r : scenario.responders) {
    std::vector<std::pair<std::size_t, std::string>> acceptable;
    for (const auto& o : result.offers) {
      if (o.responder != r.id) continue;
      const std::size_t rank = rank_of(r, o.proposer);
      if (rank < r.prefs.size()) acceptable.emplace_back(rank, o.proposer);
    }
    std::sort(acceptable.begin(), acceptable.end());
    for (std::size_t n = 0; n < std::min(multiplicity, acceptable.size()); ++n)
      accepted.emplace(acceptable[n].second, r.id);
  }
  for (const auto& o : result.offers)
    if (accepted.count({o.proposer, o.responder})) result.matches.push_back(o);

  // Simultaneous drop: each side keeps its `capacity` best matches.
  auto keeps = [&](const PreferenceList& self, const std::string& partner, bool is_proposer) {
    const std::size_t mine = rank_of(self, partner);
    std::size_t better = 0;
    for (const auto& m : result.matches) {
      const std::string& own = is_proposer ? m.proposer : m.responder;
      const std::string& other = is_proposer ? m.responder : m.proposer;
      if (own == self.id && rank_of(self, other) < mine) ++better;
    }
    return better < scenario.capacity;
  };
  for (const auto& m : result.matches) {
    if (keeps(*proposer_by_id.at(m.proposer), m.responder, true) &&
        keeps(*responder_by_id.at(m.responder), m.proposer, false))
      result.dates.push_back(m);
  }
  return result;
}

namespace fixtures {

PreferenceScenario rapid_example_one() {
  return {{{"A", {"F", "E", "D"}}, {"B", {"D", "F", "E"}}, {"C", {"E", "D", "F"}}},
          {{"D", {"C", "A"}}, {"E", {"A", "B"}}, {"F", {"B", "C"}}},
          2,
          1};
}

PreferenceScenario rapid_example_two() {
  return {{{"A", {"D", "E", "F"}}, {"B", {"E", "F", "D"}}, {"C", {"F", "D", "E"}}},
          {{"D", {"C", "A"}}, {"E", {"A", "B"}}, {"F", {"B", "C"}}},
          2,
          1};
}

}  // namespace fixtures

}  // namespace overbid
