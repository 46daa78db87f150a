#include "overbid/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace overbid {

namespace {

using json = nlohmann::ordered_json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ScenarioFormatError(where + ": missing key \"" + key + "\"");
  return obj.at(key);
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw ScenarioFormatError(where + "." + key + ": expected a number");
  return v.get<double>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw ScenarioFormatError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_array()) throw ScenarioFormatError(where + "." + key + ": expected an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number())
      throw ScenarioFormatError(where + "." + key + ": expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

const json& array(const json& obj, const char* key) {
  const json& v = require(obj, key, "scenario");
  if (!v.is_array()) throw ScenarioFormatError(std::string("scenario.") + key + ": expected an array");
  return v;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioFormatError("scenario: expected a JSON object");

  Scenario sc;
  sc.name = text(doc, "name", "scenario");
  for (const auto& dp : array(doc, "delivery_points")) {
    if (!dp.is_string()) throw ScenarioFormatError("scenario.delivery_points: expected strings");
    sc.dp_names.push_back(dp.get<std::string>());
  }
  std::size_t i = 0;
  for (const auto& c : array(doc, "consumers")) {
    const std::string where = "consumers[" + std::to_string(i++) + "]";
    sc.consumers.push_back({text(c, "id", where), number(c, "qr", where), number(c, "u", where),
                            numbers(c, "qbar", where), numbers(c, "ct", where)});
  }
  std::size_t j = 0;
  for (const auto& s : array(doc, "suppliers")) {
    const std::string where = "suppliers[" + std::to_string(j++) + "]";
    sc.suppliers.push_back({text(s, "id", where), number(s, "qa", where), number(s, "cp", where),
                            numbers(s, "qbar", where), numbers(s, "ct", where)});
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioFormatError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& scenario) {
  json doc;
  doc["name"] = scenario.name;
  doc["delivery_points"] = scenario.dp_names;
  doc["consumers"] = json::array();
  for (const auto& c : scenario.consumers)
    doc["consumers"].push_back(
        {{"id", c.id}, {"qr", c.qr}, {"u", c.u}, {"qbar", c.qbar}, {"ct", c.ct}});
  doc["suppliers"] = json::array();
  for (const auto& s : scenario.suppliers)
    doc["suppliers"].push_back(
        {{"id", s.id}, {"qa", s.qa}, {"cp", s.cp}, {"qbar", s.qbar}, {"ct", s.ct}});
  return doc.dump(2) + "\n";
}

}  // namespace overbid
