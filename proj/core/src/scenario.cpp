#include "overbid/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace overbid {

namespace {

void check_vector(std::vector<Violation>& out, const std::string& field,
                  const std::vector<double>& values, std::size_t n_dp) {
  if (values.size() != n_dp) {
    out.push_back({field, "length " + std::to_string(values.size()) +
                              " does not match the " + std::to_string(n_dp) +
                              " delivery points"});
    return;
  }
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (!(values[t] >= 0.0) || !std::isfinite(values[t])) {
      out.push_back({field + "[" + std::to_string(t) + "]", "must be finite and >= 0"});
    }
  }
}

void check_positive(std::vector<Violation>& out, const std::string& field, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) out.push_back({field, "must be finite and > 0"});
}

void check_non_negative(std::vector<Violation>& out, const std::string& field, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) out.push_back({field, "must be finite and >= 0"});
}

}  // namespace

const std::string& Scenario::player_id(std::size_t k) const {
  if (k < consumers.size()) return consumers[k].id;
  return suppliers.at(k - consumers.size()).id;
}

std::vector<Violation> validate(const Scenario& scenario) {
  std::vector<Violation> out;
  const std::size_t n_dp = scenario.num_dps();
  if (scenario.consumers.empty()) out.push_back({"consumers", "at least one consumer required"});
  if (scenario.suppliers.empty()) out.push_back({"suppliers", "at least one supplier required"});
  if (n_dp == 0) out.push_back({"delivery_points", "at least one delivery point required"});

  for (std::size_t i = 0; i < scenario.consumers.size(); ++i) {
    const auto& c = scenario.consumers[i];
    const std::string base = "consumers[" + std::to_string(i) + "]";
    check_positive(out, base + ".qr", c.qr);
    check_non_negative(out, base + ".u", c.u);
    check_vector(out, base + ".qbar", c.qbar, n_dp);
    check_vector(out, base + ".ct", c.ct, n_dp);
  }
  for (std::size_t j = 0; j < scenario.suppliers.size(); ++j) {
    const auto& s = scenario.suppliers[j];
    const std::string base = "suppliers[" + std::to_string(j) + "]";
    check_positive(out, base + ".qa", s.qa);
    check_non_negative(out, base + ".cp", s.cp);
    check_vector(out, base + ".qbar", s.qbar, n_dp);
    check_vector(out, base + ".ct", s.ct, n_dp);
  }
  return out;
}

std::string describe(const Violation& v) { return v.field + ": " + v.rule; }

StrategyProfile StrategyProfile::uniform(std::size_t n_consumers, std::size_t n_suppliers,
                                         Strategy s) {
  return {std::vector<Strategy>(n_consumers, s), std::vector<Strategy>(n_suppliers, s)};
}

StrategyProfile StrategyProfile::from_mask(std::uint32_t mask, std::size_t n_consumers,
                                           std::size_t n_suppliers) {
  std::vector<Strategy> c(n_consumers), s(n_suppliers);
  for (std::size_t k = 0; k < n_consumers; ++k) c[k] = (mask >> k) & 1U ? Strategy::O : Strategy::N;
  for (std::size_t k = 0; k < n_suppliers; ++k)
    s[k] = (mask >> (n_consumers + k)) & 1U ? Strategy::O : Strategy::N;
  return {std::move(c), std::move(s)};
}

std::optional<StrategyProfile> StrategyProfile::parse(std::string_view text,
                                                      std::size_t n_consumers,
                                                      std::size_t n_suppliers) {
  if (text.size() != n_consumers + n_suppliers) return std::nullopt;
  std::vector<Strategy> c, s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    Strategy st;
    if (text[k] == 'N') {
      st = Strategy::N;
    } else if (text[k] == 'O') {
      st = Strategy::O;
    } else {
      return std::nullopt;
    }
    (k < n_consumers ? c : s).push_back(st);
  }
  return StrategyProfile{std::move(c), std::move(s)};
}

Strategy StrategyProfile::player(std::size_t k) const {
  if (k < consumers_.size()) return consumers_[k];
  return suppliers_.at(k - consumers_.size());
}

StrategyProfile StrategyProfile::with_player(std::size_t k, Strategy s) const {
  StrategyProfile copy = *this;
  if (k < copy.consumers_.size()) {
    copy.consumers_[k] = s;
  } else {
    copy.suppliers_.at(k - copy.consumers_.size()) = s;
  }
  return copy;
}

std::uint32_t StrategyProfile::mask() const {
  if (size() > 32) throw std::length_error("strategy profile too large for a 32-bit mask");
  std::uint32_t m = 0;
  for (std::size_t k = 0; k < size(); ++k)
    if (player(k) == Strategy::O) m |= 1U << k;
  return m;
}

std::string StrategyProfile::to_string() const {
  std::string out;
  out.reserve(size());
  for (Strategy s : consumers_) out.push_back(to_char(s));
  for (Strategy s : suppliers_) out.push_back(to_char(s));
  return out;
}

}  // namespace overbid
