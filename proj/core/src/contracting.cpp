#include "overbid/contracting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace overbid {

namespace {

// Pro-rata matching can overshoot a capacity by rounding noise; within this slack everything fits.
constexpr double kCapacitySlack = 1e-9;

}  // namespace

double per_unit_utility(const Match& match, Side side, const Scenario& scenario) {
  if (side == Side::consumer) {
    const auto& c = scenario.consumers.at(match.consumer);
    return c.u - match.price - c.ct.at(match.dp);
  }
  const auto& s = scenario.suppliers.at(match.supplier);
  return match.price - s.cp - s.ct.at(match.dp);
}

std::vector<double> kept_quantities(double capacity, std::span<const double> utilities,
                                    std::span<const double> quantities,
                                    const ContractingOptions& options) {
  if (utilities.size() != quantities.size())
    throw std::invalid_argument("kept_quantities: utilities and quantities differ in length");
  const std::size_t n = quantities.size();
  std::vector<double> kept(n, 0.0);

  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < n; ++k)
    if (!(options.drop_negative && utilities[k] < 0.0)) eligible.push_back(k);

  double total = 0.0;
  for (std::size_t k : eligible) total += quantities[k];
  if (total <= capacity + kCapacitySlack * std::max(1.0, capacity)) {
    for (std::size_t k : eligible) kept[k] = quantities[k];
    return kept;
  }

  std::stable_sort(eligible.begin(), eligible.end(),
                   [&](std::size_t a, std::size_t b) { return utilities[a] > utilities[b]; });
  double remaining = std::max(capacity, 0.0);
  for (std::size_t g = 0; g < eligible.size() && remaining > 0.0;) {
    std::size_t end = g + 1;
    while (end < eligible.size() &&
           std::fabs(utilities[eligible[end]] - utilities[eligible[g]]) <= kUtilityTieTol)
      ++end;
    double level = 0.0;
    for (std::size_t k = g; k < end; ++k) level += quantities[eligible[k]];
    if (level <= remaining) {
      for (std::size_t k = g; k < end; ++k) kept[eligible[k]] = quantities[eligible[k]];
      remaining -= level;
    } else {
      const double rate = remaining / level;
      for (std::size_t k = g; k < end; ++k) kept[eligible[k]] = quantities[eligible[k]] * rate;
      remaining = 0.0;
    }
    g = end;
  }
  return kept;
}

std::vector<double> kept_quantities(Side side, std::size_t participant,
                                    std::span<const Match> matches, const Scenario& scenario,
                                    const ContractingOptions& options) {
  std::vector<double> utils, qty;
  utils.reserve(matches.size());
  qty.reserve(matches.size());
  for (const auto& m : matches) {
    const std::size_t owner = side == Side::consumer ? m.consumer : m.supplier;
    if (owner != participant)
      throw std::invalid_argument("kept_quantities: match does not involve the participant");
    utils.push_back(per_unit_utility(m, side, scenario));
    qty.push_back(m.quantity);
  }
  const double capacity = side == Side::consumer ? scenario.consumers.at(participant).qr
                                                 : scenario.suppliers.at(participant).qa;
  return kept_quantities(capacity, utils, qty, options);
}

std::vector<KeptMatch> realize(const MatchSet& match_set, const Scenario& scenario,
                               const ContractingOptions& options) {
  const auto& matches = match_set.matches;
  std::vector<KeptMatch> out(matches.size());
  for (std::size_t k = 0; k < matches.size(); ++k) {
    out[k].match = matches[k];
    out[k].q_mo = matches[k].quantity;
  }

  auto decide = [&](Side side, std::size_t n_participants) {
    for (std::size_t p = 0; p < n_participants; ++p) {
      std::vector<std::size_t> idx;
      std::vector<Match> own;
      for (std::size_t k = 0; k < matches.size(); ++k) {
        const std::size_t owner = side == Side::consumer ? matches[k].consumer : matches[k].supplier;
        if (owner == p) {
          idx.push_back(k);
          own.push_back(matches[k]);
        }
      }
      const auto kept = kept_quantities(side, p, own, scenario, options);
      for (std::size_t n = 0; n < idx.size(); ++n) {
        (side == Side::consumer ? out[idx[n]].kept_by_consumer : out[idx[n]].kept_by_supplier) =
            kept[n];
      }
    }
  };
  decide(Side::consumer, scenario.num_consumers());
  decide(Side::supplier, scenario.num_suppliers());

  for (auto& km : out) km.q_mu = std::min(km.kept_by_consumer, km.kept_by_supplier);
  return out;
}

Outcome utilities(std::span<const KeptMatch> contracts, const Scenario& scenario, double tmq) {
  Outcome o;
  o.u_consumers.assign(scenario.num_consumers(), 0.0);
  o.u_suppliers.assign(scenario.num_suppliers(), 0.0);
  o.tmq = tmq;
  for (const auto& km : contracts) {
    if (km.q_mu <= 0.0) continue;
    o.u_consumers.at(km.match.consumer) += km.q_mu * per_unit_utility(km.match, Side::consumer, scenario);
    o.u_suppliers.at(km.match.supplier) += km.q_mu * per_unit_utility(km.match, Side::supplier, scenario);
    o.tcq += km.q_mu;
  }
  o.tu = std::accumulate(o.u_consumers.begin(), o.u_consumers.end(), 0.0) +
         std::accumulate(o.u_suppliers.begin(), o.u_suppliers.end(), 0.0);
  return o;
}

}  // namespace overbid
