#include "overbid/bidding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace overbid {

namespace {

constexpr double kFeasibilitySlack = 1e-9;

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double total_for(double quantity, std::span<const double> qbar, Strategy s) {
  const double wanted = s == Strategy::O ? 2.0 * quantity : quantity;
  return std::min(wanted, sum(qbar));
}

std::vector<double> bid_row(std::span<const double> qbar, std::span<const double> ct,
                            double quantity, double total) {
  const auto caps = per_dp_caps(qbar, quantity);
  // sum(caps) can fall below sum(qbar) once single-DP caps clip at quantity.
  return allocate_bids(ct, caps, std::min(total, sum(caps)));
}

}  // namespace

double total_bid_quantity(const Consumer& consumer, Strategy strategy) {
  return total_for(consumer.qr, consumer.qbar, strategy);
}

double total_bid_quantity(const Supplier& supplier, Strategy strategy) {
  return total_for(supplier.qa, supplier.qbar, strategy);
}

std::vector<double> per_dp_caps(std::span<const double> qbar, double quantity) {
  std::vector<double> caps(qbar.size());
  std::transform(qbar.begin(), qbar.end(), caps.begin(),
                 [quantity](double q) { return std::min(q, quantity); });
  return caps;
}

std::vector<double> allocate_bids(std::span<const double> ct, std::span<const double> caps,
                                  double total) {
  if (ct.size() != caps.size())
    throw std::invalid_argument("allocate_bids: cost and cap vectors differ in length");
  const double capacity = sum(caps);
  if (total > capacity + kFeasibilitySlack * std::max(1.0, capacity))
    throw InfeasibleAllocation("allocate_bids: total " + std::to_string(total) +
                               " exceeds the summed caps " + std::to_string(capacity));

  std::vector<std::size_t> order(ct.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ct[a] < ct[b]; });

  std::vector<double> x(ct.size(), 0.0);
  double remaining = std::max(total, 0.0);
  for (std::size_t t : order) {
    if (remaining <= 0.0) break;
    x[t] = std::min(caps[t], remaining);
    remaining -= x[t];
  }
  return x;
}

std::vector<double> supplier_prices(const Supplier& supplier) {
  if (supplier.ct.empty()) return {};
  const double baseline = supplier.cp + *std::max_element(supplier.ct.begin(), supplier.ct.end());
  std::vector<double> prices(supplier.ct.size());
  std::transform(supplier.ct.begin(), supplier.ct.end(), prices.begin(),
                 [baseline](double ct) { return baseline + ct / 2.0; });
  return prices;
}

BidSet build_bids(const Scenario& scenario, const StrategyProfile& profile) {
  if (!profile.fits(scenario))
    throw std::invalid_argument("build_bids: profile " + profile.to_string() +
                                " does not fit the scenario");
  const std::size_t n_dp = scenario.num_dps();
  BidSet bids{Matrix(scenario.num_consumers(), n_dp), Matrix(scenario.num_suppliers(), n_dp),
              Matrix(scenario.num_suppliers(), n_dp)};

  for (std::size_t i = 0; i < scenario.num_consumers(); ++i) {
    const auto& c = scenario.consumers[i];
    const auto row = bid_row(c.qbar, c.ct, c.qr, total_bid_quantity(c, profile.consumers()[i]));
    std::copy(row.begin(), row.end(), bids.bqc.row(i).begin());
  }
  for (std::size_t j = 0; j < scenario.num_suppliers(); ++j) {
    const auto& s = scenario.suppliers[j];
    const auto row = bid_row(s.qbar, s.ct, s.qa, total_bid_quantity(s, profile.suppliers()[j]));
    std::copy(row.begin(), row.end(), bids.bqs.row(j).begin());
    const auto prices = supplier_prices(s);
    std::copy(prices.begin(), prices.end(), bids.bps.row(j).begin());
  }
  if (!bids_respect_caps(scenario, bids))
    throw std::logic_error("build_bids: produced a bid above its access cap");
  return bids;
}

bool bids_respect_caps(const Scenario& scenario, const BidSet& bids, double tol) {
  for (std::size_t i = 0; i < scenario.num_consumers(); ++i) {
    const auto& c = scenario.consumers[i];
    for (std::size_t t = 0; t < scenario.num_dps(); ++t) {
      const double b = bids.bqc(i, t);
      if (b < -tol || b > std::min(c.qbar[t], c.qr) + tol) return false;
    }
  }
  for (std::size_t j = 0; j < scenario.num_suppliers(); ++j) {
    const auto& s = scenario.suppliers[j];
    for (std::size_t t = 0; t < scenario.num_dps(); ++t) {
      const double b = bids.bqs(j, t);
      if (b < -tol || b > std::min(s.qbar[t], s.qa) + tol) return false;
      if (b > 0.0 && bids.bps(j, t) < s.cp - tol) return false;
    }
  }
  return true;
}

}  // namespace overbid
