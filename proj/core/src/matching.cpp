#include "overbid/matching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace overbid {

namespace {

// Bids closer than this on the priority key are treated as tied.
constexpr double kKeyTieTol = 1e-9;

bool near(double a, double b) { return std::fabs(a - b) <= kKeyTieTol; }

// Strict "a goes before b" on the priority key, ignoring the index.
bool ahead_on_key(SupplyPriority p, double qa, double pa, double qb, double pb) {
  if (p == SupplyPriority::bid_quantity) {
    if (!near(qa, qb)) return qa > qb;
    if (!near(pa, pb)) return pa < pb;
    return false;
  }
  if (!near(pa, pb)) return pa < pb;
  return false;
}

}  // namespace

std::string_view to_string(SupplyPriority p) {
  return p == SupplyPriority::bid_quantity ? "quantity" : "price";
}

std::optional<SupplyPriority> parse_supply_priority(std::string_view text) {
  if (text == "quantity") return SupplyPriority::bid_quantity;
  if (text == "price") return SupplyPriority::bid_price;
  return std::nullopt;
}

double MatchSet::quantity(std::size_t consumer, std::size_t supplier, std::size_t dp) const {
  for (const auto& m : matches)
    if (m.consumer == consumer && m.supplier == supplier && m.dp == dp) return m.quantity;
  return 0.0;
}

DpTotals dp_totals(const BidSet& bids) {
  DpTotals totals{std::vector<double>(bids.bqc.cols()), std::vector<double>(bids.bqs.cols())};
  for (std::size_t t = 0; t < bids.bqc.cols(); ++t) totals.demand[t] = bids.bqc.col_sum(t);
  for (std::size_t t = 0; t < bids.bqs.cols(); ++t) totals.supply[t] = bids.bqs.col_sum(t);
  return totals;
}

std::vector<double> accepted_supply(std::size_t dp, const BidSet& bids, SupplyPriority priority) {
  const std::size_t n_s = bids.bqs.rows();
  const double demand = bids.bqc.col_sum(dp);
  const double supply = bids.bqs.col_sum(dp);
  std::vector<double> accepted(n_s, 0.0);
  if (demand <= 0.0 || supply <= 0.0) return accepted;

  if (demand >= supply) {
    for (std::size_t j = 0; j < n_s; ++j) accepted[j] = std::max(bids.bqs(j, dp), 0.0);
    return accepted;
  }

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n_s; ++j)
    if (bids.bqs(j, dp) > 0.0) order.push_back(j);
  auto ahead = [&](std::size_t a, std::size_t b) {
    return ahead_on_key(priority, bids.bqs(a, dp), bids.bps(a, dp), bids.bqs(b, dp),
                        bids.bps(b, dp));
  };
  std::stable_sort(order.begin(), order.end(), ahead);

  double remaining = demand;
  for (std::size_t g = 0; g < order.size() && remaining > 0.0;) {
    std::size_t end = g + 1;
    while (end < order.size() && !ahead(order[g], order[end])) ++end;
    double group = 0.0;
    for (std::size_t k = g; k < end; ++k) group += bids.bqs(order[k], dp);
    if (group <= remaining) {
      for (std::size_t k = g; k < end; ++k) accepted[order[k]] = bids.bqs(order[k], dp);
      remaining -= group;
    } else {
      for (std::size_t k = g; k < end; ++k)
        accepted[order[k]] = bids.bqs(order[k], dp) * (remaining / group);
      remaining = 0.0;
    }
    g = end;
  }
  return accepted;
}

std::vector<Match> match_dp(std::size_t dp, const BidSet& bids, SupplyPriority priority) {
  const double demand = bids.bqc.col_sum(dp);
  std::vector<Match> out;
  if (demand <= 0.0) return out;
  const auto accepted = accepted_supply(dp, bids, priority);

  std::vector<std::size_t> suppliers(bids.bqs.rows());
  std::iota(suppliers.begin(), suppliers.end(), std::size_t{0});
  std::stable_sort(suppliers.begin(), suppliers.end(), [&](std::size_t a, std::size_t b) {
    return bids.bps(a, dp) < bids.bps(b, dp);
  });

  for (std::size_t j : suppliers) {
    if (accepted[j] <= 0.0) continue;
    for (std::size_t i = 0; i < bids.bqc.rows(); ++i) {
      const double share = bids.bqc(i, dp) / demand;
      const double q = accepted[j] * share;
      if (q > 0.0) out.push_back({i, j, dp, q, bids.bps(j, dp)});
    }
  }
  return out;
}

MatchSet match_all(const BidSet& bids, SupplyPriority priority) {
  MatchSet ms;
  auto totals = dp_totals(bids);
  ms.dp_demand = std::move(totals.demand);
  ms.dp_supply = std::move(totals.supply);
  const std::size_t n_dp = ms.dp_demand.size();
  ms.dp_bidders.assign(n_dp, 0);
  for (std::size_t t = 0; t < n_dp; ++t) {
    for (std::size_t i = 0; i < bids.bqc.rows(); ++i)
      if (bids.bqc(i, t) > 0.0) ++ms.dp_bidders[t];
    ms.tmq += std::min(ms.dp_demand[t], ms.dp_supply[t]);
    auto at_dp = match_dp(t, bids, priority);
    ms.matches.insert(ms.matches.end(), at_dp.begin(), at_dp.end());
  }
  return ms;
}

}  // namespace overbid
