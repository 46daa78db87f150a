#pragma once

#include <cstddef>
#include <string_view>
#include <optional>
#include <vector>

#include "overbid/bidding.hpp"

namespace overbid {

/// Which supply bids survive at a DP where supply exceeds demand.
enum class SupplyPriority {
  /// Largest bid quantity first; equal quantities by lower price, then lower
  /// supplier index. This is the order that reproduces the published
  /// Scenario I/II tables.
  bid_quantity,
  /// Cheapest bid price first; equal prices by lower supplier index.
  bid_price,
};

std::string_view to_string(SupplyPriority p);
std::optional<SupplyPriority> parse_supply_priority(std::string_view text);

/// One platform match (C_i - S_j, t). Quantities are always positive.
struct Match {
  std::size_t consumer = 0;
  std::size_t supplier = 0;
  std::size_t dp = 0;
  double quantity = 0.0;
  double price = 0.0;  // the supplier's bid price at this DP

  friend bool operator==(const Match&, const Match&) = default;
};

struct DpTotals {
  std::vector<double> demand;  // q^D_t
  std::vector<double> supply;  // q^S_t
};

struct MatchSet {
  std::vector<Match> matches;
  std::vector<double> dp_demand;
  std::vector<double> dp_supply;
  std::vector<std::size_t> dp_bidders;  // consumers with a positive bid at t; reporting only
  double tmq = 0.0;                     // sum_t min(q^D_t, q^S_t)

  /// Quantity matched between i and j at t, 0 if there is no such match.
  double quantity(std::size_t consumer, std::size_t supplier, std::size_t dp) const;
};

/// Column sums of the demand and supply bid matrices.
DpTotals dp_totals(const BidSet& bids);

/// How much of each supplier's bid at DP t is accepted. All of it when
/// demand covers supply; otherwise bids are taken in priority order until
/// demand is met, the marginal bid is cut, and bids tied with it on the
/// priority key share the cut pro rata to their quantities.
std::vector<double> accepted_supply(std::size_t dp, const BidSet& bids,
                                    SupplyPriority priority = SupplyPriority::bid_quantity);

/// Pro-rata matching at one DP: each accepted supply bid is split across
/// consumers in proportion to their demand bids at t. Matches come out
/// ordered by supplier (ascending price, then index), then consumer index.
std::vector<Match> match_dp(std::size_t dp, const BidSet& bids,
                            SupplyPriority priority = SupplyPriority::bid_quantity);

/// All DPs in index order, with the DP totals and TMQ.
MatchSet match_all(const BidSet& bids, SupplyPriority priority = SupplyPriority::bid_quantity);

}  // namespace overbid
