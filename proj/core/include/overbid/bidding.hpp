#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "overbid/matrix.hpp"
#include "overbid/scenario.hpp"

namespace overbid {

/// Bid matrices submitted to the platform for one strategy profile.
struct BidSet {
  Matrix bqc;  // n_C x n_DP demand bid quantities
  Matrix bqs;  // n_S x n_DP supply bid quantities
  Matrix bps;  // n_S x n_DP supply bid prices

  friend bool operator==(const BidSet&, const BidSet&) = default;
};

/// Thrown by allocate_bids when the requested total cannot fit under the caps.
class InfeasibleAllocation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Total quantity a player bids across all DPs: min(q, sum(qbar)) under N
/// and min(2q, sum(qbar)) under O, where q is qr (consumers) or qa
/// (suppliers).
double total_bid_quantity(const Consumer& consumer, Strategy strategy);
double total_bid_quantity(const Supplier& supplier, Strategy strategy);

/// Effective per-DP bid cap: min(qbar[t], quantity). A single-DP bid never
/// exceeds the true quantity, even when overbidding.
std::vector<double> per_dp_caps(std::span<const double> qbar, double quantity);

/// Solves  min sum(x[t] * ct[t])  s.t.  sum(x) == total, 0 <= x[t] <= caps[t]
/// by filling DPs in ascending transfer-cost order (lower index first on
/// equal cost). Greedy is exact for this single-equality box LP.
std::vector<double> allocate_bids(std::span<const double> ct, std::span<const double> caps,
                                  double total);

/// Bid price per DP: cp + max(ct) + ct[t] / 2. Independent of strategy.
std::vector<double> supplier_prices(const Supplier& supplier);

/// Stage 1: every player's bid row for the given profile. Precondition:
/// profile.fits(scenario).
BidSet build_bids(const Scenario& scenario, const StrategyProfile& profile);

/// True iff every bid respects its min(qbar, q) cap and every positive
/// supply bid is priced at or above production cost (strictly above unless
/// every transfer cost of that supplier is zero).
bool bids_respect_caps(const Scenario& scenario, const BidSet& bids, double tol = 1e-9);

}  // namespace overbid
