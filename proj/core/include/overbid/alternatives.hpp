#pragma once

#include <span>
#include <vector>

#include "overbid/contracting.hpp"
#include "overbid/game.hpp"
#include "overbid/matching.hpp"
#include "overbid/scenario.hpp"

namespace overbid {

/// Game in which suppliers may not overbid: 2^n_C profiles, suppliers at N.
SweepTable sweep_supplier_restricted(const Scenario& scenario, const SweepOptions& options = {});

/// A quantity contracted on one platform match.
struct Contract {
  Match match;
  double quantity = 0.0;
};

struct StableContractSet {
  std::vector<Contract> contracts;
  std::size_t rounds = 0;
  Side proposer_side = Side::consumer;

  double total_quantity() const;
};

/// Quantity-based deferred acceptance run on the platform's matches instead
/// of the simultaneous drop. Proposers offer their best not-yet-rejected
/// match quantities up to their remaining capacity and DP access caps;
/// responders hold the best offers up to their own caps and reject the
/// rest, and a rejected quantity is gone for good. Stops when a round ends
/// without rejections or nobody has anything left to offer.
///
/// Preferences follow per_unit_utility; equal utilities are ordered by
/// lower DP index, then lower counterpart index.
StableContractSet deferred_acceptance(const MatchSet& match_set, const Scenario& scenario,
                                      Side proposer = Side::consumer);

struct BlockingPair {
  Match match;          // the platform match (quantity = originally matched)
  double contracted;    // quantity contracted on it
};

/// Matches with unrealized quantity that both sides would take more of:
/// each side has residual capacity (total and at the DP) or holds a
/// contract it strictly likes less. Empty means the contracts are stable.
std::vector<BlockingPair> is_stable(std::span<const Contract> contracts, const MatchSet& match_set,
                                    const Scenario& scenario);
std::vector<BlockingPair> is_stable(const StableContractSet& contracts, const MatchSet& match_set,
                                    const Scenario& scenario);

/// Contracts left by the simultaneous drop phase, for comparison.
std::vector<Contract> to_contracts(std::span<const KeptMatch> kept);

}  // namespace overbid
