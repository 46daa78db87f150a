#pragma once

#include <span>
#include <vector>

#include "overbid/matching.hpp"
#include "overbid/scenario.hpp"

namespace overbid {

enum class Side { consumer, supplier };

struct ContractingOptions {
  /// Discard matches with negative per-unit utility even when capacity is
  /// left. Off by default: players keep their best deals up to capacity.
  bool drop_negative = false;
};

/// A platform match after the drop phase.
struct KeptMatch {
  Match match;
  double q_mo = 0.0;              // originally matched quantity
  double kept_by_consumer = 0.0;
  double kept_by_supplier = 0.0;
  double q_mu = 0.0;              // contracted: min of the two kept quantities
};

/// Per-player utilities for one evaluated profile.
struct Outcome {
  std::vector<double> u_consumers;
  std::vector<double> u_suppliers;
  double tmq = 0.0;
  double tcq = 0.0;
  double tu = 0.0;

  /// Utility of player k (consumers first, then suppliers).
  double player_utility(std::size_t k) const {
    return k < u_consumers.size() ? u_consumers[k] : u_suppliers.at(k - u_consumers.size());
  }
};

/// Consumer side: u_i - price - ct^C_{i,t}.  Supplier side: price - cp_j - ct^S_{j,t}.
double per_unit_utility(const Match& match, Side side, const Scenario& scenario);

/// Utilities closer than this are one preference level when dropping.
inline constexpr double kUtilityTieTol = 1e-9;

/// Drop rule for one participant. Keeps whole matches in descending
/// utility order until `capacity` is used up; the level where it runs out
/// is shared pro rata across all matches tied at that level, and anything
/// strictly worse is dropped. Nothing is dropped when the matches fit.
std::vector<double> kept_quantities(double capacity, std::span<const double> utilities,
                                    std::span<const double> quantities,
                                    const ContractingOptions& options = {});

/// Same rule applied to `matches`, all of which must involve `participant`
/// on `side`. Capacity is qr (consumer) or qa (supplier).
std::vector<double> kept_quantities(Side side, std::size_t participant,
                                    std::span<const Match> matches, const Scenario& scenario,
                                    const ContractingOptions& options = {});

/// Simultaneous drop phase: every participant decides on its own matches
/// without seeing anyone else's decision; a match contracts at the smaller
/// of the two kept quantities. Output is aligned with match_set.matches.
std::vector<KeptMatch> realize(const MatchSet& match_set, const Scenario& scenario,
                               const ContractingOptions& options = {});

/// Utilities, TCQ and TU of the realized contracts.
Outcome utilities(std::span<const KeptMatch> contracts, const Scenario& scenario, double tmq);

}  // namespace overbid
