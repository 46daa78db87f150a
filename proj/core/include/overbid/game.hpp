#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "overbid/bidding.hpp"
#include "overbid/contracting.hpp"
#include "overbid/matching.hpp"
#include "overbid/scenario.hpp"

namespace overbid {

struct PipelineOptions {
  SupplyPriority priority = SupplyPriority::bid_quantity;
  ContractingOptions contracting;
};

/// Every intermediate of one pipeline run.
struct Evaluation {
  BidSet bids;
  MatchSet matches;
  std::vector<KeptMatch> contracts;
  Outcome outcome;
};

/// bids -> pro-rata matching -> simultaneous drop -> utilities.
Evaluation evaluate_in_detail(const Scenario& scenario, const StrategyProfile& profile,
                              const PipelineOptions& options = {});
Outcome evaluate_profile(const Scenario& scenario, const StrategyProfile& profile,
                         const PipelineOptions& options = {});

struct SweepRow {
  StrategyProfile profile;
  Outcome outcome;
};

/// Outcomes of every profile of a (sub)game. Players outside the free set
/// are pinned to N.
class SweepTable {
 public:
  SweepTable(std::size_t n_consumers, std::size_t n_suppliers, std::uint32_t free_mask,
             std::vector<SweepRow> rows);

  const std::vector<SweepRow>& rows() const { return rows_; }
  std::size_t num_consumers() const { return n_consumers_; }
  std::size_t num_suppliers() const { return n_suppliers_; }
  std::size_t num_players() const { return n_consumers_ + n_suppliers_; }
  std::uint32_t free_mask() const { return free_mask_; }
  bool is_free(std::size_t player) const { return (free_mask_ >> player) & 1U; }

  /// nullptr when the profile is not part of this table.
  const Outcome* find(const StrategyProfile& profile) const;
  const Outcome& at(const StrategyProfile& profile) const;

 private:
  std::size_t n_consumers_;
  std::size_t n_suppliers_;
  std::uint32_t free_mask_;
  std::vector<SweepRow> rows_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

class SweepTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxSweepPlayers = 24;

struct SweepOptions {
  PipelineOptions pipeline;
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Profile masks of the free players, ordered by the number of overbidders
/// and then lexicographically by overbidder positions (NNNN, ONNN, NONN,
/// NNON, NNNO, OONN, ...).
std::vector<std::uint32_t> profile_order(std::uint32_t free_mask);

/// All 2^(n_C+n_S) profiles.
SweepTable sweep(const Scenario& scenario, const SweepOptions& options = {});

/// All profiles of the players in `free_mask`; everyone else plays N.
SweepTable sweep_subgame(const Scenario& scenario, std::uint32_t free_mask,
                         const SweepOptions& options = {});

/// Utility differences within this band count as equal.
inline constexpr double kDeviationTol = 1e-6;

/// Pure-strategy equilibria: no free player strictly gains by flipping.
std::vector<StrategyProfile> nash_equilibria(const SweepTable& table);

struct Dominance {
  std::size_t player = 0;
  std::optional<Strategy> strategy;  // nullopt: no dominant strategy
  bool strict = false;
};

/// One entry per free player. A strategy is strictly dominant if it is
/// better against every opponent profile, weakly dominant if never worse
/// and better at least once.
std::vector<Dominance> dominant_strategies(const SweepTable& table);

struct ImprovingDeviation {
  StrategyProfile from;
  std::size_t player = 0;
  Strategy to = Strategy::N;
  double gain = 0.0;
};

struct EquilibriumReport {
  std::vector<StrategyProfile> nash;
  std::vector<Dominance> dominant;
  std::vector<ImprovingDeviation> best_responses;  // every strictly improving flip
};

EquilibriumReport analyze(const SweepTable& table);

}  // namespace overbid
