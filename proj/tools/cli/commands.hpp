#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "overbid/alternatives.hpp"
#include "overbid/game.hpp"
#include "overbid/rapid_match.hpp"
#include "overbid/scenario.hpp"
#include "report.hpp"

namespace overbid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBadProfile = 3;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// profile, U_<id> per player, TMQ, TCQ, TU
std::vector<std::string> outcome_header(const Scenario& scenario);
std::vector<std::string> outcome_row(const StrategyProfile& profile, const Outcome& outcome,
                                     int precision);

Table bids_table(const Scenario& scenario, const BidSet& bids, int precision);
Table dp_totals_table(const Scenario& scenario, const MatchSet& matches, int precision);
Table matches_table(const Scenario& scenario, const MatchSet& matches, int precision);
Table contracts_table(const Scenario& scenario, const std::vector<KeptMatch>& contracts,
                      int precision);
Table utilities_table(const Scenario& scenario, const StrategyProfile& profile,
                      const Outcome& outcome, int precision);
Table sweep_table(const Scenario& scenario, const SweepTable& table, int precision);
std::vector<Table> equilibria_tables(const Scenario& scenario, const SweepTable& table,
                                     int precision);
std::vector<Table> da_tables(const Scenario& scenario, const Evaluation& evaluation,
                             const StableContractSet& stable, int precision);
std::vector<Table> rapid_tables(const RapidResult& result, bool overbid);

}  // namespace overbid::cli
