#include <gtest/gtest.h>

#include "overbid/alternatives.hpp"
#include "overbid/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "support/random_instances.hpp"

using namespace overbid;

namespace {

Evaluation uniform(const Scenario& sc, Strategy s) {
  return evaluate_in_detail(sc, StrategyProfile::uniform(sc.num_consumers(), sc.num_suppliers(), s));
}

std::vector<double> allocation(const MatchSet& ms, const std::vector<Contract>& contracts) {
  std::vector<double> x(ms.matches.size(), 0.0);
  for (const auto& c : contracts)
    for (std::size_t e = 0; e < ms.matches.size(); ++e)
      if (ms.matches[e].consumer == c.match.consumer && ms.matches[e].supplier == c.match.supplier &&
          ms.matches[e].dp == c.match.dp)
        x[e] += c.quantity;
  return x;
}

// Small market with integer capacities and match quantities and generic
// (tie-free) utilities. A supplier values every consumer at one DP alike, so
// each supplier meets at most one consumer per DP.
std::pair<Scenario, MatchSet> integer_market(support::Rng& rng) {
  Scenario sc;
  sc.name = "integer";
  const std::size_t n_dp = support::pick(rng, 1, 2);
  for (std::size_t t = 0; t < n_dp; ++t) sc.dp_names.push_back("DP" + std::to_string(t + 1));
  const std::size_t n_c = support::pick(rng, 1, 3), n_s = support::pick(rng, 1, 3);
  auto cap = [&] { return static_cast<double>(support::pick(rng, 1, 4)); };
  for (std::size_t i = 0; i < n_c; ++i) {
    Consumer c{"C" + std::to_string(i + 1), cap(), support::uniform(rng, 20, 30), {}, {}};
    for (std::size_t t = 0; t < n_dp; ++t) {
      c.qbar.push_back(cap());
      c.ct.push_back(support::uniform(rng, 0, 5));
    }
    sc.consumers.push_back(c);
  }
  for (std::size_t j = 0; j < n_s; ++j) {
    Supplier s{"S" + std::to_string(j + 1), cap(), support::uniform(rng, 0, 5), {}, {}};
    for (std::size_t t = 0; t < n_dp; ++t) {
      s.qbar.push_back(cap());
      s.ct.push_back(support::uniform(rng, 0, 5));
    }
    sc.suppliers.push_back(s);
  }
  MatchSet ms;
  for (std::size_t t = 0; t < n_dp; ++t) {
    for (std::size_t j = 0; j < n_s; ++j) {
      if (support::pick(rng, 0, 3) == 0) continue;
      const std::size_t i = support::pick(rng, 0, n_c - 1);
      ms.matches.push_back({i, j, t, static_cast<double>(support::pick(rng, 1, 3)),
                            support::uniform(rng, 10, 15)});
    }
  }
  return {sc, ms};
}

}  // namespace

TEST(DeferredAcceptance, SinglePairContractsInOneRound) {
  const Scenario sc{"pair", {"T"}, {{"C1", 10, 20, {10}, {1}}}, {{"S1", 10, 5, {10}, {1}}}};
  MatchSet ms;
  ms.matches.push_back({0, 0, 0, 10, 12});
  const auto da = deferred_acceptance(ms, sc);
  ASSERT_EQ(da.contracts.size(), 1u);
  EXPECT_EQ(da.contracts[0].quantity, 10);
  EXPECT_EQ(da.rounds, 1u);
}

// The consumer ranks DP1 > DP2 > DP3, the supplier DP1 > DP3 > DP2. Each
// round the unit the supplier rejects at DP2 is re-offered at DP3, which
// displaces another unit at DP2, so rounds grow with quantity rather than
// with the number of matches.
TEST(DeferredAcceptance, RoundsCanExceedMatchCountPlusOne) {
  const Scenario sc{"pingpong", {"DP1", "DP2", "DP3"},
                    {{"C1", 10, 20, {5, 5, 5}, {0, 0, 0}}},
                    {{"S1", 9, 0, {5, 5, 5}, {0, 6, 3}}}};
  MatchSet ms;
  ms.matches = {{0, 0, 0, 5, 10}, {0, 0, 1, 5, 11}, {0, 0, 2, 5, 12}};
  const auto da = deferred_acceptance(ms, sc);
  ASSERT_EQ(da.contracts.size(), 2u);
  EXPECT_EQ(da.contracts[0].match.dp, 0u);
  EXPECT_NEAR(da.contracts[0].quantity, 5, 1e-9);
  EXPECT_EQ(da.contracts[1].match.dp, 2u);
  EXPECT_NEAR(da.contracts[1].quantity, 4, 1e-9);
  EXPECT_TRUE(is_stable(da, ms, sc).empty());
  EXPECT_GT(da.rounds, ms.matches.size() + 1);
}

TEST(DeferredAcceptance, NoOvermatchingKeepsEveryMatch) {
  const auto ev = uniform(fixtures::scenario_one(), Strategy::N);
  const auto da = deferred_acceptance(ev.matches, fixtures::scenario_one());
  EXPECT_EQ(da.rounds, 1u);
  ASSERT_EQ(da.contracts.size(), ev.matches.matches.size());
  for (std::size_t k = 0; k < da.contracts.size(); ++k) {
    EXPECT_EQ(da.contracts[k].match, ev.matches.matches[k]);
    EXPECT_EQ(da.contracts[k].quantity, ev.matches.matches[k].quantity);
  }
}

TEST(DeferredAcceptance, EmptyMatchSet) {
  const auto sc = fixtures::scenario_one();
  const auto da = deferred_acceptance(MatchSet{}, sc);
  EXPECT_TRUE(da.contracts.empty());
  EXPECT_TRUE(is_stable(da, MatchSet{}, sc).empty());
}

TEST(DeferredAcceptance, ScenarioTwoOverbiddingBeatsSimultaneousDrop) {
  const auto sc = fixtures::scenario_two();
  const auto ev = uniform(sc, Strategy::O);
  for (Side proposer : {Side::consumer, Side::supplier}) {
    const auto da = deferred_acceptance(ev.matches, sc, proposer);
    EXPECT_EQ(da.proposer_side, proposer);
    EXPECT_GE(da.total_quantity(), 248.642);
    const auto failures = support::check_deferred_acceptance(sc, ev.matches, da);
    EXPECT_TRUE(failures.empty()) << failures.front();
  }
}

TEST(DeferredAcceptance, FixturesAreStableUnderEveryProfile) {
  for (const auto& sc : {fixtures::scenario_one(), fixtures::scenario_two()}) {
    for (std::uint32_t m = 0; m < 16; ++m) {
      const auto ev = evaluate_in_detail(sc, StrategyProfile::from_mask(m, 2, 2));
      for (Side proposer : {Side::consumer, Side::supplier}) {
        const auto failures =
            support::check_deferred_acceptance(sc, ev.matches, deferred_acceptance(ev.matches, sc, proposer));
        EXPECT_TRUE(failures.empty()) << sc.name << " mask " << m << ": " << failures.front();
      }
    }
  }
}

TEST(DeferredAcceptance, RandomMarketsAreStableWithinTheRoundBound) {
  support::Rng rng(99);
  for (int n = 0; n < 200; ++n) {
    const Scenario sc = support::random_scenario(rng, {3, 3, 3});
    const auto ev = evaluate_in_detail(sc, support::random_profile(rng, sc));
    for (Side proposer : {Side::consumer, Side::supplier}) {
      const auto failures =
          support::check_deferred_acceptance(sc, ev.matches, deferred_acceptance(ev.matches, sc, proposer));
      EXPECT_TRUE(failures.empty()) << "instance " << n << ": " << failures.front();
    }
  }
}

TEST(DeferredAcceptance, ConsumerProposingIsBestForEveryConsumerAmongStableAllocations) {
  support::Rng rng(2024);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    const auto [sc, ms] = integer_market(rng);
    if (ms.matches.empty()) continue;
    const auto da = deferred_acceptance(ms, sc, Side::consumer);
    support::AllocationOracle oracle(sc, ms.matches);
    const auto x = allocation(ms, da.contracts);
    ASSERT_TRUE(oracle.blocking(x).empty()) << "instance " << n;
    const auto mine = oracle.consumer_utilities(x);
    const auto stable = oracle.integer_stable_allocations();
    ASSERT_FALSE(stable.empty()) << "instance " << n;
    for (const auto& y : stable) {
      const auto theirs = oracle.consumer_utilities(y);
      for (std::size_t i = 0; i < mine.size(); ++i)
        EXPECT_GE(mine[i], theirs[i] - 1e-9) << "instance " << n << " consumer " << i;
    }
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(IsStable, SimultaneousDropOfScenarioTwoIsBlocked) {
  const auto sc = fixtures::scenario_two();
  const auto ev = uniform(sc, Strategy::O);
  const auto contracts = to_contracts(ev.contracts);
  EXPECT_EQ(contracts.size(), 4u);
  const auto blocking = is_stable(contracts, ev.matches, sc);
  EXPECT_FALSE(blocking.empty());
  support::AllocationOracle oracle(sc, ev.matches.matches);
  const auto expected = oracle.blocking(allocation(ev.matches, contracts));
  ASSERT_EQ(blocking.size(), expected.size());
  for (std::size_t k = 0; k < blocking.size(); ++k) EXPECT_EQ(blocking[k].match, ev.matches.matches[expected[k]]);
}

TEST(IsStable, AgreesWithReferenceOracleOnDropOutcomes) {
  support::Rng rng(17);
  for (int n = 0; n < 300; ++n) {
    const Scenario sc = support::random_scenario(rng, {3, 3, 3});
    const auto ev = evaluate_in_detail(sc, support::random_profile(rng, sc));
    const auto contracts = to_contracts(ev.contracts);
    const auto blocking = is_stable(contracts, ev.matches, sc);
    support::AllocationOracle oracle(sc, ev.matches.matches);
    const auto expected = oracle.blocking(allocation(ev.matches, contracts));
    ASSERT_EQ(blocking.size(), expected.size()) << "instance " << n;
    for (std::size_t k = 0; k < blocking.size(); ++k)
      EXPECT_EQ(blocking[k].match, ev.matches.matches[expected[k]]);
  }
}

TEST(SupplierRestricted, DegenerateSingleConsumerGame) {
  Scenario sc = fixtures::scenario_one();
  sc.consumers.resize(1);
  EXPECT_EQ(sweep_supplier_restricted(sc).rows().size(), 2u);
  sc.consumers.clear();
  const auto t = sweep_supplier_restricted(sc);
  ASSERT_EQ(t.rows().size(), 1u);
  EXPECT_EQ(t.rows()[0].profile.to_string(), "NN");
}
