#include <gtest/gtest.h>

#include "golden/golden_tables.hpp"
#include "overbid/contracting.hpp"
#include "overbid/fixtures.hpp"
#include "overbid/game.hpp"
#include "support/golden.hpp"
#include "support/properties.hpp"
#include "support/random_instances.hpp"
#include "support/tables.hpp"

using namespace overbid;

namespace {

Evaluation uniform(const Scenario& sc, Strategy s) {
  return evaluate_in_detail(sc, StrategyProfile::uniform(sc.num_consumers(), sc.num_suppliers(), s));
}

const KeptMatch& find(const std::vector<KeptMatch>& kept, std::size_t i, std::size_t j, std::size_t t) {
  for (const auto& k : kept)
    if (k.match.consumer == i && k.match.supplier == j && k.match.dp == t) return k;
  throw std::out_of_range("no such match");
}

void expect_contract_table(const Scenario& sc, std::string_view table) {
  for (const auto& row : support::keyed_rows(table)) {
    const auto profile = row.key.size() == 1
                             ? StrategyProfile::uniform(2, 2, row.key == "O" ? Strategy::O : Strategy::N)
                             : *StrategyProfile::parse(row.key, 2, 2);
    const auto cells = support::contract_cells(evaluate_in_detail(sc, profile).contracts);
    for (std::size_t k = 0; k < cells.size(); ++k)
      EXPECT_TRUE(row.values[k].matches(cells[k]))
          << sc.name << " " << row.key << " cell " << k << ": " << cells[k] << " vs " << row.values[k].text;
  }
}

}  // namespace

TEST(PerUnitUtility, ConsumerAndSupplierSides) {
  const Scenario sc = fixtures::scenario_two();
  const Match c1_s1_2{0, 0, 1, 125, 15.7};
  EXPECT_NEAR(per_unit_utility(c1_s1_2, Side::consumer, sc), 7.8, 1e-12);
  const Match c1_s2_2{0, 1, 1, 40, 19.45};
  EXPECT_NEAR(per_unit_utility(c1_s2_2, Side::supplier, sc), 5.35, 1e-12);
  Scenario even = sc;
  even.consumers[0].ct[1] = 0.0;
  const Match at_value{0, 0, 1, 1, 25};
  EXPECT_EQ(per_unit_utility(at_value, Side::consumer, even), 0.0);
}

TEST(KeptQuantities, NothingDroppedBelowCapacity) {
  const std::vector<double> u{1, 3, 2}, q{1, 2, 3};
  EXPECT_EQ(kept_quantities(6, u, q), q);
  EXPECT_EQ(kept_quantities(10, u, q), q);
}

TEST(KeptQuantities, BestFirstWithProRataTieAtTheMargin) {
  const std::vector<double> u{4.6, 4.35, 4.35, 3.65}, q{125, 82.155, 101.845, 104.203};
  const auto kept = kept_quantities(240, u, q);
  EXPECT_EQ(kept[0], 125);
  EXPECT_NEAR(kept[1], 115 * 82.155 / 184, 1e-9);
  EXPECT_NEAR(kept[2], 115 * 101.845 / 184, 1e-9);
  EXPECT_EQ(kept[3], 0);
}

TEST(KeptQuantities, DropNegativeOption) {
  const std::vector<double> u{2, -1}, q{3, 3};
  EXPECT_EQ(kept_quantities(10, u, q), q);
  EXPECT_EQ(kept_quantities(10, u, q, {.drop_negative = true}), (std::vector<double>{3, 0}));
}

TEST(KeptQuantities, OvermatchedParticipantsOfScenarioTwo) {
  const auto ev = uniform(fixtures::scenario_two(), Strategy::O);
  // S1: 125 kept at the top level, 115 shared by the two DP3 matches.
  EXPECT_NEAR(find(ev.contracts, 0, 0, 2).kept_by_supplier, 51.347, 5e-4);
  EXPECT_NEAR(find(ev.contracts, 1, 0, 2).kept_by_supplier, 63.653, 5e-4);
  // C1 keeps three matches in full and tops up with (C1-S2, DP2).
  EXPECT_NEAR(find(ev.contracts, 0, 0, 1).kept_by_consumer, 125, 1e-9);
  EXPECT_NEAR(find(ev.contracts, 0, 0, 2).kept_by_consumer, 82.155, 5e-4);
  EXPECT_NEAR(find(ev.contracts, 0, 0, 0).kept_by_consumer, 104.203, 5e-4);
  EXPECT_NEAR(find(ev.contracts, 0, 1, 1).kept_by_consumer, 8.6419, 5e-5);
  EXPECT_EQ(find(ev.contracts, 0, 1, 2).kept_by_consumer, 0);
  EXPECT_EQ(find(ev.contracts, 0, 1, 0).kept_by_consumer, 0);
}

TEST(KeptQuantities, DropDecisionTable) {
  const Scenario sc = fixtures::scenario_two();
  const auto ev = uniform(sc, Strategy::O);
  const auto rows = support::token_rows(golden::kScenarioTwoDropDecisions);
  ASSERT_EQ(rows.size(), 20u);
  for (const auto& r : rows) {
    const bool consumer_side = r[0][0] == 'C';
    const std::size_t i = std::stoul(r[1].substr(1)) - 1;
    const std::size_t j = std::stoul(r[2].substr(1)) - 1;
    const std::size_t t = std::stoul(r[3].substr(2)) - 1;
    const auto& k = find(ev.contracts, i, j, t);
    const std::string label = r[0] + " " + r[1] + "-" + r[2] + " " + r[3];
    EXPECT_TRUE(support::printed(r[4]).matches(k.match.price)) << label;
    const double ct = consumer_side ? sc.consumers[i].ct[t] : sc.suppliers[j].ct[t];
    EXPECT_TRUE(support::printed(r[5]).matches(ct)) << label;
    EXPECT_TRUE(support::printed(r[6]).matches(
        per_unit_utility(k.match, consumer_side ? Side::consumer : Side::supplier, sc)))
        << label;
    EXPECT_TRUE(support::printed(r[7]).matches(k.q_mo)) << label;
    EXPECT_TRUE(support::printed(r[8]).matches(consumer_side ? k.kept_by_consumer : k.kept_by_supplier))
        << label << ": " << (consumer_side ? k.kept_by_consumer : k.kept_by_supplier);
  }
}

TEST(Realize, ScenarioOneUniformOverbidding) {
  const auto ev = uniform(fixtures::scenario_one(), Strategy::O);
  EXPECT_NEAR(find(ev.contracts, 0, 0, 2).q_mu, 92.308, 5e-4);
  EXPECT_NEAR(find(ev.contracts, 0, 1, 1).q_mu, 116.923, 5e-4);
  EXPECT_NEAR(ev.outcome.tcq, 426.923, 5e-4);
}

TEST(Realize, ScenarioTwoUniformOverbiddingLeavesFourContracts) {
  const auto ev = uniform(fixtures::scenario_two(), Strategy::O);
  std::vector<double> positive;
  for (const auto& k : ev.contracts)
    if (k.q_mu > 0) positive.push_back(k.q_mu);
  ASSERT_EQ(positive.size(), 4u);
  EXPECT_NEAR(ev.outcome.tcq, 248.642, 5e-4);
}

TEST(Realize, AllNonOverbiddingKeepsEveryMatch) {
  support::Rng rng(3);
  std::vector<Scenario> scenarios{fixtures::scenario_one(), fixtures::scenario_two()};
  for (int n = 0; n < 200; ++n) scenarios.push_back(support::random_scenario(rng));
  for (const auto& sc : scenarios) {
    const auto ev = uniform(sc, Strategy::N);
    for (const auto& k : ev.contracts) EXPECT_EQ(k.q_mu, k.q_mo);
    EXPECT_NEAR(ev.outcome.tcq, ev.outcome.tmq, 1e-9 * std::max(1.0, ev.outcome.tmq));
  }
}

TEST(Realize, UniformProfileTables) {
  expect_contract_table(fixtures::scenario_one(), golden::kScenarioOneUniformContracts);
  expect_contract_table(fixtures::scenario_two(), golden::kScenarioTwoUniformContracts);
}

TEST(Realize, EveryProfileTable) {
  expect_contract_table(fixtures::scenario_one(), golden::kScenarioOneContracts);
  expect_contract_table(fixtures::scenario_two(), golden::kScenarioTwoContracts);
}

TEST(Utilities, NoContractsMeansZero) {
  const auto o = utilities({}, fixtures::scenario_one(), 0.0);
  EXPECT_EQ(o.u_consumers, (std::vector<double>{0, 0}));
  EXPECT_EQ(o.u_suppliers, (std::vector<double>{0, 0}));
  EXPECT_EQ(o.tcq, 0);
  EXPECT_EQ(o.tu, 0);
}

TEST(Utilities, UniformProfileTables) {
  for (const auto& [sc, table] : {std::pair{fixtures::scenario_one(), golden::kScenarioOneUniformUtilities},
                                  std::pair{fixtures::scenario_two(), golden::kScenarioTwoUniformUtilities}}) {
    for (const auto& row : support::keyed_rows(table)) {
      const auto o = uniform(sc, row.key == "O" ? Strategy::O : Strategy::N).outcome;
      const std::vector<double> got{o.u_consumers[0], o.u_consumers[1], o.u_suppliers[0],
                                    o.u_suppliers[1], o.tmq, o.tcq, o.tu};
      for (std::size_t k = 0; k < got.size(); ++k)
        EXPECT_TRUE(row.values[k].matches(got[k])) << sc.name << " " << row.key << " col " << k;
    }
  }
}

TEST(Contracting, RandomScenarioInvariants) {
  support::Rng rng(5);
  for (int n = 0; n < 500; ++n) {
    const Scenario sc = support::random_scenario(rng);
    const auto ev = evaluate_in_detail(sc, support::random_profile(rng, sc));
    auto failures = support::check_contracting(sc, ev.matches, ev.contracts);
    const auto more = support::check_outcome(sc, ev.contracts, ev.outcome);
    failures.insert(failures.end(), more.begin(), more.end());
    EXPECT_TRUE(failures.empty()) << "instance " << n << ": " << failures.front();
  }
}
