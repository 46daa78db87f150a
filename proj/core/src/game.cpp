#include "overbid/game.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

namespace overbid {

Evaluation evaluate_in_detail(const Scenario& scenario, const StrategyProfile& profile,
                              const PipelineOptions& options) {
  Evaluation ev;
  ev.bids = build_bids(scenario, profile);
  ev.matches = match_all(ev.bids, options.priority);
  ev.contracts = realize(ev.matches, scenario, options.contracting);
  ev.outcome = utilities(ev.contracts, scenario, ev.matches.tmq);
  return ev;
}

Outcome evaluate_profile(const Scenario& scenario, const StrategyProfile& profile,
                         const PipelineOptions& options) {
  return evaluate_in_detail(scenario, profile, options).outcome;
}

SweepTable::SweepTable(std::size_t n_consumers, std::size_t n_suppliers, std::uint32_t free_mask,
                       std::vector<SweepRow> rows)
    : n_consumers_(n_consumers),
      n_suppliers_(n_suppliers),
      free_mask_(free_mask),
      rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) index_.emplace(rows_[k].profile.mask(), k);
}

const Outcome* SweepTable::find(const StrategyProfile& profile) const {
  if (profile.consumers().size() != n_consumers_ || profile.suppliers().size() != n_suppliers_)
    return nullptr;
  auto it = index_.find(profile.mask());
  return it == index_.end() ? nullptr : &rows_[it->second].outcome;
}

const Outcome& SweepTable::at(const StrategyProfile& profile) const {
  const Outcome* o = find(profile);
  if (o == nullptr) throw std::out_of_range("profile " + profile.to_string() + " not in sweep");
  return *o;
}

std::vector<std::uint32_t> profile_order(std::uint32_t free_mask) {
  std::vector<std::uint32_t> positions;
  for (std::uint32_t k = 0; k < 32; ++k)
    if ((free_mask >> k) & 1U) positions.push_back(k);

  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << positions.size());
  std::vector<std::size_t> pick;
  // Combinations of positions, smallest sets first, each size in lex order.
  for (std::size_t k = 0; k <= positions.size(); ++k) {
    pick.resize(k);
    for (std::size_t n = 0; n < k; ++n) pick[n] = n;
    while (true) {
      std::uint32_t mask = 0;
      for (std::size_t p : pick) mask |= 1U << positions[p];
      out.push_back(mask);
      std::size_t n = k;
      while (n > 0 && pick[n - 1] == positions.size() - k + (n - 1)) --n;
      if (n == 0) break;
      ++pick[n - 1];
      for (std::size_t m = n; m < k; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  return out;
}

SweepTable sweep_subgame(const Scenario& scenario, std::uint32_t free_mask,
                         const SweepOptions& options) {
  const std::size_t n_c = scenario.num_consumers();
  const std::size_t n_s = scenario.num_suppliers();
  if (n_c + n_s > 32) throw SweepTooLarge("sweep: more than 32 players");
  if (n_c + n_s < 32) free_mask &= (std::uint32_t{1} << (n_c + n_s)) - 1U;
  if (static_cast<std::size_t>(std::popcount(free_mask)) > kMaxSweepPlayers)
    throw SweepTooLarge("sweep: more than " + std::to_string(kMaxSweepPlayers) +
                        " strategic players");

  const auto order = profile_order(free_mask);
  std::vector<SweepRow> rows(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rows[k].profile = StrategyProfile::from_mask(order[k], n_c, n_s);

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));

  // Each row is written by exactly one worker; the row order is fixed above.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t k = next++; k < rows.size(); k = next++)
        rows[k].outcome = evaluate_profile(scenario, rows[k].profile, options.pipeline);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return SweepTable(n_c, n_s, free_mask, std::move(rows));
}

SweepTable sweep(const Scenario& scenario, const SweepOptions& options) {
  const std::size_t n = scenario.num_players();
  if (n > kMaxSweepPlayers)
    throw SweepTooLarge("sweep: " + std::to_string(n) + " players exceeds the limit of " +
                        std::to_string(kMaxSweepPlayers));
  return sweep_subgame(scenario, (std::uint32_t{1} << n) - 1U, options);
}

namespace {

void for_each_improving(const SweepTable& table, auto&& visit) {
  for (const auto& row : table.rows()) {
    for (std::size_t p = 0; p < table.num_players(); ++p) {
      if (!table.is_free(p)) continue;
      const Strategy to = flipped(row.profile.player(p));
      const Outcome& other = table.at(row.profile.with_player(p, to));
      const double gain = other.player_utility(p) - row.outcome.player_utility(p);
      if (gain > kDeviationTol) visit(row, p, to, gain);
    }
  }
}

}  // namespace

std::vector<StrategyProfile> nash_equilibria(const SweepTable& table) {
  std::vector<bool> improvable(table.rows().size(), false);
  std::unordered_map<std::uint32_t, std::size_t> pos;
  for (std::size_t k = 0; k < table.rows().size(); ++k) pos[table.rows()[k].profile.mask()] = k;
  for_each_improving(table, [&](const SweepRow& row, std::size_t, Strategy, double) {
    improvable[pos.at(row.profile.mask())] = true;
  });
  std::vector<StrategyProfile> out;
  for (std::size_t k = 0; k < table.rows().size(); ++k)
    if (!improvable[k]) out.push_back(table.rows()[k].profile);
  return out;
}

std::vector<Dominance> dominant_strategies(const SweepTable& table) {
  std::vector<Dominance> out;
  for (std::size_t p = 0; p < table.num_players(); ++p) {
    if (!table.is_free(p)) continue;
    // Differences U(O) - U(N) against each opponent profile.
    std::vector<double> diffs;
    for (const auto& row : table.rows()) {
      if (row.profile.player(p) != Strategy::N) continue;
      const Outcome& over = table.at(row.profile.with_player(p, Strategy::O));
      diffs.push_back(over.player_utility(p) - row.outcome.player_utility(p));
    }
    auto all = [&](auto pred) { return std::all_of(diffs.begin(), diffs.end(), pred); };
    auto any = [&](auto pred) { return std::any_of(diffs.begin(), diffs.end(), pred); };
    const auto better = [](double d) { return d > kDeviationTol; };
    const auto worse = [](double d) { return d < -kDeviationTol; };

    Dominance d{p, std::nullopt, false};
    if (all(better)) {
      d = {p, Strategy::O, true};
    } else if (all(worse)) {
      d = {p, Strategy::N, true};
    } else if (!any(worse) && any(better)) {
      d = {p, Strategy::O, false};
    } else if (!any(better) && any(worse)) {
      d = {p, Strategy::N, false};
    }
    out.push_back(d);
  }
  return out;
}

EquilibriumReport analyze(const SweepTable& table) {
  EquilibriumReport report;
  report.nash = nash_equilibria(table);
  report.dominant = dominant_strategies(table);
  for_each_improving(table, [&](const SweepRow& row, std::size_t p, Strategy to, double gain) {
    report.best_responses.push_back({row.profile, p, to, gain});
  });
  return report;
}

}  // namespace overbid
