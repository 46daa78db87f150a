#include "overbid/alternatives.hpp"

#include <algorithm>
#include <numeric>

namespace overbid {

namespace {

// Quantities below this are treated as zero when comparing capacities.
constexpr double kQuantityEps = 1e-7;

struct Role {
  Side side;
  std::size_t (*owner)(const Match&);
  std::size_t (*counterpart)(const Match&);
};

std::size_t consumer_of(const Match& m) { return m.consumer; }
std::size_t supplier_of(const Match& m) { return m.supplier; }

Role role(Side side) {
  return side == Side::consumer ? Role{Side::consumer, consumer_of, supplier_of}
                                : Role{Side::supplier, supplier_of, consumer_of};
}

double capacity(const Scenario& sc, Side side, std::size_t p) {
  return side == Side::consumer ? sc.consumers.at(p).qr : sc.suppliers.at(p).qa;
}

double dp_cap(const Scenario& sc, Side side, std::size_t p, std::size_t t) {
  return side == Side::consumer ? sc.consumers.at(p).qbar.at(t) : sc.suppliers.at(p).qbar.at(t);
}

std::size_t count(const Scenario& sc, Side side) {
  return side == Side::consumer ? sc.num_consumers() : sc.num_suppliers();
}

// Edge indices of each participant on `side`, best first.
std::vector<std::vector<std::size_t>> preference_lists(const std::vector<Match>& edges,
                                                       const Scenario& sc, Side side) {
  const Role r = role(side);
  std::vector<std::vector<std::size_t>> lists(count(sc, side));
  std::vector<double> util(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    lists.at(r.owner(edges[e])).push_back(e);
    util[e] = per_unit_utility(edges[e], side, sc);
  }
  for (auto& list : lists) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      if (util[a] != util[b]) return util[a] > util[b];
      if (edges[a].dp != edges[b].dp) return edges[a].dp < edges[b].dp;
      if (r.counterpart(edges[a]) != r.counterpart(edges[b]))
        return r.counterpart(edges[a]) < r.counterpart(edges[b]);
      return a < b;
    });
  }
  return lists;
}

// Greedy fill of `list` against per-edge limits, total capacity and DP caps.
void fill(const std::vector<std::size_t>& list, const std::vector<Match>& edges,
          const std::vector<double>& limit, double total, const Scenario& sc, Side side,
          std::size_t p, std::vector<double>& out) {
  std::vector<double> dp_left(sc.num_dps());
  for (std::size_t t = 0; t < sc.num_dps(); ++t) dp_left[t] = dp_cap(sc, side, p, t);
  double left = total;
  for (std::size_t e : list) {
    const std::size_t t = edges[e].dp;
    const double x = std::max(0.0, std::min({limit[e], left, dp_left[t]}));
    out[e] = x;
    left -= x;
    dp_left[t] -= x;
  }
}

}  // namespace

SweepTable sweep_supplier_restricted(const Scenario& scenario, const SweepOptions& options) {
  const std::size_t n_c = scenario.num_consumers();
  if (n_c > kMaxSweepPlayers) throw SweepTooLarge("restricted sweep: too many consumers");
  return sweep_subgame(scenario, (std::uint32_t{1} << n_c) - 1U, options);
}

double StableContractSet::total_quantity() const {
  double s = 0.0;
  for (const auto& c : contracts) s += c.quantity;
  return s;
}

StableContractSet deferred_acceptance(const MatchSet& match_set, const Scenario& scenario,
                                      Side proposer) {
  const Side responder = proposer == Side::consumer ? Side::supplier : Side::consumer;
  const auto& edges = match_set.matches;
  const auto proposer_lists = preference_lists(edges, scenario, proposer);
  const auto responder_lists = preference_lists(edges, scenario, responder);

  std::vector<double> limit(edges.size());  // not yet rejected
  for (std::size_t e = 0; e < edges.size(); ++e) limit[e] = edges[e].quantity;
  std::vector<double> offer(edges.size(), 0.0);
  std::vector<double> held(edges.size(), 0.0);

  StableContractSet result;
  result.proposer_side = proposer;

  while (true) {
    // Proposals: best remaining matches up to capacity. Offers only grow.
    std::vector<double> next(edges.size(), 0.0);
    for (std::size_t p = 0; p < proposer_lists.size(); ++p)
      fill(proposer_lists[p], edges, limit, capacity(scenario, proposer, p), scenario, proposer, p,
           next);
    bool new_offers = false;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (next[e] > offer[e] + kQuantityEps) new_offers = true;
    offer = std::move(next);
    if (!new_offers && result.rounds > 0) break;
    ++result.rounds;

    // Responses: hold the best offers, reject the rest for good.
    bool rejected = false;
    for (std::size_t r = 0; r < responder_lists.size(); ++r) {
      fill(responder_lists[r], edges, offer, capacity(scenario, responder, r), scenario, responder,
           r, held);
      for (std::size_t e : responder_lists[r]) {
        if (offer[e] > held[e]) {
          if (offer[e] - held[e] > kQuantityEps) rejected = true;
          limit[e] = held[e];
          offer[e] = held[e];
        }
      }
    }
    if (!rejected) break;
  }

  for (std::size_t e = 0; e < edges.size(); ++e)
    if (held[e] > 0.0) result.contracts.push_back({edges[e], held[e]});
  return result;
}

std::vector<BlockingPair> is_stable(std::span<const Contract> contracts, const MatchSet& match_set,
                                    const Scenario& scenario) {
  const auto& edges = match_set.matches;
  std::vector<double> x(edges.size(), 0.0);
  for (const auto& c : contracts) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].consumer == c.match.consumer && edges[e].supplier == c.match.supplier &&
          edges[e].dp == c.match.dp) {
        x[e] += c.quantity;
        break;
      }
    }
  }

  // Would the participant on `side` take more of edge e?
  auto wants_more = [&](std::size_t e, Side side) {
    const Role r = role(side);
    const std::size_t p = r.owner(edges[e]);
    const std::size_t t = edges[e].dp;
    double used = 0.0, used_at_dp = 0.0;
    for (std::size_t f = 0; f < edges.size(); ++f) {
      if (r.owner(edges[f]) != p) continue;
      used += x[f];
      if (edges[f].dp == t) used_at_dp += x[f];
    }
    const bool dp_room = dp_cap(scenario, side, p, t) - used_at_dp > kQuantityEps;
    if (dp_room && capacity(scenario, side, p) - used > kQuantityEps) return true;
    const double u = per_unit_utility(edges[e], side, scenario);
    for (std::size_t f = 0; f < edges.size(); ++f) {
      if (f == e || r.owner(edges[f]) != p || x[f] <= kQuantityEps) continue;
      if (per_unit_utility(edges[f], side, scenario) < u - kUtilityTieTol &&
          (dp_room || edges[f].dp == t))
        return true;
    }
    return false;
  };

  std::vector<BlockingPair> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].quantity - x[e] <= kQuantityEps) continue;
    if (wants_more(e, Side::consumer) && wants_more(e, Side::supplier))
      out.push_back({edges[e], x[e]});
  }
  return out;
}

std::vector<BlockingPair> is_stable(const StableContractSet& contracts, const MatchSet& match_set,
                                    const Scenario& scenario) {
  return is_stable(contracts.contracts, match_set, scenario);
}

std::vector<Contract> to_contracts(std::span<const KeptMatch> kept) {
  std::vector<Contract> out;
  for (const auto& k : kept)
    if (k.q_mu > 0.0) out.push_back({k.match, k.q_mu});
  return out;
}

}  // namespace overbid
