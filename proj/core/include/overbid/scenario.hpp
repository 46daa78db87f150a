#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace overbid {

/// Bidding strategy of a single player: bid the true quantity (N) or twice
/// it (O), both subject to delivery-point access caps.
enum class Strategy : std::uint8_t { N, O };

constexpr char to_char(Strategy s) { return s == Strategy::O ? 'O' : 'N'; }
constexpr Strategy flipped(Strategy s) { return s == Strategy::O ? Strategy::N : Strategy::O; }

struct Consumer {
  std::string id;
  double qr = 0.0;           // required quantity
  double u = 0.0;            // willingness to pay per unit
  std::vector<double> qbar;  // per-DP access caps
  std::vector<double> ct;    // per-DP unit transfer costs

  friend bool operator==(const Consumer&, const Consumer&) = default;
};

struct Supplier {
  std::string id;
  double qa = 0.0;           // available quantity
  double cp = 0.0;           // unit production cost
  std::vector<double> qbar;  // per-DP access caps
  std::vector<double> ct;    // per-DP unit transfer costs

  friend bool operator==(const Supplier&, const Supplier&) = default;
};

/// Immutable market description. Players are indexed consumers first
/// (0..n_C-1), then suppliers (n_C..n_C+n_S-1).
struct Scenario {
  std::string name;
  std::vector<std::string> dp_names;
  std::vector<Consumer> consumers;
  std::vector<Supplier> suppliers;

  std::size_t num_consumers() const { return consumers.size(); }
  std::size_t num_suppliers() const { return suppliers.size(); }
  std::size_t num_dps() const { return dp_names.size(); }
  std::size_t num_players() const { return consumers.size() + suppliers.size(); }

  /// Id of player `k` in the consumers-then-suppliers numbering.
  const std::string& player_id(std::size_t k) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Violation {
  std::string field;  // e.g. "consumers[0].qr"
  std::string rule;   // e.g. "must be > 0"

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every type invariant. An empty result means the scenario is valid.
std::vector<Violation> validate(const Scenario& scenario);

std::string describe(const Violation& v);

/// One strategy per player. Text form lists consumers first, then
/// suppliers, e.g. "ONNO" for C1=O, C2=N, S1=N, S2=O.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  StrategyProfile(std::vector<Strategy> consumers, std::vector<Strategy> suppliers)
      : consumers_(std::move(consumers)), suppliers_(std::move(suppliers)) {}

  /// All players play `s`.
  static StrategyProfile uniform(std::size_t n_consumers, std::size_t n_suppliers, Strategy s);

  /// Player k overbids iff bit k of `mask` is set.
  static StrategyProfile from_mask(std::uint32_t mask, std::size_t n_consumers,
                                   std::size_t n_suppliers);

  /// Parses the text form; nullopt when the length is wrong or a character
  /// is not 'N'/'O'.
  static std::optional<StrategyProfile> parse(std::string_view text, std::size_t n_consumers,
                                              std::size_t n_suppliers);

  const std::vector<Strategy>& consumers() const { return consumers_; }
  const std::vector<Strategy>& suppliers() const { return suppliers_; }
  std::size_t size() const { return consumers_.size() + suppliers_.size(); }

  Strategy player(std::size_t k) const;
  StrategyProfile with_player(std::size_t k, Strategy s) const;
  std::uint32_t mask() const;
  std::string to_string() const;

  bool fits(const Scenario& scenario) const {
    return consumers_.size() == scenario.num_consumers() &&
           suppliers_.size() == scenario.num_suppliers();
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<Strategy> consumers_;
  std::vector<Strategy> suppliers_;
};

}  // namespace overbid
