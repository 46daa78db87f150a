#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "overbid/fixtures.hpp"
#include "overbid/scenario_io.hpp"

namespace overbid::cli {

namespace {

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

struct Options {
  std::string scenario;
  std::string profile;
  std::string format = "csv";
  std::string out_path;
  std::string priority = "quantity";
  std::string table;
  std::string proposer = "consumer";
  std::string prefs_path;
  int precision = 3;
  int example = 0;
  unsigned threads = 1;
  bool drop_negative = false;
  bool restricted = false;
  bool overbid = false;
};

std::string num(double v, int precision) { return format_number(v, precision); }

Scenario load(const std::string& source) {
  if (source.empty()) throw CliError(kExitUsage, "--scenario is required");
  Scenario scenario;
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) {
    auto builtin = fixtures::builtin(std::string_view(source).substr(prefix.size()));
    if (!builtin) throw CliError(kExitInvalidInput, "unknown builtin scenario: " + source);
    scenario = std::move(*builtin);
  } else {
    try {
      scenario = load_scenario(source);
    } catch (const ScenarioFormatError& e) {
      throw CliError(kExitInvalidInput, e.what());
    }
  }
  const auto violations = validate(scenario);
  if (!violations.empty()) {
    std::string msg = "invalid scenario:";
    for (const auto& v : violations) msg += "\n  " + describe(v);
    throw CliError(kExitInvalidInput, msg);
  }
  return scenario;
}

StrategyProfile profile_for(const Scenario& scenario, const std::string& text) {
  if (text.empty())
    return StrategyProfile::uniform(scenario.num_consumers(), scenario.num_suppliers(), Strategy::N);
  auto profile = StrategyProfile::parse(text, scenario.num_consumers(), scenario.num_suppliers());
  if (!profile)
    throw CliError(kExitBadProfile,
                   "malformed profile '" + text + "': expected " +
                       std::to_string(scenario.num_players()) + " characters from {N, O}");
  return *profile;
}

Format format_of(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw CliError(kExitUsage, "unknown format: " + o.format);
  return *f;
}

PipelineOptions pipeline_of(const Options& o) {
  auto priority = parse_supply_priority(o.priority);
  if (!priority) throw CliError(kExitUsage, "unknown priority: " + o.priority);
  return {*priority, {o.drop_negative}};
}

SweepOptions sweep_options_of(const Options& o) { return {pipeline_of(o), o.threads}; }

void emit(const std::vector<Report>& reports, const Options& o, std::ostream& out) {
  std::string body;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (k) body += '\n';
    body += reports[k].body;
  }
  if (o.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw CliError(kExitUsage, "cannot write " + o.out_path);
  file << body;
}

std::vector<Report> cmd_run(const Options& o) {
  const Scenario scenario = load(o.scenario);
  const StrategyProfile profile = profile_for(scenario, o.profile);
  const Format format = format_of(o);
  const Evaluation ev = evaluate_in_detail(scenario, profile, pipeline_of(o));
  const int p = o.precision;

  std::vector<Report> reports;
  auto want = [&](std::string_view kind) { return o.table.empty() || o.table == kind; };
  if (want("bids")) reports.push_back(make_report(ReportKind::bids, format, {bids_table(scenario, ev.bids, p)}));
  if (want("matches"))
    reports.push_back(make_report(ReportKind::matches, format,
                                  {dp_totals_table(scenario, ev.matches, p),
                                   matches_table(scenario, ev.matches, p)}));
  if (want("contracts"))
    reports.push_back(make_report(ReportKind::contracts, format, {contracts_table(scenario, ev.contracts, p)}));
  if (want("utilities"))
    reports.push_back(make_report(ReportKind::utilities, format,
                                  {utilities_table(scenario, profile, ev.outcome, p)}));
  if (reports.empty()) throw CliError(kExitUsage, "unknown table: " + o.table);
  return reports;
}

SweepTable run_sweep(const Scenario& scenario, const Options& o, bool restricted) {
  try {
    return restricted ? sweep_supplier_restricted(scenario, sweep_options_of(o))
                      : sweep(scenario, sweep_options_of(o));
  } catch (const SweepTooLarge& e) {
    throw CliError(kExitInvalidInput, e.what());
  }
}

std::vector<Report> cmd_sweep(const Options& o) {
  const Scenario scenario = load(o.scenario);
  const Format format = format_of(o);
  const SweepTable table = run_sweep(scenario, o, false);
  return {make_report(ReportKind::sweep, format, {sweep_table(scenario, table, o.precision)})};
}

std::vector<Report> cmd_equilibria(const Options& o) {
  const Scenario scenario = load(o.scenario);
  const Format format = format_of(o);
  const SweepTable table = run_sweep(scenario, o, o.restricted);
  return {make_report(ReportKind::equilibria, format, equilibria_tables(scenario, table, o.precision))};
}

std::vector<Report> cmd_da(const Options& o) {
  const Scenario scenario = load(o.scenario);
  const StrategyProfile profile = profile_for(scenario, o.profile);
  const Format format = format_of(o);
  Side proposer;
  if (o.proposer == "consumer" || o.proposer == "consumers") {
    proposer = Side::consumer;
  } else if (o.proposer == "supplier" || o.proposer == "suppliers") {
    proposer = Side::supplier;
  } else {
    throw CliError(kExitUsage, "unknown proposer side: " + o.proposer);
  }
  const Evaluation ev = evaluate_in_detail(scenario, profile, pipeline_of(o));
  const StableContractSet stable = deferred_acceptance(ev.matches, scenario, proposer);
  return {make_report(ReportKind::da, format, da_tables(scenario, ev, stable, o.precision))};
}

PreferenceScenario load_prefs(const Options& o) {
  if (!o.prefs_path.empty() && o.example != 0)
    throw CliError(kExitUsage, "use either --example or --prefs");
  PreferenceScenario prefs;
  if (o.example == 1) {
    prefs = fixtures::rapid_example_one();
  } else if (o.example == 2) {
    prefs = fixtures::rapid_example_two();
  } else if (!o.prefs_path.empty()) {
    try {
      prefs = load_preferences(o.prefs_path);
    } catch (const ScenarioFormatError& e) {
      throw CliError(kExitInvalidInput, e.what());
    }
  } else {
    throw CliError(kExitUsage, "rapid needs --example 1|2 or --prefs <path>");
  }
  const auto violations = validate(prefs);
  if (!violations.empty()) {
    std::string msg = "invalid preferences:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw CliError(kExitInvalidInput, msg);
  }
  return prefs;
}

std::vector<Report> cmd_rapid(const Options& o) {
  const PreferenceScenario prefs = load_prefs(o);
  const Format format = format_of(o);
  return {make_report(ReportKind::rapid, format, rapid_tables(run_rapid(prefs, o.overbid), o.overbid))};
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: csv or md")->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write to this file instead of stdout");
  cmd->add_option("--precision", o.precision, "Decimals for numeric cells")
      ->capture_default_str()
      ->check(CLI::Range(0, 12));
}

void add_pipeline(CLI::App* cmd, Options& o) {
  cmd->add_option("--scenario", o.scenario, "Scenario JSON path or builtin:scenario1|scenario2")
      ->required();
  cmd->add_option("--priority", o.priority,
                  "Supply bids kept at an oversupplied DP: quantity or price")
      ->capture_default_str();
  cmd->add_flag("--drop-negative", o.drop_negative,
                "Drop matches with negative per-unit utility");
}

}  // namespace

std::vector<std::string> outcome_header(const Scenario& scenario) {
  std::vector<std::string> header{"profile"};
  for (std::size_t k = 0; k < scenario.num_players(); ++k) header.push_back("U_" + scenario.player_id(k));
  header.insert(header.end(), {"TMQ", "TCQ", "TU"});
  return header;
}

std::vector<std::string> outcome_row(const StrategyProfile& profile, const Outcome& outcome,
                                     int precision) {
  std::vector<std::string> row{profile.to_string()};
  for (double u : outcome.u_consumers) row.push_back(num(u, precision));
  for (double u : outcome.u_suppliers) row.push_back(num(u, precision));
  row.push_back(num(outcome.tmq, precision));
  row.push_back(num(outcome.tcq, precision));
  row.push_back(num(outcome.tu, precision));
  return row;
}

Table bids_table(const Scenario& scenario, const BidSet& bids, int precision) {
  Table t{"Bids", {"bid", "participant"}, {}};
  for (const auto& dp : scenario.dp_names) t.header.push_back(dp);
  auto add = [&](const char* kind, const std::string& id, std::span<const double> values) {
    std::vector<std::string> row{kind, id};
    for (double v : values) row.push_back(num(v, precision));
    t.rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < scenario.num_consumers(); ++i)
    add("quantity", scenario.consumers[i].id, bids.bqc.row(i));
  for (std::size_t j = 0; j < scenario.num_suppliers(); ++j)
    add("quantity", scenario.suppliers[j].id, bids.bqs.row(j));
  for (std::size_t j = 0; j < scenario.num_suppliers(); ++j)
    add("price", scenario.suppliers[j].id, bids.bps.row(j));
  return t;
}

Table dp_totals_table(const Scenario& scenario, const MatchSet& matches, int precision) {
  Table t{"Delivery points", {"dp", "qD", "qS", "bidders", "matched"}, {}};
  for (std::size_t d = 0; d < scenario.num_dps(); ++d)
    t.rows.push_back({scenario.dp_names[d], num(matches.dp_demand[d], precision),
                      num(matches.dp_supply[d], precision), std::to_string(matches.dp_bidders[d]),
                      num(std::min(matches.dp_demand[d], matches.dp_supply[d]), precision)});
  return t;
}

Table matches_table(const Scenario& scenario, const MatchSet& matches, int precision) {
  Table t{"Matches", {"consumer", "supplier", "dp", "quantity", "price"}, {}};
  for (const auto& m : matches.matches)
    t.rows.push_back({scenario.consumers[m.consumer].id, scenario.suppliers[m.supplier].id,
                      scenario.dp_names[m.dp], num(m.quantity, precision), num(m.price, precision)});
  return t;
}

Table contracts_table(const Scenario& scenario, const std::vector<KeptMatch>& contracts,
                      int precision) {
  Table t{"Contracts",
          {"consumer", "supplier", "dp", "q_MO", "kept_consumer", "kept_supplier", "q_MU"},
          {}};
  for (const auto& k : contracts)
    t.rows.push_back({scenario.consumers[k.match.consumer].id, scenario.suppliers[k.match.supplier].id,
                      scenario.dp_names[k.match.dp], num(k.q_mo, precision),
                      num(k.kept_by_consumer, precision), num(k.kept_by_supplier, precision),
                      num(k.q_mu, precision)});
  return t;
}

Table utilities_table(const Scenario& scenario, const StrategyProfile& profile,
                      const Outcome& outcome, int precision) {
  return {"Utilities", outcome_header(scenario), {outcome_row(profile, outcome, precision)}};
}

Table sweep_table(const Scenario& scenario, const SweepTable& table, int precision) {
  Table t{"Strategy sweep", outcome_header(scenario), {}};
  for (const auto& row : table.rows()) t.rows.push_back(outcome_row(row.profile, row.outcome, precision));
  return t;
}

std::vector<Table> equilibria_tables(const Scenario& scenario, const SweepTable& table,
                                     int precision) {
  const EquilibriumReport report = analyze(table);
  Table nash{"Nash equilibria", outcome_header(scenario), {}};
  for (const auto& p : report.nash) nash.rows.push_back(outcome_row(p, table.at(p), precision));
  Table dom{"Dominant strategies", {"player", "strategy", "dominance"}, {}};
  for (const auto& d : report.dominant)
    dom.rows.push_back({scenario.player_id(d.player),
                        d.strategy ? std::string(1, to_char(*d.strategy)) : "none",
                        !d.strategy ? "none" : d.strict ? "strict" : "weak"});
  return {nash, dom};
}

std::vector<Table> da_tables(const Scenario& scenario, const Evaluation& evaluation,
                             const StableContractSet& stable, int precision) {
  Table t{"Contracts",
          {"consumer", "supplier", "dp", "matched", "deferred_acceptance", "simultaneous_drop"},
          {}};
  for (const auto& k : evaluation.contracts) {
    double da = 0.0;
    for (const auto& c : stable.contracts)
      if (c.match.consumer == k.match.consumer && c.match.supplier == k.match.supplier &&
          c.match.dp == k.match.dp)
        da += c.quantity;
    t.rows.push_back({scenario.consumers[k.match.consumer].id, scenario.suppliers[k.match.supplier].id,
                      scenario.dp_names[k.match.dp], num(k.q_mo, precision), num(da, precision),
                      num(k.q_mu, precision)});
  }
  const auto drop_contracts = to_contracts(evaluation.contracts);
  const auto da_blocking = is_stable(stable, evaluation.matches, scenario);
  const auto drop_blocking = is_stable(drop_contracts, evaluation.matches, scenario);
  Table summary{"Summary", {"metric", "value"}, {}};
  summary.rows = {
      {"proposer", stable.proposer_side == Side::consumer ? "consumer" : "supplier"},
      {"rounds", std::to_string(stable.rounds)},
      {"TMQ", num(evaluation.matches.tmq, precision)},
      {"TCQ_deferred_acceptance", num(stable.total_quantity(), precision)},
      {"TCQ_simultaneous_drop", num(evaluation.outcome.tcq, precision)},
      {"blocking_pairs_deferred_acceptance", std::to_string(da_blocking.size())},
      {"blocking_pairs_simultaneous_drop", std::to_string(drop_blocking.size())},
  };
  return {t, summary};
}

std::vector<Table> rapid_tables(const RapidResult& result, bool overbid) {
  auto contains = [](const std::vector<Pairing>& v, const Pairing& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  };
  Table offers{"Offers", {"proposer", "responder", "accepted", "dated"}, {}};
  for (const auto& o : result.offers)
    offers.rows.push_back({o.proposer, o.responder, contains(result.matches, o) ? "yes" : "no",
                           contains(result.dates, o) ? "yes" : "no"});
  Table summary{"Summary", {"metric", "value"}, {}};
  std::string dates;
  for (const auto& d : result.dates) dates += (dates.empty() ? "" : " ") + d.proposer + "-" + d.responder;
  summary.rows = {
      {"strategy", overbid ? "O" : "N"},
      {"offers", std::to_string(result.offers.size())},
      {"matches", std::to_string(result.matches.size())},
      {"dates", std::to_string(result.dates.size())},
      {"dated_pairs", dates},
  };
  return {offers, summary};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator for non-binding joint-purchasing platforms with overbidding", "overbid"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Bids, matches, contracts and utilities for one profile");
  add_pipeline(run, o);
  add_common(run, o);
  run->add_option("--profile", o.profile, "Strategy per player, consumers first (default all N)");
  run->add_option("--table", o.table, "Only one table: bids, matches, contracts or utilities");

  auto* sw = app.add_subcommand("sweep", "Utilities for every strategy profile");
  add_pipeline(sw, o);
  add_common(sw, o);
  sw->add_option("--threads", o.threads, "Worker threads, 0 for all cores")->capture_default_str();

  auto* eq = app.add_subcommand("equilibria", "Pure Nash equilibria and dominant strategies");
  add_pipeline(eq, o);
  add_common(eq, o);
  eq->add_option("--threads", o.threads, "Worker threads, 0 for all cores")->capture_default_str();
  eq->add_flag("--restricted", o.restricted, "Suppliers may not overbid");

  auto* da = app.add_subcommand("da", "Deferred acceptance on the platform matches of one profile");
  add_pipeline(da, o);
  add_common(da, o);
  da->add_option("--profile", o.profile, "Strategy per player, consumers first (default all N)");
  da->add_option("--proposer", o.proposer, "consumer or supplier")->capture_default_str();

  auto* rapid = app.add_subcommand("rapid", "One-round marriage market with optional overbidding");
  add_common(rapid, o);
  rapid->add_option("--example", o.example, "Built-in example")->check(CLI::IsMember({1, 2}));
  rapid->add_option("--prefs", o.prefs_path, "Preference JSON file");
  rapid->add_flag("--overbid", o.overbid, "Proposers and responders use k offers/acceptances");

  auto* val = app.add_subcommand("validate", "Check a scenario or preference file");
  val->add_option("--scenario", o.scenario, "Scenario JSON path or builtin:NAME");
  val->add_option("--prefs", o.prefs_path, "Preference JSON file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) emit(cmd_run(o), o, out);
    else if (sw->parsed()) emit(cmd_sweep(o), o, out);
    else if (eq->parsed()) emit(cmd_equilibria(o), o, out);
    else if (da->parsed()) emit(cmd_da(o), o, out);
    else if (rapid->parsed()) emit(cmd_rapid(o), o, out);
    else if (val->parsed()) {
      if (o.scenario.empty() == o.prefs_path.empty())
        throw CliError(kExitUsage, "validate needs exactly one of --scenario or --prefs");
      if (!o.scenario.empty()) load(o.scenario);
      else load_prefs(o);
      out << "ok\n";
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace overbid::cli
