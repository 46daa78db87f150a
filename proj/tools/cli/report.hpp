#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace overbid::cli {

enum class Format { csv, markdown };

std::optional<Format> parse_format(std::string_view text);

enum class ReportKind { bids, matches, contracts, utilities, sweep, equilibria, da, rapid };

std::string_view to_string(ReportKind kind);

/// Fixed-point with `precision` decimals, trailing zeros and a bare
/// trailing point removed, and negative zero printed as "0".
std::string format_number(double value, int precision);

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& table);
std::string render_markdown(const Table& table);
std::string render(const Table& table, Format format);

struct Report {
  ReportKind kind;
  Format format;
  std::string body;
};

/// Several tables of one report. CSV sections are separated by a blank
/// line; markdown sections get a heading each.
Report make_report(ReportKind kind, Format format, const std::vector<Table>& tables);

/// Splits CSV text into records. Handles quoted fields; a blank line ends
/// a section and is returned as an empty record.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace overbid::cli
