#include "report.hpp"

#include <cstdio>
#include <stdexcept>

namespace overbid::cli {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "md" || text == "markdown") return Format::markdown;
  return std::nullopt;
}

std::string_view to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::bids: return "bids";
    case ReportKind::matches: return "matches";
    case ReportKind::contracts: return "contracts";
    case ReportKind::utilities: return "utilities";
    case ReportKind::sweep: return "sweep";
    case ReportKind::equilibria: return "equilibria";
    case ReportKind::da: return "da";
    case ReportKind::rapid: return "rapid";
  }
  return "unknown";
}

std::string format_number(double value, int precision) {
  if (precision < 0) throw std::invalid_argument("precision must be >= 0");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::string csv_field(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& cell) {
  std::string out;
  for (char c : cell) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void append_csv_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out += ',';
    out += csv_field(row[k]);
  }
  out += '\n';
}

void append_md_row(std::string& out, const std::vector<std::string>& row) {
  out += '|';
  for (const auto& cell : row) out += ' ' + md_cell(cell) + " |";
  out += '\n';
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  append_csv_row(out, table.header);
  for (const auto& row : table.rows) append_csv_row(out, row);
  return out;
}

std::string render_markdown(const Table& table) {
  std::string out;
  append_md_row(out, table.header);
  out += '|';
  for (std::size_t k = 0; k < table.header.size(); ++k) out += " --- |";
  out += '\n';
  for (const auto& row : table.rows) append_md_row(out, row);
  return out;
}

std::string render(const Table& table, Format format) {
  return format == Format::csv ? render_csv(table) : render_markdown(table);
}

Report make_report(ReportKind kind, Format format, const std::vector<Table>& tables) {
  std::string body;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (k) body += '\n';
    if (format == Format::markdown && !tables[k].title.empty())
      body += "### " + tables[k].title + "\n\n";
    body += render(tables[k], format);
  }
  return {kind, format, std::move(body)};
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"' && k + 1 < text.size() && text[k + 1] == '"') {
        field += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !field.empty()) record.push_back(std::move(field));
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (any || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace overbid::cli
