#include "ulrich_lab/cli/table.hpp"

#include "ulrich_lab/error.hpp"

namespace ulrich_lab::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<Integer>(&c)) return i->str();
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

Json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<Integer>(&c)) return integer_to_json(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string markdown_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "markdown") return OutputFormat::Markdown;
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Markdown: return "markdown";
  }
  return "?";
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorCode::InternalMismatch, "row width does not match the columns of " + title);
  }
  rows.push_back(std::move(row));
}

Json Table::to_json() const {
  Json out_rows = Json::array();
  for (const auto& row : rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = cell_json(row[i]);
    out_rows.push_back(std::move(obj));
  }
  Json out{{"table", title}, {"rows", std::move(out_rows)}};
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      os << table.to_json().dump(2) << '\n';
      return;
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_escape(table.columns[i]);
      }
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
      }
      return;
    case OutputFormat::Markdown:
      if (!table.title.empty()) os << "### " << table.title << "\n\n";
      os << '|';
      for (const auto& c : table.columns) os << ' ' << markdown_escape(c) << " |";
      os << "\n|";
      for (std::size_t i = 0; i < table.columns.size(); ++i) os << "---|";
      os << '\n';
      for (const auto& row : table.rows) {
        os << '|';
        for (const auto& c : row) os << ' ' << markdown_escape(cell_text(c)) << " |";
        os << '\n';
      }
      if (!table.notes.empty()) {
        os << '\n';
        for (const auto& n : table.notes) os << "> " << n << '\n';
      }
      return;
  }
}

}  // namespace ulrich_lab::cli
