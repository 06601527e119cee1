#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ulrich_lab/json_io.hpp"

namespace ulrich_lab::cli {

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format);

using Cell = std::variant<Integer, std::string, bool>;

/// A titled table with typed cells; JSON output keeps numbers and booleans typed.
struct Table {
  Table(std::string title, std::vector<std::string> columns) : title(std::move(title)), columns(std::move(columns)) {}

  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Free-form lines printed under markdown tables and as "notes" in JSON.
  std::vector<std::string> notes;

  void add_row(std::vector<Cell> row);
  Json to_json() const;
};

void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace ulrich_lab::cli
