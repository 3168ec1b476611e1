#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "magnomech/params.hpp"

namespace magnomech {

/// A plot-ready result table. Numeric cells are written with shortest
/// round-trip formatting; string cells carry statuses or error messages.
struct Table {
  using Cell = std::variant<double, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::vector<Cell>& add_row() { return rows.emplace_back(); }
};

enum class TableFormat { csv, json };

[[nodiscard]] TableFormat table_format_from_name(const std::string& name);

/// Shortest decimal form that parses back to the same double.
[[nodiscard]] std::string format_double(double value);

/// RFC-4180 CSV: CRLF line endings, mandatory header row, quoting only where
/// needed.
void write_csv(std::ostream& out, const Table& table);

/// One top-level object {params, rows}; `params` holds the resolved config
/// (null when absent), rows are objects keyed by column name.
void write_json(std::ostream& out, const Table& table,
                const SystemParams* provenance);

/// Writes atomically: temp file in the target directory, then rename.
/// A path of "-" writes to stdout.
void write_table_file(const std::filesystem::path& path, const Table& table,
                      TableFormat format, const SystemParams* provenance);

}  // namespace magnomech
