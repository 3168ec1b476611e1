#include "magnomech/table.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <system_error>

#include <nlohmann/json.hpp>

namespace magnomech {

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json to_json(const Table& table,
                               const SystemParams* provenance) {
  nlohmann::ordered_json doc;
  doc["params"] = provenance
                      ? nlohmann::ordered_json::parse(emit_config(*provenance))
                      : nlohmann::ordered_json(nullptr);
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < table.columns.size() && c < row.size(); ++c) {
      if (const double* num = std::get_if<double>(&row[c]))
        obj[table.columns[c]] = *num;
      else
        obj[table.columns[c]] = std::get<std::string>(row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return doc;
}

}  // namespace

TableFormat table_format_from_name(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw std::invalid_argument("unknown table format: " + name);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c != 0) out << ',';
    out << csv_escape(table.columns[c]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out << ',';
      if (const double* num = std::get_if<double>(&row[c]))
        out << format_double(*num);
      else
        out << csv_escape(std::get<std::string>(row[c]));
    }
    out << "\r\n";
  }
}

void write_json(std::ostream& out, const Table& table,
                const SystemParams* provenance) {
  out << to_json(table, provenance).dump(2) << '\n';
}

void write_table_file(const std::filesystem::path& path, const Table& table,
                      TableFormat format, const SystemParams* provenance) {
  auto emit = [&](std::ostream& out) {
    if (format == TableFormat::csv)
      write_csv(out, table);
    else
      write_json(out, table, provenance);
  };

  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    emit(out);
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace magnomech
