#include "oscp/table.hpp"

#include <stdexcept>

#include <json.hpp>

namespace oscp {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("Table::add_row: cell count does not match columns");
  rows_.push_back(std::move(row));
}

std::string Table::format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string cell_to_string(const Table::Cell& c) {
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<double>(c)) return Table::format_double(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  return std::get<bool>(c) ? "true" : "false";
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::string>(c))
        obj[columns_[i]] = std::get<std::string>(c);
      else if (std::holds_alternative<double>(c))
        obj[columns_[i]] = std::get<double>(c);
      else if (std::holds_alternative<long long>(c))
        obj[columns_[i]] = std::get<long long>(c);
      else
        obj[columns_[i]] = std::get<bool>(c);
    }
    rows.push_back(std::move(obj));
  }
  return nlohmann::json{{"rows", rows}}.dump(2) + "\n";
}

}  // namespace oscp
