#pragma once

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

namespace oscp {

/// Row/column table rendered to CSV or JSON. CSV uses '.' decimals, 17
/// significant digits, a header row and LF line endings, so doubles
/// round-trip losslessly and repeated runs diff clean.
class Table {
 public:
  using Cell = std::variant<std::string, double, long long, bool>;

  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::string>& columns() const { return columns_; }

  std::string to_csv() const;
  std::string to_json() const;

  static std::string format_double(double v);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace oscp
