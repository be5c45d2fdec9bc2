#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cvge::cli {

enum class Format { Json, Csv, Text };

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// Rectangular result set that can be written as CSV, aligned text, or JSON rows.
/// Reals are written with 10 significant digits in CSV/text and round-trip precision in JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write_csv(std::ostream& out) const;
  void write_text(std::ostream& out) const;
  nlohmann::ordered_json to_json() const;
};

std::string format_real(double value);
nlohmann::ordered_json to_json(const Cell& cell);

}  // namespace cvge::cli
