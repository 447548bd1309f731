#include "csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace kerrqc::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buf.data(), res.ptr);
}

void CsvTable::begin_block(std::string label) { blocks_.push_back({std::move(label), {}}); }

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("csv row has " + std::to_string(row.size()) + " cells, table has " +
                           std::to_string(columns_.size()) + " columns");
  }
  if (blocks_.empty()) blocks_.push_back({});
  blocks_.back().rows.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  for (const auto& c : comments_) out += "# " + c + '\n';
  for (const auto& c : columns_) out += "# " + c.name + " [" + c.unit + "]: " + c.description + '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i].name;
  }
  out += '\n';
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '\n';
    if (blocks_[b].label) out += "# block " + *blocks_[b].label + '\n';
    for (const auto& row : blocks_[b].rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        if (const double* d = std::get_if<double>(&row[i])) {
          out += format_double(*d);
        } else if (const std::string* s = std::get_if<std::string>(&row[i])) {
          out += *s;
        }
      }
      out += '\n';
    }
  }
  for (const auto& f : footers_) out += "# " + f + '\n';
  return out;
}

}  // namespace kerrqc::cli
