#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kerrqc::cli {

/// Shortest decimal that round-trips to the same double (at most 17
/// significant digits). NaN and infinities print as nan / inf / -inf.
std::string format_double(double v);

struct CsvColumn {
  std::string name;
  std::string unit;         // "1" for dimensionless
  std::string description;
};

/// Empty cell (std::monostate), number, or bare text.
using CsvCell = std::variant<std::monostate, double, std::string>;

/// Comma-separated table with '#' comment lines above the header. A table may
/// hold several blocks; each block gets its own '# block ...' line and blocks
/// are separated by one blank line.
class CsvTable {
 public:
  explicit CsvTable(std::vector<CsvColumn> columns) : columns_(std::move(columns)) {}

  void comment(std::string line) { comments_.push_back(std::move(line)); }
  void begin_block(std::string label);
  void add_row(std::vector<CsvCell> row);
  /// Comment lines written after the last row.
  void footer(std::string line) { footers_.push_back(std::move(line)); }

  std::string str() const;
  const std::vector<CsvColumn>& columns() const { return columns_; }

 private:
  struct Block {
    std::optional<std::string> label;
    std::vector<std::vector<CsvCell>> rows;
  };
  std::vector<CsvColumn> columns_;
  std::vector<std::string> comments_;
  std::vector<Block> blocks_;
  std::vector<std::string> footers_;
};

}  // namespace kerrqc::cli
