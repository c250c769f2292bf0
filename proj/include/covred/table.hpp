#pragma once

// Conversion of attribute-value tables into covering systems: nominal
// attributes induce partitions, numeric attributes neighborhood coverings.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "covred/system.hpp"

namespace covred {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated text with a header line. No quoting; surrounding blanks
/// are trimmed and blank lines skipped.
inline Table read_csv(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  auto split = [&](std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };

  Table table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    auto cells = split(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
      continue;
    }
    if (cells.size() != table.header.size())
      throw Error(ErrorKind::validation, "line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                                             " cells, header has " + std::to_string(table.header.size()));
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty()) throw Error(ErrorKind::validation, "table has no header line");
  return table;
}

enum class AttributeKind { nominal, numeric };

struct TableSchema {
  /// One entry per column; the decision column must be nominal.
  std::vector<AttributeKind> kinds;
  std::size_t decision_column = 0;
  /// Neighborhood radius per column (numeric columns only).
  std::vector<double> radius;
};

inline bool is_missing(const std::string& cell) { return cell.empty() || cell == "?" || cell == "NA"; }

/// Objects are labelled r1..rn in row order. Condition columns become
/// coverings named after their header; blocks and decision classes follow
/// first-appearance order.
inline CoveringSystem convert_table(const Table& table, const TableSchema& schema) {
  const auto cols = table.header.size();
  const auto n = table.rows.size();
  if (schema.kinds.size() != cols) throw Error(ErrorKind::usage, "schema lists " + std::to_string(schema.kinds.size()) + " columns, table has " + std::to_string(cols));
  if (schema.decision_column >= cols) throw Error(ErrorKind::usage, "decision column out of range");
  if (schema.kinds[schema.decision_column] != AttributeKind::nominal)
    throw Error(ErrorKind::validation, "decision column '" + table.header[schema.decision_column] + "' must be nominal");
  if (n == 0) throw Error(ErrorKind::validation, "table has no rows");

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t a = 0; a < cols; ++a)
      if (is_missing(table.rows[r][a]))
        throw Error(ErrorKind::validation, "missing value in row " + std::to_string(r + 1) + ", column '" + table.header[a] + "'");

  auto partition_of = [&](std::size_t a) {
    std::map<std::string, std::size_t> slot;
    std::vector<ObjectSet> blocks;
    for (std::size_t r = 0; r < n; ++r) {
      auto [it, inserted] = slot.emplace(table.rows[r][a], blocks.size());
      if (inserted) blocks.emplace_back(n);
      blocks[it->second].set(r);
    }
    return blocks;
  };

  std::vector<Covering> coverings;
  for (std::size_t a = 0; a < cols; ++a) {
    if (a == schema.decision_column) continue;
    if (schema.kinds[a] == AttributeKind::nominal) {
      coverings.emplace_back(table.header[a], n, partition_of(a));
      continue;
    }
    if (a >= schema.radius.size() || !(schema.radius[a] >= 0.0))
      throw Error(ErrorKind::usage, "numeric column '" + table.header[a] + "' needs a non-negative radius");
    std::vector<double> values(n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto& cell = table.rows[r][a];
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), values[r]);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(values[r]))
        throw Error(ErrorKind::validation, "non-numeric value '" + cell + "' in row " + std::to_string(r + 1) +
                                               ", column '" + table.header[a] + "'");
    }
    std::vector<ObjectSet> blocks;
    for (std::size_t r = 0; r < n; ++r) {
      ObjectSet nb(n);
      for (std::size_t s = 0; s < n; ++s)
        if (std::fabs(values[s] - values[r]) <= schema.radius[a]) nb.set(s);
      blocks.push_back(std::move(nb));
    }
    coverings.emplace_back(table.header[a], n, std::move(blocks));
  }
  if (coverings.empty()) throw Error(ErrorKind::validation, "table has no condition columns");

  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r) labels.push_back("r" + std::to_string(r + 1));
  return CoveringSystem(n, std::move(coverings), DecisionPartition(n, partition_of(schema.decision_column)),
                        std::move(labels));
}

}  // namespace covred
