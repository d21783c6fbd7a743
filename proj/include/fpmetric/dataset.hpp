#pragma once

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpmetric/model.hpp"

namespace fpmetric {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed CSV content; the message names the offending row and column.
struct ParseError : std::runtime_error {
  ParseError(int row, std::string column, const std::string& detail)
      : std::runtime_error("ParseError: row " + std::to_string(row) + ", column " +
                           column + ": " + detail),
        row(row),
        column(std::move(column)) {}

  int row;  // 1-based data row, header not counted
  std::string column;
};

struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kDatasetHeader = "match_id,forecaster_id,ga1,ga2,gf1,gf2";

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace detail

/// Reads a forecast dataset: header `match_id,forecaster_id,ga1,ga2,gf1,gf2`,
/// one row per (match, forecaster). Throws ParseError on malformed rows,
/// DatasetError on duplicate (match_id, forecaster_id) keys or an empty
/// dataset.
inline std::vector<MatchRecord> read_dataset(std::istream& in) {
  static const std::vector<std::string> columns = {"match_id", "forecaster_id",
                                                   "ga1", "ga2", "gf1", "gf2"};
  std::string line;
  if (!std::getline(in, line) || detail::strip_cr(line) != kDatasetHeader)
    throw ParseError(0, "header", std::string("expected `") + kDatasetHeader + "`");

  std::vector<MatchRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  int row = 0;
  while (std::getline(in, line)) {
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    ++row;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != columns.size())
      throw ParseError(row, "row",
                       "expected 6 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) throw ParseError(row, "match_id", "empty token");
    if (fields[1].empty()) throw ParseError(row, "forecaster_id", "empty token");

    int goals[4];
    for (int i = 0; i < 4; ++i) {
      const auto parsed = parse_goals(fields[i + 2]);
      if (!parsed)
        throw ParseError(row, columns[i + 2],
                         "`" + fields[i + 2] + "` is not an integer in 0..99");
      goals[i] = *parsed;
    }

    if (!seen.emplace(fields[0], fields[1]).second)
      throw DatasetError("DuplicateKey: (" + fields[0] + ", " + fields[1] +
                         ") appears more than once");
    records.push_back(MatchRecord{fields[0], fields[1],
                                  Score{goals[0], goals[1]}, Score{goals[2], goals[3]}});
  }
  if (records.empty()) throw DatasetError("EmptyDataset: no data rows");
  return records;
}

inline std::vector<MatchRecord> read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("FileNotFound: cannot open " + path);
  return read_dataset(in);
}

}  // namespace fpmetric
