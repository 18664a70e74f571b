// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace ncic {

// One table cell: free text or a double. Numbers serialize with six decimals
// and "." as the decimal separator regardless of locale.
struct Cell {
  enum class Kind { Text, Number };

  Kind kind = Kind::Text;
  std::string text;
  double number = 0.0;

  static Cell txt(std::string value);
  static Cell num(double value);
};

// Rectangular table with a fixed column order. All command output flows
// through this type so CSV and JSON stay column-for-column identical.
struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Throws if the row width does not match the header.
  void add_row(std::vector<Cell> row);
};

// Header row plus one line per record, LF endings, byte-deterministic.
// Cell text must not contain commas, quotes, or line breaks (throws).
std::string to_csv(const RecordTable& table);

// Array of objects keyed by column name, in column order, two-space
// indentation, trailing newline.
std::string to_json(const RecordTable& table);

// Inverse of to_csv for tables it emitted: cells that parse fully as a
// number become Number cells, everything else stays text. Re-emitting the
// parsed table reproduces the input byte for byte.
RecordTable parse_csv(const std::string& text);

}  // namespace ncic
