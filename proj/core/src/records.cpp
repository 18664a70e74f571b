// SPDX-License-Identifier: Apache-2.0
#include "ncic/records.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace ncic {
namespace {

// Locale-independent fixed formatting; the CSV contract is six decimals
// with "." regardless of environment.
std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::fixed, 6);
  if (result.ec != std::errc{}) {
    throw std::invalid_argument("number does not fit the CSV cell format");
  }
  return std::string(buffer, result.ptr);
}

std::string render(const Cell& cell) {
  if (cell.kind == Cell::Kind::Number) return format_number(cell.number);
  for (const char ch : cell.text) {
    if (ch == ',' || ch == '"' || ch == '\n' || ch == '\r') {
      throw std::invalid_argument("cell text contains a delimiter character");
    }
  }
  return cell.text;
}

Cell parse_cell(const std::string& field) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto result = std::from_chars(begin, end, value);
  if (!field.empty() && result.ec == std::errc{} && result.ptr == end) {
    return Cell::num(value);
  }
  return Cell::txt(field);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

Cell Cell::txt(std::string value) {
  Cell cell;
  cell.kind = Kind::Text;
  cell.text = std::move(value);
  return cell;
}

Cell Cell::num(double value) {
  Cell cell;
  cell.kind = Kind::Number;
  cell.number = value;
  return cell;
}

void RecordTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string to_csv(const RecordTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += render(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const RecordTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].kind == Cell::Kind::Number) {
        object[table.columns[c]] = row[c].number;
      } else {
        object[table.columns[c]] = row[c].text;
      }
    }
    rows.push_back(std::move(object));
  }
  return rows.dump(2) + "\n";
}

RecordTable parse_csv(const std::string& text) {
  RecordTable table;
  std::size_t start = 0;
  bool have_header = false;
  while (start < text.size()) {
    std::size_t newline = text.find('\n', start);
    if (newline == std::string::npos) newline = text.size();
    const std::string line = text.substr(start, newline - start);
    start = newline + 1;
    if (!have_header) {
      table.columns = split_fields(line);
      have_header = true;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& field : split_fields(line)) {
      row.push_back(parse_cell(field));
    }
    table.add_row(std::move(row));
  }
  if (!have_header) {
    throw std::invalid_argument("csv input has no header row");
  }
  return table;
}

}  // namespace ncic
