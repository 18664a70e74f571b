// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "ncic/records.hpp"

using namespace ncic;

namespace {

RecordTable sample_table() {
  RecordTable table;
  table.columns = {"alpha", "scheme", "value"};
  table.add_row({Cell::num(0.5), Cell::txt("rs"), Cell::num(0.3)});
  table.add_row({Cell::num(1.0), Cell::txt("train-fb"), Cell::num(-0.25)});
  table.add_row({Cell::num(12.0), Cell::txt(""), Cell::num(0.0)});
  return table;
}

}  // namespace

TEST_CASE("csv output is fixed-precision with LF endings") {
  const std::string csv = to_csv(sample_table());
  CHECK(csv ==
        "alpha,scheme,value\n"
        "0.500000,rs,0.300000\n"
        "1.000000,train-fb,-0.250000\n"
        "12.000000,,0.000000\n");
}

TEST_CASE("csv round-trips byte for byte") {
  const std::string csv = to_csv(sample_table());
  const RecordTable parsed = parse_csv(csv);
  CHECK(parsed.columns == sample_table().columns);
  REQUIRE(parsed.rows.size() == 3);
  CHECK(parsed.rows[0][0].kind == Cell::Kind::Number);
  CHECK(parsed.rows[0][0].number == 0.5);
  CHECK(parsed.rows[0][1].kind == Cell::Kind::Text);
  CHECK(parsed.rows[0][1].text == "rs");
  CHECK(to_csv(parsed) == csv);
}

TEST_CASE("cells that do not parse fully as numbers stay text") {
  const RecordTable parsed = parse_csv("h1,h2,h3\n1.5,1.5x,\n");
  REQUIRE(parsed.rows.size() == 1);
  CHECK(parsed.rows[0][0].kind == Cell::Kind::Number);
  CHECK(parsed.rows[0][1].kind == Cell::Kind::Text);
  CHECK(parsed.rows[0][1].text == "1.5x");
  CHECK(parsed.rows[0][2].kind == Cell::Kind::Text);
  CHECK(parsed.rows[0][2].text.empty());
}

TEST_CASE("json mirrors the column order of the csv") {
  const auto parsed = nlohmann::ordered_json::parse(to_json(sample_table()));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  std::vector<std::string> keys;
  for (const auto& item : parsed[0].items()) keys.push_back(item.key());
  CHECK(keys == sample_table().columns);
  CHECK(parsed[0]["alpha"] == 0.5);
  CHECK(parsed[0]["scheme"] == "rs");
  CHECK(parsed[1]["value"] == -0.25);
  CHECK(parsed[2]["scheme"] == "");

  const std::string text = to_json(sample_table());
  CHECK(text.back() == '\n');
  CHECK(text.find("  {") != std::string::npos);  // two-space indentation
}

TEST_CASE("malformed tables are rejected") {
  RecordTable table;
  table.columns = {"a", "b"};
  CHECK_THROWS_AS(table.add_row({Cell::num(1.0)}), std::invalid_argument);

  RecordTable bad;
  bad.columns = {"c"};
  bad.add_row({Cell::txt("x,y")});
  CHECK_THROWS_AS(to_csv(bad), std::invalid_argument);

  RecordTable quote;
  quote.columns = {"c"};
  quote.add_row({Cell::txt("say \"hi\"")});
  CHECK_THROWS_AS(to_csv(quote), std::invalid_argument);

  RecordTable newline;
  newline.columns = {"c"};
  newline.add_row({Cell::txt("two\nlines")});
  CHECK_THROWS_AS(to_csv(newline), std::invalid_argument);

  CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
  // Ragged body rows violate the header width.
  CHECK_THROWS_AS(parse_csv("a,b\n1.0\n"), std::invalid_argument);
}
