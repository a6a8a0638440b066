#include "psearch/report.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

namespace psearch {
namespace {

TEST(CsvEscape, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_escape("two\nlines"), "\"two\nlines\"");
}

TEST(RoundSignificant, TwelveDigits) {
  EXPECT_EQ(round_significant(0.1234567890123456), 0.123456789012);
  EXPECT_EQ(round_significant(0.0), 0.0);
  EXPECT_EQ(nlohmann::json(round_significant(0.61547970928542)).dump(), "0.615479709285");
}

TEST(Render, HeaderOnlyCsvForEmptyTable) {
  Document doc;
  doc.add_meta("seed", std::uint64_t{1});
  doc.tables.push_back({"rows", {"K", "epsilon_star"}, {}});
  EXPECT_EQ(render_to_string(doc, Format::csv), "# seed: 1\r\nK,epsilon_star\r\n");
}

TEST(Render, JsonKeepsInsertionOrder) {
  Document doc;
  doc.add_meta("tool", std::string("psearch"));
  doc.add("queries", std::uint64_t{160});
  doc.add("l1", std::uint64_t{79});
  doc.add("epsilon", 0.6082);
  doc.add("block_probs", std::vector<double>{0.25, 0.75});
  const auto text = render_to_string(doc, Format::json);
  const auto parsed = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = parsed.begin(); it != parsed.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "queries", "l1", "epsilon", "block_probs"}));
  EXPECT_EQ(parsed["block_probs"][1].get<double>(), 0.75);
}

TEST(Render, ScalarCsvUsesOneRecordWithJoinedVectors) {
  Document doc;
  doc.add("name", std::string("a,b"));
  doc.add("probs", std::vector<double>{0.5, 0.5});
  EXPECT_EQ(render_to_string(doc, Format::csv), "name,probs\r\n\"a,b\",0.5;0.5\r\n");
}

TEST(Render, TextAlignsColumns) {
  Document doc;
  doc.tables.push_back({"t", {"K", "value"}, {{std::int64_t{2}, 0.5}, {std::int64_t{32}, 0.725}}});
  EXPECT_EQ(render_to_string(doc, Format::text), "\nt\n K  value\n 2    0.5\n32  0.725\n");
}

}  // namespace
}  // namespace psearch
