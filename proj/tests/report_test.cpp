#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "aspnf/report.hpp"
#include "data.hpp"

using namespace aspnf;
using nlohmann::json;

TEST(CycleReport, Pi6Json) {
  const auto doc = json::parse(cycles_to_json(CycleAnalysis(load_program("pi6.lp"))));
  ASSERT_EQ(doc.at("cycles").size(), 3u);
  const auto& q = doc.at("cycles").at(2);
  EXPECT_EQ(q.at("kind"), "cycle");
  EXPECT_EQ(q.at("parity"), "odd");
  EXPECT_EQ(q.at("length"), 1);
  ASSERT_EQ(q.at("handles").size(), 1u);
  EXPECT_EQ(q.at("handles").at(0).at("kind"), "OR");
  EXPECT_EQ(q.at("handles").at(0).at("literals"), json::array({"not a"}));
  EXPECT_EQ(doc.at("cycles").at(1).at("handles").at(0).at("kind"), "AND");
  EXPECT_TRUE(doc.at("bridges").empty());
  EXPECT_EQ(doc.at("rules").at("q :- not a."), json::array({"auxiliary"}));
}

TEST(CycleReport, BridgeJson) {
  const auto doc = json::parse(cycles_to_json(CycleAnalysis(load_program("bridge_and_odd.lp"))));
  ASSERT_EQ(doc.at("bridges").size(), 1u);
  const auto& b = doc.at("bridges").at(0);
  EXPECT_EQ(b.at("kind"), "AND");
  EXPECT_EQ(b.at("parity"), "odd");
  EXPECT_EQ(b.at("length"), 3);
  EXPECT_EQ(b.at("chain"), json::array({"e", "f", "g"}));
  EXPECT_EQ(b.at("target"), "a");
}

TEST(CycleReport, Dot) {
  const std::string dot = cycles_to_dot(CycleAnalysis(load_program("pi6.lp")));
  EXPECT_TRUE(dot.starts_with("digraph G {\n"));
  EXPECT_NE(dot.find("subgraph cluster_0"), std::string::npos);
  EXPECT_NE(dot.find("subgraph cluster_2"), std::string::npos);
  EXPECT_NE(dot.find("\"q\" -> \"a\" [style=dashed];"), std::string::npos);
}

TEST(AnswerSetJson, Shape) {
  EXPECT_EQ(answer_sets_to_json({atoms("a"), atoms("b,c")}), R"([["a"],["b","c"]])");
  EXPECT_EQ(answer_sets_to_json({}), "[]");
}
