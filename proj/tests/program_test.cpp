#include <gtest/gtest.h>

#include "aspnf/error.hpp"
#include "aspnf/program.hpp"
#include "data.hpp"

using namespace aspnf;

TEST(Atom, AcceptsFlattenedNames) {
  EXPECT_EQ(Atom("color(0,red)").name(), "color(0,red)");
  EXPECT_FALSE(Atom("p").is_reserved());
  EXPECT_TRUE(Atom("__m").is_reserved());
}

TEST(Atom, RejectsBadCharacters) {
  EXPECT_THROW(Atom(""), InvalidAtomError);
  EXPECT_THROW(Atom("a b"), InvalidAtomError);
  EXPECT_THROW(Atom("a.b"), InvalidAtomError);
}

TEST(Rule, DropsDuplicateLiterals) {
  Rule r(Atom("p"), {Literal::neg(Atom("a")), Literal::neg(Atom("b")), Literal::neg(Atom("a"))});
  ASSERT_EQ(r.body().size(), 2u);
  EXPECT_EQ(r.body()[0], Literal::neg(Atom("a")));
  EXPECT_EQ(r.body()[1], Literal::neg(Atom("b")));
}

TEST(Rule, EqualityIgnoresBodyOrder) {
  Rule a(Atom("p"), {Literal::neg(Atom("a")), Literal::neg(Atom("b"))});
  Rule b(Atom("p"), {Literal::neg(Atom("b")), Literal::neg(Atom("a"))});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Rule(Atom("p"), {Literal::pos(Atom("a")), Literal::neg(Atom("b"))}));
}

TEST(Rule, Shape) {
  EXPECT_TRUE(Rule(Atom("a")).is_fact());
  EXPECT_FALSE(Rule(Atom("a")).is_purely_negative());
  Rule r(Atom("p"), {Literal::neg(Atom("p")), Literal::pos(Atom("q"))});
  EXPECT_FALSE(r.is_purely_negative());
  EXPECT_TRUE(r.mentions(Atom("q")));
  EXPECT_TRUE(r.contains(Literal::neg(Atom("p"))));
  EXPECT_FALSE(r.contains(Literal::pos(Atom("p"))));
}

TEST(Program, DropsRepeatedRulesAndKeepsOrder) {
  const Program p = prog("b :- not a. a :- not b. b :- not a.");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.rules()[0].head().name(), "b");
  EXPECT_EQ(p.atoms(), atoms("a,b"));
}

TEST(Program, EqualityIsSetBased) {
  EXPECT_EQ(prog("a :- not b. b :- not a."), prog("b :- not a. a :- not b."));
  EXPECT_NE(prog("a :- not b."), prog("a :- not b. b :- not a."));
}

TEST(Program, BuildRejectsReservedAtoms) {
  EXPECT_THROW(build_program({Rule(Atom("__x"))}), ReservedAtomError);
  EXPECT_NO_THROW(build_program({Rule(Atom("x"))}));
}

TEST(DependencyGraph, Pi6) {
  const auto g = build_dependency_graph(load_program("pi6.lp"));
  EXPECT_EQ(g.vertices.size(), 4u);
  EXPECT_EQ(g.edges.size(), 6u);
  for (const auto& e : g.edges) EXPECT_EQ(e.polarity, Polarity::negative);
  EXPECT_TRUE(g.edges.contains(Edge{Atom("p"), Atom("b"), Polarity::negative}));
}

TEST(DependencyGraph, PositiveEdge) {
  const auto g = build_dependency_graph(prog("a :- b."));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(*g.edges.begin(), (Edge{Atom("a"), Atom("b"), Polarity::positive}));
}

TEST(Program, PurelyNegative) {
  EXPECT_TRUE(is_purely_negative(load_program("pi6.lp")));
  EXPECT_FALSE(is_purely_negative(prog("a. b :- not a.")));
  EXPECT_FALSE(is_purely_negative(prog("p :- not p, q.")));
  EXPECT_TRUE(is_purely_negative(Program{}));
}
