#include <gtest/gtest.h>

#include <random>

#include "aspnf/error.hpp"
#include "aspnf/text_io.hpp"
#include "data.hpp"
#include "gen.hpp"

using namespace aspnf;

TEST(Parse, SelfLoop) {
  const Program p = parse_program("p :- not p.");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.rules()[0].head(), Atom("p"));
  ASSERT_EQ(p.rules()[0].body().size(), 1u);
  EXPECT_EQ(p.rules()[0].body()[0], Literal::neg(Atom("p")));
}

TEST(Parse, Empty) {
  EXPECT_TRUE(parse_program("").empty());
  EXPECT_TRUE(parse_program("  % nothing here\n\n").empty());
}

TEST(Parse, MissingDotReportsLine) {
  try {
    parse_program("p :- q");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.span().line, 1u);
  }
}

TEST(Parse, ErrorPositionOnLaterLine) {
  try {
    parse_program("a :- not b.\nb :- not a.\nc :- ,.\n");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.span().line, 3u);
    EXPECT_EQ(e.span().column, 6u);
  }
}

TEST(Parse, ArgumentsFlatten) {
  const Program p = parse_program("color(0, red) :- not color(0,blue), not color( 0 , green ).");
  EXPECT_EQ(p.rules()[0].head().name(), "color(0,red)");
  EXPECT_EQ(p.rules()[0].body()[1].atom.name(), "color(0,green)");
}

TEST(Parse, NotAloneIsAnAtom) {
  const Program p = parse_program("a :- not. not :- not not.");
  EXPECT_EQ(p.rules()[0].body()[0], Literal::pos(Atom("not")));
  EXPECT_EQ(p.rules()[1].body()[0], Literal::neg(Atom("not")));
}

TEST(Parse, RejectsBareIntegersAndUppercase) {
  EXPECT_THROW(parse_program("1 :- a."), SyntaxError);
  EXPECT_THROW(parse_program("P :- a."), SyntaxError);
  EXPECT_THROW(parse_program("p(X) :- a."), SyntaxError);
}

TEST(Parse, ReservedPrefix) {
  EXPECT_THROW(parse_program("__m :- not a."), ReservedAtomError);
  EXPECT_NO_THROW(parse_program("__m :- not a.", {.allow_reserved = true}));
}

TEST(Parse, ConstraintSugar) {
  const Program p = parse_program("a :- not b. b :- not a. :- a.");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.rules()[2], Rule(Atom("__c_1"), {Literal::neg(Atom("__c_1")), Literal::pos(Atom("a"))}));
  EXPECT_EQ(render_program(p), "a :- not b.\nb :- not a.\n:- a.\n");
}

TEST(Parse, AtomList) {
  EXPECT_TRUE(parse_atom_list("").empty());
  EXPECT_EQ(parse_atom_list("b, a,color(1,red)"), (AtomSet{Atom("a"), Atom("b"), Atom("color(1,red)")}));
  EXPECT_THROW(parse_atom_list("a,,b"), SyntaxError);
}

TEST(Render, Basics) {
  EXPECT_EQ(render_program(Program{}), "");
  EXPECT_EQ(render_program(Program({Rule(Atom("p"), {Literal::neg(Atom("p"))})})), "p :- not p.\n");
  EXPECT_EQ(render_rule(Rule(Atom("a"))), "a.");
  EXPECT_EQ(render_atoms(atoms("c,a")), "a,c");
}

TEST(Render, Pi5RoundTrip) {
  const std::string text = read_data("pi5.lp");
  const Program p = parse_program(text);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(render_program(p), text);
  EXPECT_EQ(parse_program(render_program(p)), p);
}

TEST(Render, RoundTripProperty) {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Program p = gen::program(rng, 1 + gen::below(rng, 8), gen::below(rng, 10), 4);
    EXPECT_EQ(parse_program(render_program(p)), p) << render_program(p);
  }
}

TEST(Dot, Shapes) {
  EXPECT_EQ(export_dot(Program{}), "digraph G {\n}\n");
  EXPECT_EQ(export_dot(parse_program("a :- not b.")),
            "digraph G {\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\" [style=dashed];\n}\n");
  EXPECT_EQ(export_dot(parse_program("a :- b.")), "digraph G {\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\";\n}\n");
  const std::string dot = export_dot(load_program("pi6.lp"));
  std::size_t dashed = 0;
  for (std::size_t pos = 0; (pos = dot.find("[style=dashed]", pos)) != std::string::npos; ++pos) ++dashed;
  EXPECT_EQ(dashed, 6u);
}

TEST(Dot, Quoting) { EXPECT_EQ(dot_quote("a\"b"), "\"a\\\"b\""); }

TEST(Parse, FuzzNeverCrashes) {
  std::mt19937_64 rng(2024);
  const std::string alphabet = "abnot :-.,()%_019 \n\tXY#";
  std::size_t parsed = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string text(rng() % 40, ' ');
    for (auto& c : text) c = (rng() % 8 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    try {
      const Program p = parse_program(text);
      ++parsed;
      EXPECT_EQ(parse_program(render_program(p), {.allow_reserved = true}), p);
    } catch (const Error&) {
    }
  }
  EXPECT_GT(parsed, 0u);
}
