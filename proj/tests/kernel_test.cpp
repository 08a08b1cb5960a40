#include <gtest/gtest.h>

#include <algorithm>

#include "aspnf/error.hpp"
#include "aspnf/generators.hpp"
#include "aspnf/kernel.hpp"
#include "aspnf/text_io.hpp"
#include "data.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace aspnf;

namespace {

bool has_violation(const KernelReport& r, KernelCondition c, const Witness& w) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const KernelViolation& v) { return v.condition == c && v.witness == w; });
}

std::vector<oracle::Set> oracle_projection(const Program& p, const AtomSet& h) {
  return oracle::project(oracle::answer_sets(oracle::from(p)), oracle::names(h));
}

std::vector<oracle::Set> named(const std::vector<AtomSet>& sets) {
  std::vector<oracle::Set> out;
  for (const auto& s : sets) out.push_back(oracle::names(s));
  return out;
}

}  // namespace

TEST(CheckKernel, SingleEdgeColoring) {
  const auto g = UndirectedGraph({0, 1}, {{0, 1}});
  const auto report = check_kernel(encode_3col(g));
  EXPECT_TRUE(report.is_kernel);
  EXPECT_TRUE(report.violations.empty());
}

TEST(CheckKernel, FactReportsAllThree) {
  const auto report = check_kernel(prog("a."));
  EXPECT_FALSE(report.is_kernel);
  EXPECT_EQ(report.violations.size(), 3u);
  EXPECT_TRUE(has_violation(report, KernelCondition::wfs_irreducible, Atom("a")));
  EXPECT_TRUE(has_violation(report, KernelCondition::negative_bodies_only, Rule(Atom("a"))));
  EXPECT_TRUE(has_violation(report, KernelCondition::every_atom_in_some_body, Atom("a")));
}

TEST(CheckKernel, PositiveLiteral) {
  const Program p = prog("p :- not p, q.");
  const auto report = check_kernel(p);
  EXPECT_FALSE(report.is_kernel);
  EXPECT_TRUE(has_violation(report, KernelCondition::negative_bodies_only, p.rules()[0]));
}

TEST(CheckKernel, ConditionNames) {
  EXPECT_EQ(to_string(KernelCondition::wfs_irreducible), "wfs-irreducible");
  EXPECT_EQ(to_string(KernelCondition::negative_bodies_only), "negative-bodies-only");
  EXPECT_EQ(to_string(KernelCondition::every_atom_in_some_body), "every-atom-in-some-body");
}

TEST(AntiChain, Validation) {
  EXPECT_THROW(AntiChain(atoms("a,b"), {atoms("a"), atoms("a,b")}), PreconditionError);
  EXPECT_THROW(AntiChain(atoms("a"), {atoms("b")}), PreconditionError);
  EXPECT_THROW(AntiChain(atoms("__m"), {}), ReservedAtomError);
  const AntiChain a(atoms("a,b"), {atoms("b"), atoms("a"), atoms("b")});
  EXPECT_EQ(a.components(), (std::vector<AtomSet>{atoms("a"), atoms("b")}));
}

TEST(AntiChainToKernel, TwoSingletons) {
  const AntiChain a(atoms("a1,a2"), {atoms("a1"), atoms("a2")});
  const Program p = antichain_to_kernel(a);
  EXPECT_EQ(p, prog("a1 :- not __bar_a1. __bar_a1 :- not a1. a2 :- not __bar_a2. __bar_a2 :- not a2."
                    "__m :- not __bar_a1, not a2. __m :- not __bar_a2, not a1."
                    "__bot :- not __bot, not __m."));
  EXPECT_EQ(p.size(), 7u);
  EXPECT_EQ(oracle_projection(p, a.universe()), (std::vector<oracle::Set>{{"a1"}, {"a2"}}));
  EXPECT_TRUE(check_kernel(p).is_kernel);
}

TEST(AntiChainToKernel, EmptyComponent) {
  const Program p = antichain_to_kernel(AntiChain(atoms("a"), {{}}));
  EXPECT_EQ(p, prog("a :- not __bar_a. __bar_a :- not a. __m :- not a. __bot :- not __bot, not __m."));
  const auto sets = oracle::answer_sets(oracle::from(p));
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(oracle::project(sets, {"a"}), (std::vector<oracle::Set>{{}}));
}

TEST(AntiChainToKernel, NoComponents) {
  const Program p = antichain_to_kernel(AntiChain(atoms("a"), {}));
  EXPECT_EQ(p, prog("a :- not __bar_a. __bar_a :- not a. __bot :- not __bot, not __m."));
  EXPECT_TRUE(oracle::answer_sets(oracle::from(p)).empty());
}

TEST(AntiChainToKernel, DegenerateEmptyUniverse) {
  const Program p = antichain_to_kernel(AntiChain({}, {{}}));
  EXPECT_EQ(p, prog("__m. __bot :- not __bot, not __m."));
  const auto report = check_kernel(p);
  EXPECT_FALSE(report.is_kernel);
  EXPECT_TRUE(has_violation(report, KernelCondition::negative_bodies_only, Rule(kWitnessAtom)));
}

TEST(AntiChainToKernel, RoundTripUpToFiveAtoms) {
  const std::size_t expected_counts[] = {2, 3, 6, 20, 168, 7581};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto all = gen::all_antichains(n);
    EXPECT_EQ(all.size(), expected_counts[n]);
    for (const auto& a : all) {
      const Program p = antichain_to_kernel(a);
      const auto sets = enumerate_answer_sets(p);
      EXPECT_EQ(project(sets, a.universe()), a.components());
      EXPECT_EQ(sets.size(), a.components().size());
      if (!a.universe().empty() && !a.components().empty()) {
        EXPECT_TRUE(check_kernel(p).is_kernel) << render_antichain(a);
      }
    }
  }
}

TEST(AntiChainToKernel, RoundTripMatchesOracle) {
  for (const auto& a : gen::all_antichains(3)) {
    const Program p = antichain_to_kernel(a);
    auto expected = named(a.components());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(oracle_projection(p, a.universe()), expected);
  }
}

TEST(Project, Examples) {
  const std::vector<AtomSet> sets{atoms("a1,__bar_a2,__m")};
  EXPECT_EQ(project(sets, atoms("a1,a2")), (std::vector<AtomSet>{atoms("a1")}));
  EXPECT_EQ(project(sets, {}), (std::vector<AtomSet>{{}}));
  EXPECT_TRUE(project(std::vector<AtomSet>{}, atoms("a")).empty());
}

TEST(Project, Idempotent) {
  gen::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Program p = gen::program(rng, 1 + gen::below(rng, 8), 1 + gen::below(rng, 10), 3);
    const auto sets = enumerate_answer_sets(p);
    const AtomSet h = gen::subset(rng, p.atoms());
    const auto once = project(sets, h);
    EXPECT_EQ(project(once, h), once);
  }
}

TEST(Equivalence, Examples) {
  const Program p = load_program("even_cycle.lp");
  EXPECT_TRUE(equivalent_mod_projection(p, p, p.atoms()));
  EXPECT_FALSE(equivalent_mod_projection(p, prog("p :- not p."), {}));
  EXPECT_TRUE(equivalent_mod_projection(p, prog("b :- not a. a :- not b. c :- a."), atoms("a,b")));
  EXPECT_FALSE(equivalent_mod_projection(p, prog("b :- not a. a :- not b. c :- not c, a."), atoms("b")));
}

TEST(Kernelize, Pi6) {
  const Program pi6 = load_program("pi6.lp");
  const auto k = kernelize(pi6);
  EXPECT_EQ(k.universe, pi6.atoms());
  EXPECT_EQ(project(enumerate_answer_sets(k.program), k.universe), (std::vector<AtomSet>{atoms("b,q")}));
  EXPECT_TRUE(check_kernel(k.program).is_kernel);
}

TEST(Kernelize, EmptyAndInconsistent) {
  const auto empty = kernelize(Program{});
  EXPECT_EQ(empty.program, prog("__m. __bot :- not __bot, not __m."));
  EXPECT_FALSE(check_kernel(empty.program).is_kernel);
  const auto odd = kernelize(prog("p :- not p."));
  EXPECT_TRUE(enumerate_answer_sets(odd.program).empty());
  EXPECT_EQ(odd.program, prog("p :- not __bar_p. __bar_p :- not p. __bot :- not __bot, not __m."));
}

TEST(Kernelize, RandomProgramsStayEquivalent) {
  gen::Rng rng(22);
  for (int i = 0; i < 150; ++i) {
    const Program p = gen::program(rng, 1 + gen::below(rng, 6), 1 + gen::below(rng, 8), 3);
    const auto k = kernelize(p);
    EXPECT_TRUE(equivalent_mod_projection(p, k.program, p.atoms())) << render_program(p);
    EXPECT_EQ(oracle_projection(k.program, p.atoms()),
              oracle::project(oracle::answer_sets(oracle::from(p)), oracle::names(p.atoms())));
  }
}

TEST(AntiChainText, RoundTrip) {
  const AntiChain a = parse_antichain("% sample\n#universe a, b, c.\na, b\nc.\n\n");
  EXPECT_EQ(a.universe(), atoms("a,b,c"));
  EXPECT_EQ(a.components(), (std::vector<AtomSet>{atoms("c"), atoms("a,b")}));
  const AntiChain back = parse_antichain(render_antichain(a));
  EXPECT_EQ(back.universe(), a.universe());
  EXPECT_EQ(back.components(), a.components());

  const AntiChain e = parse_antichain("#universe a.\n{}\n");
  EXPECT_EQ(e.components(), (std::vector<AtomSet>{{}}));
  EXPECT_EQ(parse_antichain(render_antichain(e)).components(), e.components());
}

TEST(AntiChainText, Errors) {
  EXPECT_THROW(parse_antichain("a, b\n"), SyntaxError);
  EXPECT_THROW(parse_antichain(""), SyntaxError);
  EXPECT_THROW(parse_antichain("#universe a.\nb\n"), PreconditionError);
}
