#pragma once

// Negative cycles, their AND/OR handles, and bridges between cycles.
//
// A cycle is a set of rules
//   l1 :- not l2, D1.   l2 :- not l3, D2.   ...   ln :- not l1, Dn.
// over distinct atoms l1..ln where no Di mentions li. The Di are the AND
// handles. A rule `li :- D` with non-empty D not mentioning li that belongs
// to no cycle is auxiliary to every cycle through li; D is an OR handle.

#include <cstddef>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "aspnf/program.hpp"

namespace aspnf {

struct AndHandle {
  std::size_t position;  // index into Cycle::atoms
  std::vector<Literal> literals;

  friend bool operator==(const AndHandle&, const AndHandle&) = default;
};

struct Cycle {
  /// Starts at the least atom by name.
  std::vector<Atom> atoms;
  /// rules[i] has head atoms[i] and witnesses the step to atoms[i+1 mod n].
  std::vector<Rule> rules;
  /// Non-empty handles only.
  std::vector<AndHandle> and_handles;

  std::size_t size() const noexcept { return atoms.size(); }
  bool is_even() const noexcept { return atoms.size() % 2 == 0; }
  bool involves(const Atom& a) const;
  bool contains(const Rule& r) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct OrHandle {
  Atom target;
  Rule rule;
  std::vector<Literal> handle;

  friend bool operator==(const OrHandle&, const OrHandle&) = default;
};

enum class BridgeKind { or_bridge, and_bridge };

std::string_view to_string(BridgeKind k);

/// A chain `l1 :- not l2. ... ln :- not a.` hanging off a rule of a cycle
/// atom p through the literal `not l1`, and ending at an atom `a` involved
/// in some cycle.
///
/// Each chain atom belongs to no cycle, has exactly one defining rule, and
/// occurs in exactly one rule body. Odd chains whose target reaches the
/// anchor atom through positive dependencies are not reported, since their
/// simplification would close a positive loop.
struct Bridge {
  BridgeKind kind;
  Cycle anchor_cycle;
  Atom anchor_atom;
  /// OR: the auxiliary rule holding `not l1`; AND: the cycle rule holding it.
  Rule anchor_rule;
  std::vector<Atom> chain_atoms;
  std::vector<Rule> chain;
  Atom target_atom;

  std::size_t length() const noexcept { return chain_atoms.size(); }
  bool is_even() const noexcept { return length() % 2 == 0; }

  friend bool operator==(const Bridge&, const Bridge&) = default;
};

enum class RuleTag { in_cycle, auxiliary, bridge_step, unclassified };

std::string_view to_string(RuleTag t);

using RuleClassification = std::map<Rule, std::set<RuleTag>>;

struct CycleOptions {
  /// Throw CycleCapError beyond this many cycles.
  std::size_t max_cycles = 10000;
};

/// Cycle structure of one program, computed once.
class CycleAnalysis {
 public:
  explicit CycleAnalysis(Program p, const CycleOptions& options = {});

  const Program& program() const noexcept { return program_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

  bool in_cycle(const Rule& r) const { return in_cycle_.contains(r); }
  /// `a` is one of the atoms of some cycle.
  bool involved(const Atom& a) const { return involved_.contains(a); }
  bool is_auxiliary(const Rule& r) const;

  std::vector<OrHandle> or_handles(const Cycle& c) const;
  std::vector<Bridge> bridges() const;
  RuleClassification classify() const;

 private:
  Program program_;
  std::vector<Cycle> cycles_;
  std::set<Rule> in_cycle_;
  AtomSet involved_;
};

/// Every cycle of the negative dependency graph, once per choice of
/// witnessing rules, ordered by starting atom.
std::vector<Cycle> find_cycles(const Program& p, const CycleOptions& options = {});

/// Auxiliary rules whose head lies on `c`.
std::vector<OrHandle> find_or_handles(const Program& p, const Cycle& c);

RuleClassification classify_rules(const Program& p);

/// Ordered by anchor atom, then target atom, then chain.
std::vector<Bridge> find_bridges(const Program& p);

}  // namespace aspnf
