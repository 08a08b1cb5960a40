#pragma once

// Kernel to 3-kernel normalization: long-rule simplification, bridge
// elimination, the 3-kernel checker, and answer-set reconstruction.

#include <string>
#include <string_view>
#include <vector>

#include "aspnf/cycles.hpp"
#include "aspnf/kernel.hpp"
#include "aspnf/program.hpp"
#include "aspnf/semantics.hpp"

namespace aspnf {

enum class StepKind { long_rule, or_bridge_even, or_bridge_odd, and_bridge_even, and_bridge_odd };

std::string_view to_string(StepKind k);
StepKind step_kind_from_string(std::string_view s);

/// `atom := not source` (or `atom := source`), evaluated on an answer set of
/// the simplified program.
struct Reconstruction {
  Atom atom;
  Atom source;
  bool negated = true;

  std::string to_string() const;
  friend bool operator==(const Reconstruction&, const Reconstruction&) = default;
};

struct TransformStep {
  StepKind kind = StepKind::long_rule;
  std::vector<Rule> removed;
  std::vector<Rule> added;
  std::vector<Atom> fresh_atoms;
  /// In evaluation order: each formula only uses atoms that survive the
  /// step or are reconstructed earlier in the list.
  std::vector<Reconstruction> dropped;
  /// `reroutes-cycle` when the replaced long rule was itself a cycle rule,
  /// `guarded` when a guard constraint was added (see LongRuleOptions).
  std::vector<std::string> flags;

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

struct TransformTrace {
  std::vector<TransformStep> steps;
  /// Atom universe of the program the trace ends in.
  AtomSet final_atoms;

  friend bool operator==(const TransformTrace&, const TransformTrace&) = default;
};

struct Transformed {
  Program program;
  TransformTrace trace;
};

struct LongRuleOptions {
  /// The replacement cycle for `h :- not b1, ..., not bj` is even, so when
  /// every bi is false it still admits a model with h false. Unless h has a
  /// self-loop `h :- not h` (which forces h), add a deterministic guard
  /// that rejects h false with all bi false. Disable to get the bare
  /// replacement cycle.
  bool guard_unforced_heads = true;
};

/// Replaces each auxiliary rule with j > 1 and each cycle rule with j > 2
/// negative literals by a fresh even cycle through h:
///   h :- not h1.
///   h(2i-1) :- not h(2i).   h(2i) :- not h(2i+1), not bi.   (i = 1..j)
///   h(2j+1) :- not h.
/// Requires a kernel program (PreconditionError otherwise).
Transformed long_rule_simplify(const Program& p, const LongRuleOptions& options = {});

/// Removes the chain and rewrites `not l1` in the anchor rule to `not a`
/// (even chain) or `a` (odd chain). Throws PreconditionError if `b` is not
/// an OR bridge currently detected in `p`.
Transformed simplify_or_bridge(const Program& p, const Bridge& b);

/// Same rewrite for AND bridges.
Transformed simplify_and_bridge(const Program& p, const Bridge& b);

struct NormalizeOptions {
  LongRuleOptions long_rules;
  CycleOptions cycles;
};

/// Long-rule simplification once, then bridge elimination to a fixpoint.
/// The result may still violate 3-kernel conditions; use check_3kernel.
Transformed three_kernelize(const Program& p, const NormalizeOptions& options = {});

struct ThreeKernelViolation {
  int condition;  // 1..6
  Witness witness;
};

struct ThreeKernelReport {
  bool is_3kernel = true;
  std::vector<ThreeKernelViolation> violations;
};

/// Conditions:
///   1 WFS-irreducible;
///   2 every atom is involved in some cycle;
///   3 every rule is in a cycle or auxiliary;
///   4 cycle rules have one or two body literals;
///   5 AND-handle atoms are not atoms of their own cycle;
///   6 auxiliary rules have exactly one body literal.
ThreeKernelReport check_3kernel(const Program& p, const CycleOptions& options = {});

std::string_view describe_3kernel_condition(int condition);

/// Maps an answer set of the transformed program back onto the original
/// language: drops `__` atoms and re-derives the atoms dropped by bridge
/// steps, undoing steps last to first. Throws PreconditionError when a
/// formula refers to an atom that is neither known nor reconstructed.
Interpretation reconstruct(const Interpretation& s, const TransformTrace& t);

}  // namespace aspnf
