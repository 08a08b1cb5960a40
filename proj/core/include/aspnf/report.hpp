#pragma once

// JSON and DOT renderings of analysis results.

#include <string>
#include <string_view>

#include "aspnf/cycles.hpp"
#include "aspnf/normalize.hpp"
#include "aspnf/semantics.hpp"

namespace aspnf {

/// `{"cycles": [...], "bridges": [...], "rules": {rule: [tags]}}`. Cycles
/// carry kind, atoms, rules, parity, length and handles (AND and OR);
/// bridges carry kind, parity, length, anchor, chain and target.
std::string cycles_to_json(const CycleAnalysis& analysis);

/// Dependency graph with one cluster per cycle.
std::string cycles_to_dot(const CycleAnalysis& analysis);

/// Array of arrays of atom names.
std::string answer_sets_to_json(const AnswerSetCollection& sets);

/// Steps carry rule texts, atom lists, and formulas such as `e := not f`.
std::string trace_to_json(const TransformTrace& t);

/// Inverse of trace_to_json. Throws SyntaxError on malformed input.
TransformTrace trace_from_json(std::string_view text);

}  // namespace aspnf
