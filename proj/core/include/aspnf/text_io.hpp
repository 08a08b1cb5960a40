#pragma once

// Text format for programs:
//
//   program := { rule }
//   rule    := ATOM '.' | ATOM ':-' body '.' | ':-' body '.'
//   body    := literal { ',' literal }
//   literal := ATOM | 'not' ATOM
//   ATOM    := [a-z][A-Za-z0-9_]* [ '(' arg { ',' arg } ')' ]
//
// `%` starts a comment running to the end of the line. A headless rule
// `:- B.` is sugar for `__c_k :- not __c_k, B.` with a fresh k.

#include <string>
#include <string_view>

#include "aspnf/program.hpp"

namespace aspnf {

struct ParseOptions {
  /// Accept `__`-prefixed atoms, e.g. when re-reading generated programs.
  bool allow_reserved = false;
};

/// Throws SyntaxError (with position) or ReservedAtomError.
Program parse_program(std::string_view text, const ParseOptions& options = {});

/// Parses exactly one rule (no constraint sugar).
Rule parse_rule(std::string_view text, const ParseOptions& options = {});

/// Parses `a, b(1,2), c` into a set. The empty string gives the empty set.
AtomSet parse_atom_list(std::string_view text, const ParseOptions& options = {});

std::string render_literal(const Literal& l);
/// `head.` or `head :- l1, l2.` without a trailing newline.
std::string render_rule(const Rule& r);
/// One rule per line. Inverse of parse_program.
std::string render_program(const Program& p);
/// Comma-separated, sorted, no spaces.
std::string render_atoms(const AtomSet& atoms);

/// DOT digraph of the dependency graph; negative edges are dashed.
std::string export_dot(const Program& p);

/// Double-quoted DOT identifier.
std::string dot_quote(std::string_view id);

}  // namespace aspnf
