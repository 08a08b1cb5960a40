#include "aspnf/text_io.hpp"

#include <map>
#include <optional>

#include "lexer.hpp"

namespace aspnf {

using detail::Lexer;
using detail::TokenKind;

namespace {

constexpr std::string_view kConstraintPrefix = "__c_";

Literal parse_literal(Lexer& lex, bool allow_reserved) {
  const auto first = lex.expect(TokenKind::identifier, "literal");
  if (first.text == "not" && lex.peek().kind == TokenKind::identifier) {
    return Literal::neg(detail::parse_atom(lex, allow_reserved));
  }
  return Literal::pos(detail::parse_atom_tail(lex, first, allow_reserved));
}

std::vector<Literal> parse_body(Lexer& lex, bool allow_reserved) {
  std::vector<Literal> body;
  do {
    body.push_back(parse_literal(lex, allow_reserved));
  } while (lex.accept(TokenKind::comma));
  return body;
}

// A rule, or a constraint body when the head is absent.
struct ParsedRule {
  std::optional<Atom> head;
  std::vector<Literal> body;
};

ParsedRule parse_one(Lexer& lex, bool allow_reserved) {
  ParsedRule r;
  if (lex.accept(TokenKind::implies)) {
    r.body = parse_body(lex, allow_reserved);
  } else {
    r.head = detail::parse_atom(lex, allow_reserved);
    if (lex.accept(TokenKind::implies)) r.body = parse_body(lex, allow_reserved);
  }
  lex.expect(TokenKind::dot, "'.'");
  return r;
}

bool is_constraint_name(const std::string& name) {
  if (!name.starts_with(kConstraintPrefix) || name.size() == kConstraintPrefix.size()) {
    return false;
  }
  for (std::size_t i = kConstraintPrefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return false;
  }
  return true;
}

}  // namespace

Program parse_program(std::string_view text, const ParseOptions& options) {
  Lexer lex(text);
  std::vector<ParsedRule> parsed;
  std::set<std::string> used;
  while (lex.peek().kind != TokenKind::end) {
    auto r = parse_one(lex, options.allow_reserved);
    if (r.head) used.insert(r.head->name());
    for (const auto& l : r.body) used.insert(l.atom.name());
    parsed.push_back(std::move(r));
  }

  std::vector<Rule> rules;
  rules.reserve(parsed.size());
  std::size_t k = 0;
  for (auto& r : parsed) {
    if (r.head) {
      rules.emplace_back(std::move(*r.head), std::move(r.body));
      continue;
    }
    std::string name;
    do {
      name = std::string(kConstraintPrefix) + std::to_string(++k);
    } while (used.contains(name));
    used.insert(name);
    Atom guard(name);
    std::vector<Literal> body{Literal::neg(guard)};
    body.insert(body.end(), r.body.begin(), r.body.end());
    rules.emplace_back(std::move(guard), std::move(body));
  }
  return Program(std::move(rules));
}

Rule parse_rule(std::string_view text, const ParseOptions& options) {
  Lexer lex(text);
  auto r = parse_one(lex, options.allow_reserved);
  if (!r.head) lex.fail({1, 1}, "constraint where a rule was expected");
  if (lex.peek().kind != TokenKind::end) {
    lex.fail(lex.peek().span, "trailing input after rule");
  }
  return Rule(std::move(*r.head), std::move(r.body));
}

AtomSet parse_atom_list(std::string_view text, const ParseOptions& options) {
  Lexer lex(text);
  AtomSet out;
  if (lex.peek().kind == TokenKind::end) return out;
  do {
    out.insert(detail::parse_atom(lex, options.allow_reserved));
  } while (lex.accept(TokenKind::comma));
  if (lex.peek().kind != TokenKind::end) {
    lex.fail(lex.peek().span, "expected ',' or end of list, found " + detail::describe(lex.peek()));
  }
  return out;
}

std::string render_literal(const Literal& l) {
  return l.negative() ? "not " + l.atom.name() : l.atom.name();
}

namespace {

std::string render_body(std::span<const Literal> body) {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += ", ";
    out += render_literal(body[i]);
  }
  return out;
}

}  // namespace

std::string render_rule(const Rule& r) {
  if (r.is_fact()) return r.head().name() + ".";
  return r.head().name() + " :- " + render_body(r.body()) + ".";
}

std::string render_program(const Program& p) {
  // Constraint atoms that can be printed back as `:- body.`: defined by a
  // single rule `__c_k :- not __c_k, B` with non-empty B and used nowhere else.
  std::map<Atom, int> occurrences;
  for (const auto& r : p.rules()) {
    ++occurrences[r.head()];
    for (const auto& l : r.body()) ++occurrences[l.atom];
  }
  std::string out;
  for (const auto& r : p.rules()) {
    const Atom& h = r.head();
    if (is_constraint_name(h.name()) && r.body().size() >= 2 &&
        r.body().front() == Literal::neg(h) && occurrences[h] == 2) {
      out += ":- " + render_body(r.body().subspan(1)) + ".\n";
    } else {
      out += render_rule(r) + "\n";
    }
  }
  return out;
}

std::string render_atoms(const AtomSet& atoms) {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += ',';
    out += a.name();
  }
  return out;
}

std::string dot_quote(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string export_dot(const Program& p) {
  const auto g = build_dependency_graph(p);
  std::string out = "digraph G {\n";
  for (const auto& v : g.vertices) out += "  " + dot_quote(v.name()) + ";\n";
  for (const auto& e : g.edges) {
    out += "  " + dot_quote(e.from.name()) + " -> " + dot_quote(e.to.name());
    out += e.polarity == Polarity::negative ? " [style=dashed];\n" : ";\n";
  }
  return out + "}\n";
}

}  // namespace aspnf
