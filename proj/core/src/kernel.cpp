#include "aspnf/kernel.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

#include "aspnf/error.hpp"
#include "aspnf/text_io.hpp"
#include "lexer.hpp"

namespace aspnf {

std::string describe(const Witness& w) {
  if (const auto* r = std::get_if<Rule>(&w)) return render_rule(*r);
  return std::get<Atom>(w).name();
}

std::string_view to_string(KernelCondition c) {
  switch (c) {
    case KernelCondition::wfs_irreducible: return "wfs-irreducible";
    case KernelCondition::negative_bodies_only: return "negative-bodies-only";
    case KernelCondition::every_atom_in_some_body: return "every-atom-in-some-body";
  }
  return "?";
}

KernelReport check_kernel(const Program& p) {
  KernelReport report;
  auto add = [&](KernelCondition c, Witness w) {
    report.violations.push_back({c, std::move(w)});
  };

  const auto wfs = well_founded(p);
  for (const auto& a : wfs.true_atoms) add(KernelCondition::wfs_irreducible, a);
  for (const auto& a : wfs.false_atoms) add(KernelCondition::wfs_irreducible, a);

  AtomSet in_body;
  for (const auto& r : p.rules()) {
    if (!r.is_purely_negative()) add(KernelCondition::negative_bodies_only, r);
    for (const auto& l : r.body()) in_body.insert(l.atom);
  }
  for (const auto& a : p.atoms()) {
    if (!in_body.contains(a)) add(KernelCondition::every_atom_in_some_body, a);
  }
  report.is_kernel = report.violations.empty();
  return report;
}

AntiChain::AntiChain(AtomSet universe, std::vector<AtomSet> components)
    : universe_(std::move(universe)), components_(std::move(components)) {
  for (const auto& a : universe_) {
    if (a.is_reserved()) {
      throw ReservedAtomError("reserved atom '" + a.name() + "' in anti-chain universe");
    }
  }
  canonicalize(components_);
  for (const auto& c : components_) {
    if (!std::includes(universe_.begin(), universe_.end(), c.begin(), c.end())) {
      throw PreconditionError("anti-chain component {" + render_atoms(c) +
                              "} is not a subset of the universe");
    }
  }
  if (!is_antichain(components_)) {
    throw PreconditionError("components do not form an anti-chain");
  }
}

Atom bar_atom(const Atom& a) { return Atom("__bar_" + a.name()); }

Program antichain_to_kernel(const AntiChain& a) {
  std::vector<Rule> rules;
  for (const auto& h : a.universe()) {
    rules.emplace_back(h, std::vector{Literal::neg(bar_atom(h))});
    rules.emplace_back(bar_atom(h), std::vector{Literal::neg(h)});
  }
  for (const auto& component : a.components()) {
    std::vector<Literal> body;
    for (const auto& in : component) body.push_back(Literal::neg(bar_atom(in)));
    for (const auto& h : a.universe()) {
      if (!component.contains(h)) body.push_back(Literal::neg(h));
    }
    rules.emplace_back(kWitnessAtom, std::move(body));
  }
  rules.emplace_back(kFalsumAtom,
                     std::vector{Literal::neg(kFalsumAtom), Literal::neg(kWitnessAtom)});
  return Program(std::move(rules));
}

std::vector<AtomSet> project(std::span<const AtomSet> sets, const AtomSet& h) {
  std::vector<AtomSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    AtomSet cut;
    std::set_intersection(s.begin(), s.end(), h.begin(), h.end(), std::inserter(cut, cut.end()));
    out.push_back(std::move(cut));
  }
  canonicalize(out);
  return out;
}

bool equivalent_mod_projection(const Program& p1, const Program& p2, const AtomSet& h,
                               const EnumerationOptions& options) {
  const auto a1 = enumerate_answer_sets(p1, options);
  const auto a2 = enumerate_answer_sets(p2, options);
  return project(a1, h) == project(a2, h);
}

Kernelization kernelize(const Program& p, const EnumerationOptions& options) {
  auto answer_sets = enumerate_answer_sets(p, options);
  AntiChain chain(p.atoms(), std::move(answer_sets));
  return {antichain_to_kernel(chain), p.atoms()};
}

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

// `a, b, c` optionally closed by '.'.
AtomSet parse_atom_line(std::string_view line, std::size_t line_no) {
  detail::Lexer lex(line, line_no);
  AtomSet out;
  if (lex.peek().kind == detail::TokenKind::dot || lex.peek().kind == detail::TokenKind::end) {
    lex.accept(detail::TokenKind::dot);
  } else {
    do {
      out.insert(detail::parse_atom(lex, false));
    } while (lex.accept(detail::TokenKind::comma));
    lex.accept(detail::TokenKind::dot);
  }
  if (lex.peek().kind != detail::TokenKind::end) {
    lex.fail(lex.peek().span, "expected ',' or end of line, found " + detail::describe(lex.peek()));
  }
  return out;
}

}  // namespace

AntiChain parse_antichain(std::string_view text) {
  std::optional<AtomSet> universe;
  std::vector<AtomSet> components;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;

    if (!universe) {
      constexpr std::string_view header = "#universe";
      if (!line.starts_with(header)) {
        throw SyntaxError({line_no, 1}, "expected '#universe' header");
      }
      universe = parse_atom_line(line.substr(header.size()), line_no);
      continue;
    }
    if (line == "{}") {
      components.emplace_back();
      continue;
    }
    components.push_back(parse_atom_line(line, line_no));
  }
  if (!universe) throw SyntaxError({line_no + 1, 1}, "missing '#universe' header");
  return AntiChain(std::move(*universe), std::move(components));
}

std::string render_antichain(const AntiChain& a) {
  std::string out = "#universe";
  std::string sep = " ";
  for (const auto& h : a.universe()) {
    out += sep + h.name();
    sep = ", ";
  }
  out += ".\n";
  for (const auto& c : a.components()) {
    if (c.empty()) {
      out += "{}\n";
      continue;
    }
    std::string line;
    for (const auto& h : c) line += (line.empty() ? "" : ", ") + h.name();
    out += line + "\n";
  }
  return out;
}

}  // namespace aspnf
