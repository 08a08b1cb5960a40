#include "aspnf/report.hpp"

#include <nlohmann/json.hpp>

#include "aspnf/error.hpp"
#include "aspnf/text_io.hpp"

namespace aspnf {

using nlohmann::json;

namespace {

json atoms_json(const auto& atoms) {
  json out = json::array();
  for (const auto& a : atoms) out.push_back(a.name());
  return out;
}

json rules_json(const std::vector<Rule>& rules) {
  json out = json::array();
  for (const auto& r : rules) out.push_back(render_rule(r));
  return out;
}

json literals_json(const std::vector<Literal>& lits) {
  json out = json::array();
  for (const auto& l : lits) out.push_back(render_literal(l));
  return out;
}

json cycle_json(const Cycle& c) {
  json handles = json::array();
  for (const auto& h : c.and_handles) {
    handles.push_back({{"kind", "AND"},
                       {"atom", c.atoms[h.position].name()},
                       {"literals", literals_json(h.literals)}});
  }
  return {{"kind", "cycle"},
          {"atoms", atoms_json(c.atoms)},
          {"rules", rules_json(c.rules)},
          {"parity", c.is_even() ? "even" : "odd"},
          {"length", c.size()},
          {"handles", std::move(handles)}};
}

}  // namespace

std::string cycles_to_json(const CycleAnalysis& analysis) {
  json cycles = json::array();
  for (const auto& c : analysis.cycles()) {
    json entry = cycle_json(c);
    for (const auto& h : analysis.or_handles(c)) {
      entry["handles"].push_back({{"kind", "OR"},
                                  {"atom", h.target.name()},
                                  {"rule", render_rule(h.rule)},
                                  {"literals", literals_json(h.handle)}});
    }
    cycles.push_back(std::move(entry));
  }

  json bridges = json::array();
  for (const auto& b : analysis.bridges()) {
    bridges.push_back({{"kind", std::string(to_string(b.kind))},
                       {"parity", b.is_even() ? "even" : "odd"},
                       {"length", b.length()},
                       {"anchor", b.anchor_atom.name()},
                       {"anchor_rule", render_rule(b.anchor_rule)},
                       {"chain", atoms_json(b.chain_atoms)},
                       {"target", b.target_atom.name()}});
  }

  json rules = json::object();
  for (const auto& [rule, tags] : analysis.classify()) {
    json t = json::array();
    for (auto tag : tags) t.push_back(std::string(to_string(tag)));
    rules[render_rule(rule)] = std::move(t);
  }
  return json{{"cycles", std::move(cycles)}, {"bridges", std::move(bridges)}, {"rules", std::move(rules)}}
      .dump(2);
}

std::string cycles_to_dot(const CycleAnalysis& analysis) {
  std::string out = "digraph G {\n";
  std::size_t k = 0;
  for (const auto& c : analysis.cycles()) {
    out += "  subgraph cluster_" + std::to_string(k++) + " {\n";
    out += "    label=" + dot_quote(std::string(c.is_even() ? "even" : "odd") + " cycle") + ";\n";
    for (const auto& a : c.atoms) out += "    " + dot_quote(a.name()) + ";\n";
    out += "  }\n";
  }
  const auto graph = build_dependency_graph(analysis.program());
  for (const auto& a : graph.vertices) out += "  " + dot_quote(a.name()) + ";\n";
  for (const auto& e : graph.edges) {
    out += "  " + dot_quote(e.from.name()) + " -> " + dot_quote(e.to.name());
    out += e.polarity == Polarity::negative ? " [style=dashed];\n" : ";\n";
  }
  out += "}\n";
  return out;
}

std::string answer_sets_to_json(const AnswerSetCollection& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(atoms_json(s));
  return out.dump();
}

std::string trace_to_json(const TransformTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json dropped = json::array();
    for (const auto& d : s.dropped) dropped.push_back(d.to_string());
    steps.push_back({{"kind", std::string(to_string(s.kind))},
                     {"removed", rules_json(s.removed)},
                     {"added", rules_json(s.added)},
                     {"fresh_atoms", atoms_json(s.fresh_atoms)},
                     {"dropped", std::move(dropped)},
                     {"flags", s.flags}});
  }
  return json{{"steps", std::move(steps)}, {"final_atoms", atoms_json(t.final_atoms)}}.dump(2);
}

namespace {

Reconstruction parse_formula(const std::string& text) {
  const auto sep = text.find(" := ");
  if (sep == std::string::npos) throw SyntaxError({1, 1}, "bad reconstruction formula '" + text + "'");
  std::string rhs = text.substr(sep + 4);
  bool negated = false;
  if (rhs.starts_with("not ")) {
    negated = true;
    rhs.erase(0, 4);
  }
  return {Atom(text.substr(0, sep)), Atom(rhs), negated};
}

}  // namespace

TransformTrace trace_from_json(std::string_view text) {
  const ParseOptions reserved{.allow_reserved = true};
  try {
    const json doc = json::parse(text);
    TransformTrace t;
    for (const auto& s : doc.at("steps")) {
      TransformStep step;
      step.kind = step_kind_from_string(s.at("kind").get<std::string>());
      for (const auto& r : s.at("removed")) step.removed.push_back(parse_rule(r.get<std::string>(), reserved));
      for (const auto& r : s.at("added")) step.added.push_back(parse_rule(r.get<std::string>(), reserved));
      for (const auto& a : s.at("fresh_atoms")) step.fresh_atoms.emplace_back(a.get<std::string>());
      for (const auto& d : s.at("dropped")) step.dropped.push_back(parse_formula(d.get<std::string>()));
      for (const auto& f : s.at("flags")) step.flags.push_back(f.get<std::string>());
      t.steps.push_back(std::move(step));
    }
    for (const auto& a : doc.at("final_atoms")) t.final_atoms.emplace(a.get<std::string>());
    return t;
  } catch (const json::exception& e) {
    throw SyntaxError({1, 1}, std::string("malformed trace: ") + e.what());
  } catch (const PreconditionError& e) {
    throw SyntaxError({1, 1}, std::string("malformed trace: ") + e.what());
  } catch (const InvalidAtomError& e) {
    throw SyntaxError({1, 1}, std::string("malformed trace: ") + e.what());
  }
}

}  // namespace aspnf
