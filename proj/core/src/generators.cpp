#include "aspnf/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "aspnf/error.hpp"
#include "aspnf/kernel.hpp"

namespace aspnf {

UndirectedGraph::UndirectedGraph(std::vector<std::uint32_t> nodes,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw PreconditionError("duplicate node");
  }
  auto known = [&](std::uint32_t v) { return std::binary_search(nodes_.begin(), nodes_.end(), v); };
  for (auto [u, v] : edges) {
    if (u == v) throw PreconditionError("self-edge on node " + std::to_string(u));
    if (!known(u) || !known(v)) {
      throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " has an unknown endpoint");
    }
    edges_.insert(std::minmax(u, v));
  }
}

UndirectedGraph UndirectedGraph::complete(std::uint32_t n) {
  std::vector<std::uint32_t> nodes(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    nodes[u] = u;
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return UndirectedGraph(std::move(nodes), edges);
}

UndirectedGraph UndirectedGraph::path(std::uint32_t n) {
  std::vector<std::uint32_t> nodes(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    nodes[u] = u;
    if (u + 1 < n) edges.emplace_back(u, u + 1);
  }
  return UndirectedGraph(std::move(nodes), edges);
}

std::string_view to_string(Color c) {
  switch (c) {
    case Color::red: return "red";
    case Color::green: return "green";
    case Color::blue: return "blue";
  }
  return "?";
}

bool is_proper(const Coloring& c, const UndirectedGraph& g) {
  for (auto v : g.nodes()) {
    if (!c.contains(v)) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c.at(u) == c.at(v)) return false;
  }
  return true;
}

namespace {

Atom node_atom(std::string_view pred, std::uint32_t v, Color c) {
  return Atom(std::string(pred) + "(" + std::to_string(v) + "," + std::string(to_string(c)) + ")");
}

Atom edge_atom(std::string_view pred, std::uint32_t u, std::uint32_t v) {
  return Atom(std::string(pred) + "(" + std::to_string(u) + "," + std::to_string(v) + ")");
}

constexpr std::array kColors{Color::red, Color::green, Color::blue};

}  // namespace

Program encode_3col(const UndirectedGraph& g) {
  using enum Color;
  std::set<std::uint32_t> touched;
  for (auto [u, v] : g.edges()) touched.insert({u, v});
  std::vector<Rule> rules;
  for (auto v : g.nodes()) {
    auto col = [&](Color c) { return Literal::neg(node_atom("color", v, c)); };
    rules.emplace_back(node_atom("color", v, red), std::vector{col(blue), col(green)});
    rules.emplace_back(node_atom("color", v, blue), std::vector{col(red), col(green)});
    rules.emplace_back(node_atom("color", v, green), std::vector{col(blue), col(red)});
    // n_color atoms only feed edge_ko rules; an isolated node would leave
    // them out of every body.
    if (!touched.contains(v)) continue;
    for (Color c : {red, green, blue}) {
      rules.emplace_back(node_atom("n_color", v, c), std::vector{col(c)});
    }
  }
  for (auto [u, v] : g.edges()) {
    const Atom ok = edge_atom("edge_ok", u, v);
    const Atom ko = edge_atom("edge_ko", u, v);
    rules.emplace_back(ok, std::vector{Literal::neg(ok)});
    rules.emplace_back(ok, std::vector{Literal::neg(ko)});
    for (Color c : {red, green, blue}) {
      rules.emplace_back(ko, std::vector{Literal::neg(node_atom("n_color", u, c)),
                                         Literal::neg(node_atom("n_color", v, c))});
    }
  }
  return Program(std::move(rules));
}

Coloring decode_3col(const Interpretation& s, const UndirectedGraph& g) {
  Coloring out;
  for (auto v : g.nodes()) {
    int found = 0;
    for (Color c : kColors) {
      if (s.contains(node_atom("color", v, c))) {
        out[v] = c;
        ++found;
      }
    }
    if (found == 0) throw DecodeError("node " + std::to_string(v) + " has no color");
    if (found > 1) throw DecodeError("node " + std::to_string(v) + " has several colors");
  }
  for (auto [u, v] : g.edges()) {
    if (out[u] == out[v]) {
      throw DecodeError("edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
    }
  }
  return out;
}

UndirectedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_nodes = false;
  std::vector<std::uint32_t> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  auto read_numbers = [&](std::istringstream& fields) {
    std::vector<std::uint32_t> out;
    std::string tok;
    while (fields >> tok) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          tok.size() > 9) {
        throw SyntaxError({line_no, 1}, "expected a node number, got '" + tok + "'");
      }
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return out;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string::npos) line.erase(pct);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    if (key == "nodes:") {
      if (have_nodes) throw SyntaxError({line_no, 1}, "duplicate 'nodes:' line");
      nodes = read_numbers(fields);
      have_nodes = true;
    } else if (key == "edge:") {
      if (!have_nodes) throw SyntaxError({line_no, 1}, "'edge:' before 'nodes:'");
      auto ends = read_numbers(fields);
      if (ends.size() != 2) throw SyntaxError({line_no, 1}, "an edge needs exactly two nodes");
      edges.emplace_back(ends[0], ends[1]);
    } else {
      throw SyntaxError({line_no, 1}, "expected 'nodes:' or 'edge:', got '" + key + "'");
    }
  }
  if (!have_nodes) throw SyntaxError({line_no + 1, 1}, "missing 'nodes:' line");
  try {
    return UndirectedGraph(std::move(nodes), edges);
  } catch (const PreconditionError& e) {
    throw SyntaxError({line_no, 1}, e.what());
  }
}

std::string render_graph(const UndirectedGraph& g) {
  std::string out = "nodes:";
  for (auto v : g.nodes()) out += " " + std::to_string(v);
  out += "\n";
  for (auto [u, v] : g.edges()) out += "edge: " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Program random_kernel_program(std::size_t n_atoms, std::size_t n_rules, std::size_t max_body,
                              std::uint64_t seed) {
  if (n_atoms == 0) throw PreconditionError("need at least one atom");
  if (n_rules == 0) throw PreconditionError("need at least one rule");
  if (max_body == 0) throw PreconditionError("bodies need at least one literal");

  std::vector<Atom> atoms;
  for (std::size_t i = 1; i <= n_atoms; ++i) atoms.emplace_back("a" + std::to_string(i));

  // Modulo draws keep the output identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Rule> rules;
    AtomSet heads;
    AtomSet in_bodies;
    for (std::size_t r = 0; r < n_rules; ++r) {
      const Atom& head = atoms[draw(n_atoms)];
      const std::size_t len = 1 + draw(max_body);
      std::vector<Literal> body;
      for (std::size_t k = 0; k < len; ++k) {
        const Atom& b = atoms[draw(n_atoms)];
        body.push_back(Literal::neg(b));
        in_bodies.insert(b);
      }
      heads.insert(head);
      rules.emplace_back(head, std::move(body));
    }
    if (heads.size() != n_atoms || in_bodies.size() != n_atoms) continue;
    Program p(std::move(rules));
    if (check_kernel(p).is_kernel) return p;
  }
  throw GenerationError("no kernel program found after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace aspnf
