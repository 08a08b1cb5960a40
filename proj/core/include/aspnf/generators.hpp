#pragma once

// 3-colorability encoding and random kernel programs.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aspnf/program.hpp"
#include "aspnf/semantics.hpp"

namespace aspnf {

/// Nodes are non-negative integers; edges are stored with u < v.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Throws PreconditionError on self-edges, unknown endpoints, or duplicate
  /// nodes. Edges are normalized and deduplicated.
  UndirectedGraph(std::vector<std::uint32_t> nodes,
                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  const std::vector<std::uint32_t>& nodes() const noexcept { return nodes_; }
  const std::set<std::pair<std::uint32_t, std::uint32_t>>& edges() const noexcept { return edges_; }

  static UndirectedGraph complete(std::uint32_t n);
  static UndirectedGraph path(std::uint32_t n);

 private:
  std::vector<std::uint32_t> nodes_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

enum class Color { red, green, blue };

std::string_view to_string(Color c);

using Coloring = std::map<std::uint32_t, Color>;

bool is_proper(const Coloring& c, const UndirectedGraph& g);

/// Per node v: `color(v,C)` for C in red, blue, green, then `n_color(v,C)`
/// for red, green, blue; isolated nodes get the color rules only. Per edge (u,v): two `edge_ok(u,v)` rules and three
/// `edge_ko(u,v)` rules, one per color.
Program encode_3col(const UndirectedGraph& g);

/// Reads the `color(v,C)` atoms. Throws DecodeError when a node has no color,
/// several colors, or an edge is monochromatic.
Coloring decode_3col(const Interpretation& s, const UndirectedGraph& g);

/// `nodes: 0 1 2` followed by `edge: u v` lines. `%` comments allowed.
UndirectedGraph parse_graph(std::string_view text);
std::string render_graph(const UndirectedGraph& g);

/// Rules over atoms a1..a<n_atoms> with 1..max_body negative literals each,
/// drawn from std::mt19937_64 seeded with `seed`; redrawn until check_kernel
/// passes. Throws GenerationError after 1000 attempts.
Program random_kernel_program(std::size_t n_atoms, std::size_t n_rules, std::size_t max_body,
                              std::uint64_t seed);

}  // namespace aspnf
