#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace cordial {

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram.
inline Graph petersen_graph() {
  return make_graph(10, std::vector<std::pair<Vertex, Vertex>>{
                            {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Spine 0-1-2-3-4-5 with one pendant on each interior spine vertex.
inline Graph counterexample_tree() {
  return make_graph(10, std::vector<std::pair<Vertex, Vertex>>{
                            {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                            {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

/// Directed path on n vertices (n even) whose j-th arc (1-indexed) points
/// forward iff j is odd, so interior vertices alternate sink/source.
inline Digraph alternating_path(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw GraphError("alternating_path needs even n >= 2, got " + std::to_string(n));
  }
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) {
    const bool forward = (i + 1) % 2 == 1;
    arcs.push_back(forward ? Arc{i, i + 1} : Arc{i + 1, i});
  }
  return make_digraph(n, std::move(arcs));
}

/// Bit-vector of alternating_path(n) as an orientation of path_graph(n).
inline Orientation alternating_orientation(std::size_t n) {
  BitVector b(n == 0 ? 0 : n - 1);
  for (std::size_t j = 1; j < b.size(); j += 2) b.set(j);
  return Orientation(std::move(b));
}

/// Complete bipartite graph between [0, ceil(n/2)) and the rest, plus
/// ceil(ceil(n/2) * floor(n/2) / 2) intra-part edges taken in canonical order.
inline Graph tight_bound_graph(std::size_t n) {
  const std::size_t a = (n + 1) / 2;
  const std::size_t cross = a * (n - a);
  std::size_t extra = (cross + 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_part = (i < a) == (j < a);
      if (!same_part) {
        e.emplace_back(i, j);
      } else if (extra > 0) {
        e.emplace_back(i, j);
        --extra;
      }
    }
  }
  if (extra > 0) {
    throw GraphError("tight_bound: not enough intra-part pairs for n=" + std::to_string(n));
  }
  return make_graph(n, e);
}

using AnyGraph = std::variant<Graph, Digraph>;

inline const std::vector<std::string_view>& named_graph_names() {
  static const std::vector<std::string_view> names{
      "path", "complete", "petersen", "counterexample_tree", "alternating_path", "tight_bound"};
  return names;
}

/// Named instance lookup; n is required for the parameterised families.
inline AnyGraph named(std::string_view name, std::optional<std::size_t> n = std::nullopt) {
  auto need_n = [&]() -> std::size_t {
    if (!n) throw GraphError(std::string(name) + " requires a vertex count");
    return *n;
  };
  if (name == "path") return path_graph(need_n());
  if (name == "complete") return complete_graph(need_n());
  if (name == "petersen") return petersen_graph();
  if (name == "counterexample_tree") return counterexample_tree();
  if (name == "alternating_path") return alternating_path(need_n());
  if (name == "tight_bound") return tight_bound_graph(need_n());
  throw GraphError("unknown graph name: " + std::string(name));
}

}  // namespace cordial
