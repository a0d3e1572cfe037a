#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detail/bits.hpp"

namespace cordial {

using Vertex = std::uint32_t;

/// Thrown for malformed graphs, labelings and mismatched sizes.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph. Edges are stored with u < v in lexicographic
/// order; an edge's position in that order is its canonical index.
class Graph {
public:
  Graph() = default;

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    return deg;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

inline Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
    }
    if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  return g;
}

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  return make_graph(n, pairs);
}

/// Digon-free digraph. Arc order is preserved as given.
class Digraph {
public:
  Digraph() = default;

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  friend Digraph make_digraph(std::size_t n, std::vector<Arc> arcs);
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

inline Digraph make_digraph(std::size_t n, std::vector<Arc> arcs) {
  std::vector<Edge> underlying;
  underlying.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw GraphError("arc endpoint out of range: " + std::to_string(a.tail) + " > " +
                       std::to_string(a.head));
    }
    if (a.tail == a.head) throw GraphError("loop arc at vertex " + std::to_string(a.tail));
    underlying.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
  }
  std::sort(underlying.begin(), underlying.end());
  if (auto dup = std::adjacent_find(underlying.begin(), underlying.end()); dup != underlying.end()) {
    throw GraphError("digon or repeated arc between " + std::to_string(dup->u) + " and " +
                     std::to_string(dup->v));
  }
  Digraph d;
  d.n_ = n;
  d.arcs_ = std::move(arcs);
  return d;
}

/// Undirected graph underlying a digraph.
inline Graph underlying_graph(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& a : d.arcs()) pairs.emplace_back(a.tail, a.head);
  return make_graph(d.vertex_count(), pairs);
}

/// One direction per canonical edge: bit j == 0 orients edge (u,v) as u->v,
/// bit j == 1 as v->u.
class Orientation {
public:
  Orientation() = default;
  explicit Orientation(BitVector bits) : bits_(std::move(bits)) {}
  static Orientation from_mask(std::size_t edge_count, std::uint64_t mask) {
    return Orientation(BitVector::from_mask(edge_count, mask));
  }
  static Orientation from_string(const std::string& s) {
    BitVector b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw GraphError("orientation bits must be 0/1: " + s);
      b.set(i, s[i] == '1');
    }
    return Orientation(std::move(b));
  }

  std::size_t size() const { return bits_.size(); }
  bool reversed(std::size_t edge) const { return bits_.test(edge); }
  const BitVector& bits() const { return bits_; }
  std::uint64_t to_mask() const { return bits_.to_mask(); }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const Orientation&, const Orientation&) = default;

private:
  BitVector bits_;
};

/// f : V -> {0,1}, stored as the set of vertices labeled 1.
class VertexLabeling {
public:
  VertexLabeling() = default;
  explicit VertexLabeling(std::size_t n) : ones_(n) {}
  explicit VertexLabeling(BitVector ones) : ones_(std::move(ones)) {}

  static VertexLabeling from_mask(std::size_t n, std::uint64_t mask) {
    return VertexLabeling(BitVector::from_mask(n, mask));
  }
  static VertexLabeling from_labels(const std::vector<int>& labels) {
    BitVector b(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] != 0 && labels[i] != 1) throw GraphError("vertex labels must be 0 or 1");
      b.set(i, labels[i] == 1);
    }
    return VertexLabeling(std::move(b));
  }
  static VertexLabeling from_string(const std::string& s) {
    std::vector<int> labels;
    for (char c : s) labels.push_back(c == '1' ? 1 : (c == '0' ? 0 : -1));
    return from_labels(labels);
  }

  std::size_t vertex_count() const { return ones_.size(); }
  int operator[](std::size_t v) const { return ones_.test(v) ? 1 : 0; }
  std::size_t ones_count() const { return ones_.count(); }
  const BitVector& ones() const { return ones_; }
  std::uint64_t to_mask() const { return ones_.to_mask(); }
  std::string to_string() const { return ones_.to_string(); }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

private:
  BitVector ones_;
};

/// Counts of arcs labeled +1 (alpha), -1 (beta) and 0 (gamma_zero).
struct GammaTriple {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma_zero = 0;

  std::size_t total() const { return alpha + beta + gamma_zero; }
  friend bool operator==(const GammaTriple&, const GammaTriple&) = default;
};

inline std::string to_string(const GammaTriple& t) {
  return "(" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + "," +
         std::to_string(t.gamma_zero) + ")";
}

inline Digraph orient(const Graph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw GraphError("orientation has " + std::to_string(o.size()) + " bits, graph has " +
                     std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  const auto& edges = g.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    arcs.push_back(o.reversed(j) ? Arc{edges[j].v, edges[j].u} : Arc{edges[j].u, edges[j].v});
  }
  return make_digraph(g.vertex_count(), std::move(arcs));
}

inline Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const auto& a : d.arcs()) arcs.push_back({a.head, a.tail});
  return make_digraph(d.vertex_count(), std::move(arcs));
}

}  // namespace cordial
