#pragma once

// Brute-force reference implementations. Nothing here calls into the
// engine's scanning code; each routine re-derives its answer from raw
// vertex labels and arc lists so it can be used to check the engine.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "../graph.hpp"

namespace cordial::oracle {

struct Triple {
  long plus = 0, minus = 0, zero = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

inline Triple arc_counts(const std::vector<Arc>& arcs, const std::vector<int>& f) {
  Triple t;
  for (const auto& a : arcs) {
    const int g = f[a.head] - f[a.tail];
    if (g == 1) ++t.plus;
    else if (g == -1) ++t.minus;
    else ++t.zero;
  }
  return t;
}

inline bool pairwise_close(const Triple& t) {
  auto close = [](long a, long b) { return a - b <= 1 && b - a <= 1; };
  return close(t.plus, t.minus) && close(t.plus, t.zero) && close(t.minus, t.zero);
}

inline std::vector<int> labels_of(std::uint64_t mask, std::size_t n) {
  std::vector<int> f(n);
  for (std::size_t v = 0; v < n; ++v) f[v] = static_cast<int>((mask >> v) & 1u);
  return f;
}

inline bool friendly(const std::vector<int>& f) {
  long ones = 0;
  for (int x : f) ones += x;
  const long zeros = static_cast<long>(f.size()) - ones;
  return ones - zeros <= 1 && zeros - ones <= 1;
}

/// All friendly labelings by filtering every 0/1 vector.
inline std::vector<std::vector<int>> all_friendly(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto f = labels_of(mask, n);
    if (friendly(f)) out.push_back(std::move(f));
  }
  return out;
}

/// Existence of a friendly labeling with pairwise-close arc counts.
inline std::optional<std::vector<int>> cordial_labeling(const std::vector<Arc>& arcs,
                                                        std::size_t n) {
  for (const auto& f : all_friendly(n)) {
    if (pairwise_close(arc_counts(arcs, f))) return f;
  }
  return std::nullopt;
}

inline std::vector<Arc> orient_edges(const std::vector<Edge>& edges, std::uint64_t bits) {
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const bool flip = (bits >> j) & 1u;
    arcs.push_back(flip ? Arc{edges[j].v, edges[j].u} : Arc{edges[j].u, edges[j].v});
  }
  return arcs;
}

/// Some orientation of g admits a cordial labeling; checked by trying every
/// orientation against every friendly labeling. Per labeling, edge classes
/// are kept as masks so an orientation costs a few popcounts.
inline bool orientable_by_orientations(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  struct Classes {
    std::uint64_t rising, falling;  // f(u)<f(v), f(u)>f(v) for u<v
    long zero;
  };
  std::vector<Classes> per_label;
  for (const auto& f : all_friendly(n)) {
    Classes c{0, 0, 0};
    for (std::size_t j = 0; j < m; ++j) {
      const auto& e = g.edges()[j];
      if (f[e.u] < f[e.v]) c.rising |= std::uint64_t{1} << j;
      else if (f[e.u] > f[e.v]) c.falling |= std::uint64_t{1} << j;
      else ++c.zero;
    }
    per_label.push_back(c);
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t o = 0; o < total; ++o) {
    for (const auto& c : per_label) {
      const Triple t{std::popcount(c.rising & ~o) + std::popcount(c.falling & o),
                     std::popcount(c.falling & ~o) + std::popcount(c.rising & o), c.zero};
      if (pairwise_close(t)) return true;
    }
  }
  return false;
}

inline bool connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

/// Every labeled simple graph on n vertices (n <= 7).
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << slots.size()); ++s) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t j = 0; j < slots.size(); ++j)
      if ((s >> j) & 1u) e.push_back(slots[j]);
    out.push_back(make_graph(n, e));
  }
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (keep(rng)) e.emplace_back(i, j);
  return make_graph(n, e);
}

/// Random digon-free digraph: each pair absent, forward or backward.
inline Digraph random_digraph(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const int c = pick(rng);
      if (c == 1) arcs.push_back({i, j});
      else if (c == 2) arcs.push_back({j, i});
    }
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return make_digraph(n, std::move(arcs));
}

inline VertexLabeling random_labeling(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> f(n);
  for (auto& x : f) x = coin(rng) ? 1 : 0;
  return VertexLabeling::from_labels(f);
}

inline Orientation random_orientation(std::size_t m, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  BitVector b(m);
  for (std::size_t j = 0; j < m; ++j) b.set(j, coin(rng));
  return Orientation(std::move(b));
}

/// All 2^(n-1) orientations of the path 0-1-...-(n-1) as digraphs.
inline std::vector<Digraph> all_oriented_paths(std::size_t n) {
  std::vector<Digraph> out;
  const std::size_t m = n - 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<Arc> arcs;
    for (Vertex j = 0; j < m; ++j) {
      arcs.push_back(((bits >> j) & 1u) ? Arc{j + 1, j} : Arc{j, j + 1});
    }
    out.push_back(make_digraph(n, std::move(arcs)));
  }
  return out;
}

}  // namespace cordial::oracle
