#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "engine.hpp"

namespace cordial {

/// Decides cordiality of an oriented path v0 - v1 - ... - v(n-1) in
/// O(n^4) time without enumerating labelings. The underlying graph must be
/// exactly the path on vertices in index order; arcs may appear in any order.
///
/// State after labeling vertex i: (ones used, alpha, beta, label of i).
/// alpha, beta and the running zero count are capped at ceil(m/3), the
/// largest value any balanced final triple allows.
inline std::optional<VertexLabeling> path_cordial_dp(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return VertexLabeling(0);
  const std::size_t m = n - 1;
  if (d.arc_count() != m) throw GraphError("path_cordial_dp: digraph is not a path");

  // forward[i]: arc between i and i+1 points i -> i+1.
  std::vector<int> forward(m, -1);
  for (const auto& a : d.arcs()) {
    const Vertex lo = std::min(a.tail, a.head);
    const Vertex hi = std::max(a.tail, a.head);
    if (hi != lo + 1 || forward[lo] != -1) {
      throw GraphError("path_cordial_dp: digraph is not a path in vertex order");
    }
    forward[lo] = a.tail == lo ? 1 : 0;
  }

  const std::size_t max_ones = (n + 1) / 2;
  const std::size_t cap = (m + 2) / 3;
  const std::size_t dim_ones = max_ones + 1;
  const std::size_t dim_ab = cap + 1;
  const std::size_t layer = dim_ones * dim_ab * dim_ab * 2;
  std::vector<std::uint8_t> reach(n * layer, 0);
  auto idx = [&](std::size_t pos, std::size_t ones, std::size_t alpha, std::size_t beta,
                 int label) {
    return pos * layer + ((ones * dim_ab + alpha) * dim_ab + beta) * 2 + static_cast<std::size_t>(label);
  };
  auto step_label = [&](std::size_t arc, int left, int right) {
    return forward[arc] ? arc_label(left, right) : arc_label(right, left);
  };

  reach[idx(0, 0, 0, 0, 0)] = 1;
  if (max_ones >= 1) reach[idx(0, 1, 0, 0, 1)] = 1;

  for (std::size_t pos = 0; pos + 1 < n; ++pos) {
    for (std::size_t ones = 0; ones <= std::min(max_ones, pos + 1); ++ones) {
      for (std::size_t alpha = 0; alpha <= cap; ++alpha) {
        for (std::size_t beta = 0; beta <= cap; ++beta) {
          for (int prev = 0; prev < 2; ++prev) {
            if (!reach[idx(pos, ones, alpha, beta, prev)]) continue;
            for (int next = 0; next < 2; ++next) {
              const std::size_t ones2 = ones + static_cast<std::size_t>(next);
              if (ones2 > max_ones) continue;
              const int lab = step_label(pos, prev, next);
              const std::size_t a2 = alpha + (lab == 1);
              const std::size_t b2 = beta + (lab == -1);
              const std::size_t zeros = (pos + 1) - a2 - b2;
              if (a2 > cap || b2 > cap || zeros > cap) continue;
              reach[idx(pos + 1, ones2, a2, b2, next)] = 1;
            }
          }
        }
      }
    }
  }

  const std::size_t last = n - 1;
  for (std::size_t ones = n / 2; ones <= max_ones; ++ones) {
    for (std::size_t alpha = 0; alpha <= cap; ++alpha) {
      for (std::size_t beta = 0; beta <= cap; ++beta) {
        if (alpha + beta > m) continue;
        if (!is_balanced_triple({alpha, beta, m - alpha - beta})) continue;
        for (int label = 0; label < 2; ++label) {
          if (!reach[idx(last, ones, alpha, beta, label)]) continue;
          // Walk back through any reachable predecessor.
          std::vector<int> labels(n, 0);
          std::size_t o = ones, a = alpha, b = beta;
          int cur = label;
          for (std::size_t pos = last; pos > 0; --pos) {
            labels[pos] = cur;
            bool found = false;
            for (int prev = 0; prev < 2 && !found; ++prev) {
              const int lab = step_label(pos - 1, prev, cur);
              const std::size_t da = lab == 1, db = lab == -1;
              const std::size_t dones = static_cast<std::size_t>(cur);
              if (a < da || b < db || o < dones) continue;
              if (reach[idx(pos - 1, o - dones, a - da, b - db, prev)]) {
                o -= dones;
                a -= da;
                b -= db;
                cur = prev;
                found = true;
              }
            }
          }
          labels[0] = cur;
          return VertexLabeling::from_labels(labels);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cordial
