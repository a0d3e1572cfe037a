#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "detail/bits.hpp"
#include "detail/parallel.hpp"
#include "engine.hpp"
#include "named.hpp"

namespace cordial {

// Smallest n the edge bound is stated for.
inline constexpr std::size_t kBoundMinVertices = 6;

namespace detail {
inline void require_two_vertices(std::size_t n) {
  if (n < 2) throw GraphError("bounds need n >= 2, got " + std::to_string(n));
}
}  // namespace detail

/// Edges of K_n forced monochromatic by any friendly labeling.
inline std::uint64_t z_value(std::size_t n) {
  detail::require_two_vertices(n);
  return detail::binomial((n + 1) / 2, 2) + detail::binomial(n / 2, 2);
}

inline std::uint64_t max_edges(std::size_t n) {
  const std::uint64_t bichromatic = detail::binomial(n, 2) - z_value(n);
  return bichromatic + (bichromatic + 1) / 2;
}

struct BoundsRecord {
  std::size_t n = 0;
  std::uint64_t z = 0;
  std::uint64_t bichromatic_capacity = 0;
  std::uint64_t e_max = 0;
  bool within_hypothesis = false;  // n >= 6
};

inline BoundsRecord bounds_record(std::size_t n) {
  BoundsRecord r;
  r.n = n;
  r.z = z_value(n);
  r.bichromatic_capacity = detail::binomial(n, 2) - r.z;
  r.e_max = max_edges(n);
  r.within_hypothesis = n >= kBoundMinVertices;
  return r;
}

/// Raw comparison Z > C(n,2)/3.
inline bool complete_graph_zero_excess(std::size_t n) {
  detail::require_two_vertices(n);
  return 3 * z_value(n) > detail::binomial(n, 2);
}

struct BoundViolation {
  Graph graph;
  OrientabilityWitness witness;
};

struct BoundVerification {
  std::size_t n = 0;
  std::uint64_t graphs_checked = 0;
  std::vector<BoundViolation> violations;
  std::optional<OrientabilityWitness> tight_witness;
  Graph tight_graph;
};

inline constexpr std::size_t kVerifyBoundMax = 7;

/// Checks every labeled graph on n vertices with more than max_edges(n)
/// edges for orientability (there should be none) and builds a witness for
/// tight_bound_graph(n).
inline BoundVerification verify_bound(std::size_t n, unsigned jobs = 1) {
  if (n < kBoundMinVertices || n > kVerifyBoundMax) {
    throw GraphError("verify_bound supports " + std::to_string(kBoundMinVertices) +
                     " <= n <= " + std::to_string(kVerifyBoundMax));
  }
  const auto all_pairs = complete_graph(n).edges();
  const std::size_t c = all_pairs.size();
  const std::uint64_t bound = max_edges(n);
  const std::size_t max_missing = c - static_cast<std::size_t>(bound) - 1;

  // Graphs above the bound are K_n minus at most max_missing edges.
  std::vector<std::uint64_t> removed_sets;
  for (std::size_t k = 0; k <= max_missing; ++k) {
    if (k == 0) {
      removed_sets.push_back(0);
      continue;
    }
    for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s != 0; s = detail::next_with_popcount(s, static_cast<int>(k), c)) {
      removed_sets.push_back(s);
    }
  }

  BoundVerification out;
  out.n = n;
  out.graphs_checked = removed_sets.size();
  out.violations = detail::parallel_collect<BoundViolation>(
      removed_sets.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<BoundViolation> local;
        for (std::uint64_t i = lo; i < hi; ++i) {
          std::vector<Edge> kept;
          for (std::size_t j = 0; j < c; ++j) {
            if (!((removed_sets[i] >> j) & 1u)) kept.push_back(all_pairs[j]);
          }
          auto g = make_graph(n, kept);
          if (auto w = is_orientable(g)) local.push_back({std::move(g), std::move(*w)});
        }
        return local;
      });
  out.tight_graph = tight_bound_graph(n);
  out.tight_witness = is_orientable(out.tight_graph);
  return out;
}

}  // namespace cordial
