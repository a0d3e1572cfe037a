#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cordial {

/// True iff every row and column of the square table is a permutation of
/// 0..q-1. Throws on a ragged table.
inline bool validate_latin(const std::vector<std::vector<int>>& rows) {
  const std::size_t q = rows.size();
  for (const auto& r : rows) {
    if (r.size() != q) throw GraphError("Cayley table is not square");
  }
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<bool> row_seen(q, false), col_seen(q, false);
    for (std::size_t j = 0; j < q; ++j) {
      const int a = rows[i][j];
      const int b = rows[j][i];
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= q || static_cast<std::size_t>(b) >= q) {
        return false;
      }
      if (row_seen[a] || col_seen[b]) return false;
      row_seen[a] = col_seen[b] = true;
    }
  }
  return true;
}

/// Quasigroup operation table on elements 0..q-1; entry (i, j) is i . j.
class CayleyTable {
public:
  CayleyTable(std::vector<std::vector<int>> rows, std::vector<std::string> names = {})
      : rows_(std::move(rows)), names_(std::move(names)) {
    if (!validate_latin(rows_)) throw GraphError("Cayley table is not a Latin square");
    if (!names_.empty() && names_.size() != rows_.size()) {
      throw GraphError("Cayley table names do not match its order");
    }
  }

  std::size_t order() const { return rows_.size(); }
  int op(int a, int b) const { return rows_[a][b]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::string name(int a) const {
    return names_.empty() ? std::to_string(a) : names_[static_cast<std::size_t>(a)];
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j)
        if (rows_[i][j] != rows_[j][i]) return false;
    return true;
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
  std::vector<std::vector<int>> rows_;
  std::vector<std::string> names_;
};

/// Addition table of Z_q.
inline CayleyTable cyclic_group(std::size_t q) {
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) rows[i][j] = static_cast<int>((i + j) % q);
  return CayleyTable(std::move(rows));
}

/// Vertex labels come from `label_subset`; an arc t->h gets op(f(t), f(h)).
struct CordialInstance {
  CayleyTable table;
  std::vector<int> label_subset;

  CordialInstance(CayleyTable t, std::vector<int> subset)
      : table(std::move(t)), label_subset(std::move(subset)) {
    if (label_subset.empty()) throw GraphError("label subset must be nonempty");
    std::vector<int> sorted = label_subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw GraphError("label subset has repeated elements");
    }
    for (int s : label_subset) {
      if (s < 0 || static_cast<std::size_t>(s) >= table.order()) {
        throw GraphError("label subset element " + std::to_string(s) + " is not in the table");
      }
    }
  }
};

/// Z3 with op(x, y) = y - x mod 3 and elements shown as {0, +1, -1};
/// labels {0, 1}. Arc labels coincide with f(head) - f(tail).
inline CordialInstance z3_minus_instance() {
  std::vector<std::vector<int>> rows(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) rows[x][y] = ((y - x) % 3 + 3) % 3;
  return CordialInstance(CayleyTable(std::move(rows), {"0", "+1", "-1"}), {0, 1});
}

/// Element of Z3 back to its {-1, 0, +1} representative.
constexpr int z3_signed(int element) { return element == 2 ? -1 : element; }

namespace detail {

inline bool balanced_counts(const std::vector<std::size_t>& counts) {
  if (counts.empty()) return true;
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi - *lo <= 1;
}

/// Visits labelings V -> subset in lexicographic order (vertex 0 most
/// significant) whose fibers over the subset differ pairwise by at most one.
template <typename Fn>
std::optional<std::vector<int>> first_balanced_labeling(std::size_t n,
                                                        const std::vector<int>& subset,
                                                        Fn&& accept) {
  const std::size_t k = subset.size();
  const std::size_t floor_share = n / k;
  const std::size_t ceil_share = (n + k - 1) / k;
  const std::size_t ceil_slots = n % k;  // labels that must reach ceil_share
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::size_t> count(k, 0);
  std::vector<int> labels(n);

  // Depth-first with fiber-capacity pruning.
  auto feasible = [&](std::size_t placed) {
    std::size_t over = 0, deficit = 0;
    for (std::size_t c : count) {
      if (c > ceil_share) return false;
      if (c == ceil_share && ceil_share != floor_share) ++over;
      if (c < floor_share) deficit += floor_share - c;
    }
    if (over > ceil_slots) return false;
    return deficit <= n - placed;
  };

  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) {
      if (accept(labels)) {
        found = labels;
        return true;
      }
      return false;
    }
    for (std::size_t d = 0; d < k; ++d) {
      ++count[d];
      labels[v] = subset[d];
      if (feasible(v + 1) && self(self, v + 1)) return true;
      --count[d];
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace detail

/// First balanced labeling over the instance's subset whose induced arc
/// labeling is balanced over the whole table, or nullopt.
inline std::optional<std::vector<int>> is_subset_q_cordial(const Digraph& d,
                                                           const CordialInstance& inst) {
  const std::size_t q = inst.table.order();
  std::vector<std::size_t> arc_counts(q);
  return detail::first_balanced_labeling(
      d.vertex_count(), inst.label_subset, [&](const std::vector<int>& f) {
        std::fill(arc_counts.begin(), arc_counts.end(), 0);
        for (const auto& a : d.arcs()) ++arc_counts[inst.table.op(f[a.tail], f[a.head])];
        return detail::balanced_counts(arc_counts);
      });
}

/// Abelian-group cordiality: vertex labels over all of A, edge uv labeled
/// f(u) + f(v), both labelings balanced over A.
inline std::optional<std::vector<int>> is_a_cordial(const Graph& g, const CayleyTable& a_table) {
  if (!a_table.is_commutative()) {
    throw GraphError("A-cordiality needs a commutative table on an undirected graph");
  }
  const std::size_t q = a_table.order();
  std::vector<int> all(q);
  for (std::size_t i = 0; i < q; ++i) all[i] = static_cast<int>(i);
  std::vector<std::size_t> edge_counts(q);
  return detail::first_balanced_labeling(g.vertex_count(), all, [&](const std::vector<int>& f) {
    std::fill(edge_counts.begin(), edge_counts.end(), 0);
    for (const auto& e : g.edges()) ++edge_counts[a_table.op(f[e.u], f[e.v])];
    return detail::balanced_counts(edge_counts);
  });
}

}  // namespace cordial
