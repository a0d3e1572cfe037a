#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cordial {

// Hard cap for exhaustive labeling scans, which index labelings by a 64-bit mask.
inline constexpr std::size_t kMaxScanVertices = 63;

/// Induced label of an arc tail->head: f(head) - f(tail).
constexpr int arc_label(int f_tail, int f_head) { return f_head - f_tail; }

inline GammaTriple gamma_triple(const Digraph& d, const VertexLabeling& l) {
  if (l.vertex_count() != d.vertex_count()) {
    throw GraphError("labeling covers " + std::to_string(l.vertex_count()) +
                     " vertices, digraph has " + std::to_string(d.vertex_count()));
  }
  GammaTriple t;
  for (const auto& a : d.arcs()) {
    switch (arc_label(l[a.tail], l[a.head])) {
      case 1: ++t.alpha; break;
      case -1: ++t.beta; break;
      default: ++t.gamma_zero; break;
    }
  }
  return t;
}

constexpr bool is_friendly(std::size_t n, std::size_t ones) {
  const std::size_t zeros = n - ones;
  return (ones > zeros ? ones - zeros : zeros - ones) <= 1;
}

inline bool is_friendly(const VertexLabeling& l) {
  return is_friendly(l.vertex_count(), l.ones_count());
}

constexpr bool within_one(std::size_t a, std::size_t b) { return (a > b ? a - b : b - a) <= 1; }

constexpr bool is_balanced_triple(const GammaTriple& t) {
  return within_one(t.alpha, t.beta) && within_one(t.alpha, t.gamma_zero) &&
         within_one(t.beta, t.gamma_zero);
}

inline VertexLabeling complement(const VertexLabeling& l) {
  BitVector b(l.vertex_count());
  for (std::size_t v = 0; v < l.vertex_count(); ++v) b.set(v, l[v] == 0);
  return VertexLabeling(std::move(b));
}

/// Which friendly labelings an exhaustive scan visits. Complementing a
/// labeling maps (alpha, beta, gamma) to (beta, alpha, gamma), so pinning
/// vertex 0 to label 0 loses no verdicts.
enum class LabelScan { all, fix_first_label };

namespace detail {

/// Friendly labelings of n vertices as ascending 64-bit masks.
class FriendlyMaskRange {
public:
  class iterator {
  public:
    using value_type = std::uint64_t;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(const FriendlyMaskRange* r) : range_(r) {
      cur_ = (std::uint64_t{1} << r->k_lo_) - 1;
      skip_pinned();
    }
    std::uint64_t operator*() const { return cur_; }
    iterator& operator++() {
      step();
      skip_pinned();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

  private:
    void step() {
      const auto a = next_with_popcount(cur_, range_->k_lo_, range_->n_);
      const auto b = range_->k_hi_ == range_->k_lo_
                         ? 0
                         : next_with_popcount(cur_, range_->k_hi_, range_->n_);
      if (a == 0 && b == 0) {
        done_ = true;
      } else {
        cur_ = (a == 0) ? b : (b == 0 ? a : std::min(a, b));
      }
    }
    void skip_pinned() {
      while (!done_ && range_->fix_first_ && (cur_ & 1u)) step();
    }

    const FriendlyMaskRange* range_ = nullptr;
    std::uint64_t cur_ = 0;
    bool done_ = false;
  };

  FriendlyMaskRange(std::size_t n, bool fix_first_label)
      : n_(n), k_lo_(static_cast<int>(n / 2)), k_hi_(static_cast<int>((n + 1) / 2)),
        fix_first_(fix_first_label) {
    if (n > kMaxScanVertices) {
      throw GraphError("exhaustive labeling scan limited to " + std::to_string(kMaxScanVertices) +
                       " vertices");
    }
  }

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  std::size_t n_;
  int k_lo_;
  int k_hi_;
  bool fix_first_;
};

/// Arc endpoints as bit positions for mask-based gamma evaluation.
struct MaskedArcs {
  std::vector<std::uint8_t> tail;
  std::vector<std::uint8_t> head;

  explicit MaskedArcs(const Digraph& d) {
    tail.reserve(d.arc_count());
    head.reserve(d.arc_count());
    for (const auto& a : d.arcs()) {
      tail.push_back(static_cast<std::uint8_t>(a.tail));
      head.push_back(static_cast<std::uint8_t>(a.head));
    }
  }

  GammaTriple gamma(std::uint64_t ones) const {
    GammaTriple t;
    for (std::size_t j = 0; j < tail.size(); ++j) {
      const unsigned ft = (ones >> tail[j]) & 1u;
      const unsigned fh = (ones >> head[j]) & 1u;
      t.alpha += (fh & ~ft) & 1u;
      t.beta += (ft & ~fh) & 1u;
    }
    t.gamma_zero = tail.size() - t.alpha - t.beta;
    return t;
  }
};

inline std::size_t monochromatic_edges(const Graph& g, std::uint64_t ones) {
  std::size_t c = 0;
  for (const auto& e : g.edges()) c += (((ones >> e.u) ^ (ones >> e.v)) & 1u) == 0;
  return c;
}

}  // namespace detail

struct LabelingReport {
  VertexLabeling labeling;
  std::optional<std::size_t> lambda;
  std::optional<GammaTriple> gamma;
  bool cordial_or_orientable = false;
};

/// First friendly labeling (in ascending mask order over the chosen scan)
/// whose gamma triple is balanced, or nullopt.
inline std::optional<LabelingReport> is_cordial(const Digraph& d,
                                                LabelScan scan = LabelScan::fix_first_label) {
  const detail::MaskedArcs arcs(d);
  for (auto mask : detail::FriendlyMaskRange(d.vertex_count(), scan == LabelScan::fix_first_label)) {
    const auto t = arcs.gamma(mask);
    if (is_balanced_triple(t)) {
      return LabelingReport{VertexLabeling::from_mask(d.vertex_count(), mask), std::nullopt, t, true};
    }
  }
  return std::nullopt;
}

/// Number of monochromatic edges under l.
inline std::size_t lambda_count(const Graph& g, const VertexLabeling& l) {
  if (l.vertex_count() != g.vertex_count()) {
    throw GraphError("labeling covers " + std::to_string(l.vertex_count()) +
                     " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  std::size_t c = 0;
  for (const auto& e : g.edges()) c += l[e.u] == l[e.v];
  return c;
}

/// {floor(m/3), ceil(m/3)}
constexpr std::pair<std::size_t, std::size_t> lambda_window(std::size_t m) {
  return {m / 3, (m + 2) / 3};
}

constexpr bool in_lambda_window(std::size_t lambda, std::size_t m) {
  const auto [lo, hi] = lambda_window(m);
  return lambda == lo || lambda == hi;
}

struct OrientabilityWitness {
  VertexLabeling labeling;
  Orientation orientation;
  GammaTriple gamma;
};

/// Orients bichromatic edges so the first ceil(m'/2) (canonical order) get
/// label +1 and the rest -1; monochromatic edges keep bit 0.
inline Orientation construct_witness_orientation(const Graph& g, const VertexLabeling& l) {
  const std::size_t m = g.edge_count();
  const std::size_t lambda = lambda_count(g, l);
  if (!is_friendly(l)) throw GraphError("witness construction needs a friendly labeling");
  if (!in_lambda_window(lambda, m)) {
    throw GraphError("monochromatic edge count " + std::to_string(lambda) +
                     " is outside the balanced window for " + std::to_string(m) + " edges");
  }
  const std::size_t bichromatic = m - lambda;
  std::size_t plus_left = (bichromatic + 1) / 2;
  BitVector bits(m);
  const auto& edges = g.edges();
  for (std::size_t j = 0; j < m; ++j) {
    const int fu = l[edges[j].u];
    const int fv = l[edges[j].v];
    if (fu == fv) continue;
    // u->v carries fv - fu; flip when that is not the sign wanted.
    const int wanted = plus_left > 0 ? 1 : -1;
    if (plus_left > 0) --plus_left;
    bits.set(j, arc_label(fu, fv) != wanted);
  }
  return Orientation(std::move(bits));
}

/// First friendly labeling (vertex 0 pinned to 0) with lambda in the
/// balanced window, completed into a cordial orientation.
inline std::optional<OrientabilityWitness> is_orientable(const Graph& g) {
  const std::size_t m = g.edge_count();
  for (auto mask : detail::FriendlyMaskRange(g.vertex_count(), true)) {
    if (in_lambda_window(detail::monochromatic_edges(g, mask), m)) {
      auto l = VertexLabeling::from_mask(g.vertex_count(), mask);
      auto o = construct_witness_orientation(g, l);
      auto t = gamma_triple(orient(g, o), l);
      return OrientabilityWitness{std::move(l), std::move(o), t};
    }
  }
  return std::nullopt;
}

}  // namespace cordial
