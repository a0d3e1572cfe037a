#pragma once

#include <chrono>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "detail/parallel.hpp"
#include "engine.hpp"
#include "named.hpp"
#include "path_dp.hpp"

namespace cordial {

/// Friendly labelings in ascending mask order; with fix_first_label only
/// those with vertex 0 labeled 0.
class FriendlyLabelings {
public:
  FriendlyLabelings(std::size_t n, bool fix_first_label) : n_(n), masks_(n, fix_first_label) {}

  class iterator {
  public:
    using value_type = VertexLabeling;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(std::size_t n, detail::FriendlyMaskRange::iterator it) : n_(n), it_(it) {}
    VertexLabeling operator*() const { return VertexLabeling::from_mask(n_, *it_); }
    iterator& operator++() {
      ++it_;
      return *this;
    }
    void operator++(int) { ++it_; }
    bool operator==(std::default_sentinel_t s) const { return it_ == s; }

  private:
    std::size_t n_ = 0;
    detail::FriendlyMaskRange::iterator it_;
  };

  iterator begin() const { return {n_, masks_.begin()}; }
  std::default_sentinel_t end() const { return {}; }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto it = masks_.begin(); it != std::default_sentinel; ++it) ++c;
    return c;
  }

private:
  std::size_t n_;
  detail::FriendlyMaskRange masks_;
};

inline FriendlyLabelings friendly_labelings(std::size_t n, bool fix_first_label = false) {
  return FriendlyLabelings(n, fix_first_label);
}

/// All 2^m orientations of a graph as ascending integers; with
/// fix_first_arc, bit 0 stays 0 and 2^(m-1) remain.
class Orientations {
public:
  Orientations(std::size_t edge_count, bool fix_first_arc) : m_(edge_count) {
    if (edge_count > kMaxScanVertices) {
      throw GraphError("orientation enumeration limited to " + std::to_string(kMaxScanVertices) +
                       " edges");
    }
    pinned_ = fix_first_arc && edge_count > 0;
    count_ = std::uint64_t{1} << (pinned_ ? m_ - 1 : m_);
  }

  std::uint64_t count() const { return count_; }
  std::uint64_t mask_at(std::uint64_t i) const { return pinned_ ? i << 1 : i; }
  Orientation at(std::uint64_t i) const { return Orientation::from_mask(m_, mask_at(i)); }

  class iterator {
  public:
    using value_type = Orientation;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const Orientations* o, std::uint64_t i) : o_(o), i_(i) {}
    Orientation operator*() const { return o_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    void operator++(int) { ++i_; }
    bool operator==(std::default_sentinel_t) const { return i_ >= o_->count_; }

  private:
    const Orientations* o_ = nullptr;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  std::default_sentinel_t end() const { return {}; }

private:
  std::size_t m_;
  bool pinned_ = false;
  std::uint64_t count_ = 0;
};

inline Orientations orientations(const Graph& g, bool fix_first_arc = false) {
  return Orientations(g.edge_count(), fix_first_arc);
}

enum class SymmetryMode { none, fix_first_arc, fix_first_label, both };

inline const char* to_string(SymmetryMode m) {
  switch (m) {
    case SymmetryMode::none: return "none";
    case SymmetryMode::fix_first_arc: return "fix_first_arc";
    case SymmetryMode::fix_first_label: return "fix_first_label";
    case SymmetryMode::both: return "both";
  }
  return "none";
}

constexpr SymmetryMode symmetry_mode(bool fix_first_arc, bool fix_first_label) {
  if (fix_first_arc && fix_first_label) return SymmetryMode::both;
  if (fix_first_arc) return SymmetryMode::fix_first_arc;
  if (fix_first_label) return SymmetryMode::fix_first_label;
  return SymmetryMode::none;
}

struct SearchReport {
  std::string graph_descriptor;
  std::uint64_t total_orientations_scanned = 0;
  std::vector<Orientation> noncordial;
  SymmetryMode symmetry_mode = SymmetryMode::none;
  std::chrono::microseconds wall_time{0};
};

/// Runs is_cordial on every enumerated orientation of g and collects the
/// failures in ascending bit-vector order. The result does not depend on jobs.
inline SearchReport noncordial_orientations(const Graph& g, SymmetryMode mode,
                                            std::string descriptor = {}, unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  const bool fix_arc = mode == SymmetryMode::fix_first_arc || mode == SymmetryMode::both;
  const auto scan = (mode == SymmetryMode::fix_first_label || mode == SymmetryMode::both)
                        ? LabelScan::fix_first_label
                        : LabelScan::all;
  const Orientations all(g.edge_count(), fix_arc);

  auto failures = detail::parallel_collect<Orientation>(
      all.count(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Orientation> local;
        for (std::uint64_t i = lo; i < hi; ++i) {
          auto o = all.at(i);
          if (!is_cordial(orient(g, o), scan)) local.push_back(std::move(o));
        }
        return local;
      });

  SearchReport r;
  r.graph_descriptor = std::move(descriptor);
  r.total_orientations_scanned = all.count();
  r.noncordial = std::move(failures);
  r.symmetry_mode = mode;
  r.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

/// Even n <= n_max whose alternating path orientation is not cordial.
inline std::vector<std::size_t> scan_alternating_paths(std::size_t n_max) {
  if (n_max < 2 || n_max % 2 != 0) {
    throw GraphError("scan_alternating_paths needs even n_max >= 2");
  }
  std::vector<std::size_t> failing;
  for (std::size_t n = 2; n <= n_max; n += 2) {
    if (!path_cordial_dp(alternating_path(n))) failing.push_back(n);
  }
  return failing;
}

struct TournamentSurvey {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t noncordial_count = 0;
};

inline constexpr std::size_t kMaxTournamentVertices = 6;

/// Counts labeled tournaments on n vertices that admit no cordial labeling.
inline TournamentSurvey tournament_survey(std::size_t n, unsigned jobs = 1) {
  if (n < 1 || n > kMaxTournamentVertices) {
    throw GraphError("tournament_survey supports 1 <= n <= " +
                     std::to_string(kMaxTournamentVertices));
  }
  const auto k = complete_graph(n);
  const auto r = noncordial_orientations(k, SymmetryMode::fix_first_label,
                                         "complete " + std::to_string(n), jobs);
  return {n, r.total_orientations_scanned, r.noncordial.size()};
}

}  // namespace cordial
