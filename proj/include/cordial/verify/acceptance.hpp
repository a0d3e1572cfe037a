#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../bounds.hpp"
#include "../engine.hpp"
#include "../named.hpp"
#include "../path_dp.hpp"
#include "../quasigroup.hpp"
#include "../search.hpp"
#include "oracles.hpp"

namespace cordial::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool passed() const { return correct && seconds < limit_seconds; }
};

namespace detail {

/// Accumulates named checks; the first failure message is kept for the report.
class Checks {
public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    if (!first_failure_.empty()) s << "; first failure: " << first_failure_;
    if (!notes_.empty()) s << "; " << notes_;
    return s.str();
  }

private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
  std::string notes_;
};

template <typename Fn>
CriterionResult timed(int id, std::string name, double limit, Fn body) {
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {id, std::move(name), checks.ok(), secs, limit, checks.summary()};
}

inline bool witness_valid(const Graph& g, const OrientabilityWitness& w) {
  const auto t = gamma_triple(orient(g, w.orientation), w.labeling);
  return is_friendly(w.labeling) && is_balanced_triple(t) && t == w.gamma;
}

inline bool labeling_valid(const Digraph& d, const VertexLabeling& l) {
  return is_friendly(l) && is_balanced_triple(gamma_triple(d, l));
}

}  // namespace detail

inline CriterionResult alternating_ten_path() {
  return detail::timed(1, "alternating 10-path has no cordial labeling", 1.0, [](auto& c) {
    const auto d = alternating_path(10);
    c.expect(d == orient(path_graph(10), Orientation::from_string("010101010")),
             "alternating_path(10) matches bits 010101010");
    c.expect(friendly_labelings(10).count() == 252, "252 friendly labelings of 10 vertices");
    c.expect(!is_cordial(d, LabelScan::all), "full scan finds no balanced triple");
    c.expect(!oracle::cordial_labeling(d.arcs(), 10), "brute force agrees");
  });
}

inline CriterionResult path_ten_orientations(unsigned jobs = 1) {
  return detail::timed(2, "P10: exactly the alternating orientation and its reversal fail", 5.0,
                       [jobs](auto& c) {
    const auto p10 = path_graph(10);
    const auto full = noncordial_orientations(p10, SymmetryMode::none, "path 10", jobs);
    const auto alt = alternating_orientation(10);
    const auto rev = Orientation::from_string("101010101");
    c.expect(full.total_orientations_scanned == 512, "512 orientations scanned");
    c.expect(full.noncordial.size() == 2, "exactly two non-cordial orientations");
    c.expect(full.noncordial.size() == 2 && full.noncordial[0] == alt && full.noncordial[1] == rev,
             "failures are 010101010 and 101010101");
    const auto fixed = noncordial_orientations(p10, SymmetryMode::fix_first_arc, "path 10", jobs);
    c.expect(fixed.total_orientations_scanned == 256, "2^(n-2) = 256 orientations with first arc fixed");
    c.expect(fixed.noncordial.size() == 1 && fixed.noncordial[0] == alt,
             "one failure with first arc fixed");
  });
}

inline CriterionResult path_landscape(unsigned jobs = 1) {
  return detail::timed(3, "path landscape: P4 fails, P5-P9 clean, alternating {10,22}", 70.0,
                       [jobs](auto& c) {
    c.expect(!noncordial_orientations(path_graph(4), SymmetryMode::none, "", jobs).noncordial.empty(),
             "P4 has a non-cordial orientation");
    for (std::size_t n = 5; n <= 9; ++n) {
      c.expect(noncordial_orientations(path_graph(n), SymmetryMode::none, "", jobs).noncordial.empty(),
               "P" + std::to_string(n) + " all cordial");
    }
    auto t0 = std::chrono::steady_clock::now();
    const auto failing = scan_alternating_paths(22);
    const double dp_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(failing == std::vector<std::size_t>{10, 22}, "alternating scan returns {10, 22}");
    c.expect(dp_secs < 10.0, "DP scan under 10 s");

    t0 = std::chrono::steady_clock::now();
    c.expect(friendly_labelings(22).count() == 705432, "705,432 friendly labelings of 22 vertices");
    c.expect(!is_cordial(alternating_path(22), LabelScan::all), "direct scan of n=22 finds nothing");
    const double direct_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(direct_secs < 60.0, "direct scan under 60 s");
    std::ostringstream s;
    s.precision(3);
    s << "dp " << dp_secs << " s, direct " << direct_secs << " s";
    c.note(s.str());
  });
}

namespace detail {
inline void lambda_never(Checks& c, const Graph& g, std::size_t forbidden) {
  std::size_t scanned = 0;
  bool hit = false;
  for (const auto& f : oracle::all_friendly(g.vertex_count())) {
    ++scanned;
    if (lambda_count(g, VertexLabeling::from_labels(f)) == forbidden) hit = true;
  }
  c.expect(scanned == 252, "252 friendly labelings");
  c.expect(!hit, "no friendly labeling has lambda " + std::to_string(forbidden));
  c.expect(lambda_window(g.edge_count()) == std::pair<std::size_t, std::size_t>{forbidden, forbidden},
           "balanced window is exactly {" + std::to_string(forbidden) + "}");
  c.expect(!is_orientable(g), "is_orientable empty");
}
}  // namespace detail

inline CriterionResult degree_three_tree() {
  return detail::timed(4, "max-degree-3 tree is not orientable", 1.0, [](auto& c) {
    const auto t = counterexample_tree();
    c.expect(t.edge_count() == 9, "tree has 9 edges");
    detail::lambda_never(c, t, 3);
  });
}

inline CriterionResult petersen_not_orientable() {
  return detail::timed(5, "Petersen graph is not orientable", 1.0, [](auto& c) {
    const auto p = petersen_graph();
    c.expect(p.edge_count() == 15, "Petersen has 15 edges");
    detail::lambda_never(c, p, 5);
  });
}

inline CriterionResult lambda_characterization() {
  return detail::timed(6, "lambda window agrees with orientation brute force", 60.0, [](auto& c) {
    std::size_t graphs = 0, orientable = 0;
    auto check = [&](const Graph& g) {
      ++graphs;
      const auto w = is_orientable(g);
      const bool brute = oracle::orientable_by_orientations(g);
      c.expect(w.has_value() == brute, "verdict mismatch on a graph with " +
                                           std::to_string(g.vertex_count()) + " vertices, " +
                                           std::to_string(g.edge_count()) + " edges");
      if (w) {
        ++orientable;
        c.expect(detail::witness_valid(g, *w), "witness re-validates");
      }
    };
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& g : oracle::all_labeled_graphs(n)) {
        if (oracle::connected(g)) check(g);
      }
    }
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(6, 7);
    for (int i = 0; i < 200; ++i) check(oracle::random_graph(size(rng), 0.5, rng));
    c.note(std::to_string(graphs) + " graphs, " + std::to_string(orientable) + " orientable");
  });
}

inline CriterionResult edge_bound(unsigned jobs = 1) {
  return detail::timed(7, "edge bound formulas, exhaustive check at n=6,7", 30.0, [jobs](auto& c) {
    c.expect(max_edges(6) == 14, "max_edges(6) = 14");
    c.expect(max_edges(7) == 18, "max_edges(7) = 18");
    c.expect(z_value(6) == 6, "z_value(6) = 6");
    for (std::size_t n : {6u, 7u}) {
      const auto r = verify_bound(n, jobs);
      c.expect(r.violations.empty(), "no orientable graph above the bound at n=" + std::to_string(n));
      c.expect(r.tight_graph.edge_count() == max_edges(n), "tight graph has max_edges edges");
      c.expect(r.tight_witness && detail::witness_valid(r.tight_graph, *r.tight_witness),
               "tight graph orientable at n=" + std::to_string(n));
      std::string note = "n=" + std::to_string(n) + ": " + std::to_string(r.violations.size()) + "/" +
                         std::to_string(r.graphs_checked) + " graphs above the bound are orientable";
      if (!r.violations.empty()) {
        const auto& v = r.violations.front();
        note += " (e.g. " + std::to_string(v.graph.edge_count()) + " edges, labeling " +
                v.witness.labeling.to_string() + ", gamma " + to_string(v.witness.gamma) + ")";
      }
      c.note(note);
    }
    for (std::size_t n = 6; n <= 100; ++n) {
      c.expect(complete_graph_zero_excess(n), "Z > C(n,2)/3 at n=" + std::to_string(n));
    }
  });
}

inline CriterionResult tournaments(unsigned jobs = 1) {
  return detail::timed(8, "tournaments: n=3,5 cordial, n=4 some fail, n=6 all fail", 60.0,
                       [jobs](auto& c) {
    const auto t3 = tournament_survey(3, jobs);
    const auto t4 = tournament_survey(4, jobs);
    const auto t5 = tournament_survey(5, jobs);
    const auto t6 = tournament_survey(6, jobs);
    c.expect(t3.noncordial_count == 0, "n=3 all cordial");
    c.expect(t4.noncordial_count > 0, "n=4 has non-cordial tournaments");
    c.expect(t5.total == 1024 && t5.noncordial_count == 0, "n=5 all 1024 cordial");
    c.expect(t6.total == 32768 && t6.noncordial_count == 32768, "n=6 all 2^15 non-cordial");
    c.note("n=4: " + std::to_string(t4.noncordial_count) + "/" + std::to_string(t4.total));
  });
}

inline CriterionResult reversal_complement_symmetries() {
  return detail::timed(9, "reversal/complement identities and gamma invariance", 10.0, [](auto& c) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> size(1, 10);
    for (int i = 0; i < 1000; ++i) {
      const auto n = size(rng);
      const auto d = oracle::random_digraph(n, rng);
      const auto l = oracle::random_labeling(n, rng);
      const auto t = gamma_triple(d, l);
      const GammaTriple swapped{t.beta, t.alpha, t.gamma_zero};
      c.expect(gamma_triple(reverse(d), l) == swapped, "reversal swaps alpha and beta");
      c.expect(gamma_triple(d, complement(l)) == swapped, "complement swaps alpha and beta");
      c.expect(gamma_triple(reverse(d), complement(l)) == t, "reversal plus complement is identity");
    }
    for (int i = 0; i < 1000; ++i) {
      const auto n = size(rng);
      const auto g = oracle::random_graph(n, 0.5, rng);
      const auto l = oracle::random_labeling(n, rng);
      const auto o = oracle::random_orientation(g.edge_count(), rng);
      c.expect(gamma_triple(orient(g, o), l).gamma_zero == lambda_count(g, l),
               "gamma equals lambda for every orientation");
    }
  });
}

inline std::vector<CayleyTable> small_group_tables() {
  std::vector<CayleyTable> out;
  for (std::size_t q = 1; q <= 5; ++q) out.push_back(cyclic_group(q));
  std::vector<std::vector<int>> klein(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) klein[a][b] = a ^ b;
  out.emplace_back(std::move(klein));
  return out;
}

inline CriterionResult quasigroup_equivalence() {
  return detail::timed(10, "z3-minus subset cordiality matches (2,3)-cordiality", 30.0, [](auto& c) {
    const auto inst = z3_minus_instance();
    auto compare = [&](const Digraph& d) {
      const auto q = is_subset_q_cordial(d, inst);
      const auto e = is_cordial(d);
      c.expect(q.has_value() == e.has_value(), "verdicts agree");
      if (q) c.expect(detail::labeling_valid(d, VertexLabeling::from_labels(*q)), "subset witness valid");
      if (e) c.expect(detail::labeling_valid(d, e->labeling), "engine witness valid");
    };
    for (std::size_t n = 1; n <= 8; ++n)
      for (const auto& d : oracle::all_oriented_paths(n)) compare(d);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int i = 0; i < 200; ++i) compare(oracle::random_digraph(size(rng), rng));

    for (const auto& t : small_group_tables()) {
      c.expect(validate_latin(t.rows()), "group table of order " + std::to_string(t.order()) + " accepted");
      for (std::size_t r = 0; r < t.order(); ++r) {
        for (std::size_t a = 0; a < t.order(); ++a) {
          for (std::size_t b = a + 1; b < t.order(); ++b) {
            auto rows = t.rows();
            std::swap(rows[r][a], rows[r][b]);
            c.expect(!validate_latin(rows), "single swap rejected");
          }
        }
      }
    }
  });
}

inline CriterionResult dp_vs_exhaustive() {
  return detail::timed(11, "path DP agrees with exhaustive scan on P2-P10", 30.0, [](auto& c) {
    std::size_t total = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
      for (const auto& d : oracle::all_oriented_paths(n)) {
        ++total;
        const auto dp = path_cordial_dp(d);
        c.expect(dp.has_value() == is_cordial(d, LabelScan::all).has_value(), "DP verdict matches");
        if (dp) c.expect(detail::labeling_valid(d, *dp), "DP witness valid");
      }
    }
    c.note(std::to_string(total) + " oriented paths");
  });
}

inline std::vector<CriterionResult> run_all(unsigned jobs = 1) {
  return {alternating_ten_path(), path_ten_orientations(jobs), path_landscape(jobs),
          degree_three_tree(),       petersen_not_orientable(), lambda_characterization(),
          edge_bound(jobs),         tournaments(jobs),       reversal_complement_symmetries(),
          quasigroup_equivalence(), dp_vs_exhaustive()};
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << (r.passed() ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.name
    << "  (" << r.seconds << " s / limit " << r.limit_seconds << " s)  " << r.detail;
  return s.str();
}

}  // namespace cordial::acceptance
