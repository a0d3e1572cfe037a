#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "engine.hpp"
#include "io.hpp"
#include "named.hpp"
#include "quasigroup.hpp"
#include "report.hpp"
#include "search.hpp"
#include "verify/acceptance.hpp"

namespace cordial::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline unsigned default_jobs() {
  if (const char* env = std::getenv("CORDIAL_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// FILE argument: `-` for stdin, an existing path, or a named instance
/// written NAME or NAME:N.
inline AnyGraph load_any(const std::string& source, std::istream& in) {
  auto from_stream = [](std::istream& s) -> AnyGraph {
    auto e = parse_edge_list(s);
    if (e.directed) return to_digraph(e);
    return to_graph(e);
  };
  if (source == "-") return from_stream(in);
  if (std::filesystem::exists(source)) {
    std::ifstream f(source);
    if (!f) throw ParseError("cannot open " + source);
    return from_stream(f);
  }
  const auto colon = source.find(':');
  const std::string name = source.substr(0, colon);
  std::optional<std::size_t> n;
  if (colon != std::string::npos) n = cordial::detail::parse_count(source.substr(colon + 1), 0);
  bool known = false;
  for (auto k : named_graph_names()) known = known || k == name;
  if (!known) throw ParseError("no such file or named graph: " + source);
  return named(name, n);
}

inline Graph load_graph(const std::string& source, std::istream& in) {
  auto g = load_any(source, in);
  if (auto* p = std::get_if<Graph>(&g)) return *p;
  // An arc-free digraph file is also a valid empty graph.
  const auto& d = std::get<Digraph>(g);
  if (d.arc_count() == 0) return make_graph(d.vertex_count(), std::vector<Edge>{});
  throw ParseError(source + " is a digraph; expected an undirected graph");
}

inline Digraph load_digraph(const std::string& source, std::istream& in) {
  auto g = load_any(source, in);
  if (auto* p = std::get_if<Digraph>(&g)) return *p;
  const auto& u = std::get<Graph>(g);
  if (u.edge_count() == 0) return make_digraph(u.vertex_count(), {});
  throw ParseError(source + " is an undirected graph; expected arcs `u > v`");
}

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

inline std::string labels_string(const std::vector<int>& f, const CayleyTable& t) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + t.name(f[i]);
  return s;
}

inline std::vector<int> parse_subset(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  for (std::string tok; std::getline(ss, tok, ',');) {
    out.push_back(static_cast<int>(cordial::detail::parse_count(tok, 0)));
  }
  return out;
}

}  // namespace detail

/// Parses argv (including the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& argv, Streams io) {
  CLI::App app{"Cordial labeling and orientability checker"};
  app.require_subcommand(1);
  bool json = false;
  unsigned jobs = detail::default_jobs();
  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_option("--jobs", jobs, "Worker threads for exhaustive scans (default $CORDIAL_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  std::string file, name, table_file, subset_list;
  std::optional<std::size_t> count;
  std::size_t n = 0;
  bool fix_first_arc = false, fix_first_label = false, all_labelings = false;

  auto* check_digraph = app.add_subcommand("check-digraph", "Search for a cordial labeling of a digraph");
  check_digraph->add_option("FILE", file, "Edge-list file, '-' for stdin, or NAME[:N]")->required();
  check_digraph->add_flag("--all-labelings", all_labelings,
                          "Scan every friendly labeling instead of pinning vertex 0");

  auto* check_graph = app.add_subcommand("check-graph", "Decide orientability of an undirected graph");
  check_graph->add_option("FILE", file, "Edge-list file, '-' for stdin, or NAME[:N]")->required();

  auto* search = app.add_subcommand("search", "List every non-cordial orientation of a graph");
  search->add_option("FILE", file, "Edge-list file, '-' for stdin, or NAME[:N]")->required();
  search->add_flag("--fix-first-arc", fix_first_arc, "Pin edge 0 to its forward direction");
  search->add_flag("--fix-first-label", fix_first_label, "Pin vertex 0 to label 0");

  auto* gen = app.add_subcommand("gen", "Write a named graph as an edge list");
  gen->add_option("NAME", name, "path, complete, petersen, counterexample_tree, alternating_path, tight_bound")
      ->required();
  gen->add_option("N", count, "Vertex count");

  auto* scan = app.add_subcommand("scan-alternating", "Alternating paths up to NMAX with no cordial labeling");
  scan->add_option("NMAX", n, "Largest even path order")->required();

  auto* tourn = app.add_subcommand("tournaments", "Count non-cordial labeled tournaments");
  tourn->add_option("N", n, "Vertex count (1-6)")->required();

  auto* bounds = app.add_subcommand("bounds", "Evaluate the orientable edge-count bound");
  bounds->add_option("N", n, "Vertex count")->required();

  auto* vbound = app.add_subcommand("verify-bound", "Exhaustively check the edge bound (n = 6, 7)");
  vbound->add_option("N", n, "Vertex count")->required();

  auto* qcheck = app.add_subcommand("qcheck", "Quasigroup cordiality of a digraph (or A-cordiality of a graph)");
  qcheck->add_option("FILE", file, "Edge-list file, '-' for stdin, or NAME[:N]")->required();
  qcheck->add_option("--table", table_file, "Cayley table file or 'z3_minus'")->required();
  qcheck->add_option("--subset", subset_list, "Comma-separated vertex label elements");

  auto* verify = app.add_subcommand("verify-paper", "Run the full acceptance suite");

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  int code = kHolds;
  auto emit = [&] {
    report.timing = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    io.out << (json ? serialize_json(report) + "\n" : serialize_text(report));
  };

  try {
    if (*check_digraph) {
      report.command = "check-digraph";
      report.input("file", file);
      const auto d = detail::load_digraph(file, io.in);
      report.input("n", std::to_string(d.vertex_count()));
      report.input("arcs", std::to_string(d.arc_count()));
      const auto scan_mode = all_labelings ? LabelScan::all : LabelScan::fix_first_label;
      if (auto r = is_cordial(d, scan_mode)) {
        report.verdict("result", "cordial");
        report.verdict("labeling", r->labeling.to_string());
        report.verdict("gamma", to_string(*r->gamma));
      } else {
        report.verdict("result", "no cordial labeling");
        report.verdict("labelings_scanned",
                       std::to_string(friendly_labelings(d.vertex_count(), !all_labelings).count()));
        code = kFails;
      }
    } else if (*check_graph) {
      report.command = "check-graph";
      report.input("file", file);
      const auto g = detail::load_graph(file, io.in);
      report.input("n", std::to_string(g.vertex_count()));
      report.input("edges", std::to_string(g.edge_count()));
      const auto [lo, hi] = lambda_window(g.edge_count());
      report.verdict("lambda_window", std::to_string(lo) + "," + std::to_string(hi));
      if (auto w = is_orientable(g)) {
        report.verdict("result", "orientable");
        report.verdict("labeling", w->labeling.to_string());
        report.verdict("lambda", std::to_string(lambda_count(g, w->labeling)));
        report.verdict("orientation", w->orientation.to_string());
        report.verdict("gamma", to_string(w->gamma));
      } else {
        report.verdict("result", "not orientable");
        code = kFails;
      }
    } else if (*search) {
      report.command = "search";
      report.input("file", file);
      const auto g = detail::load_graph(file, io.in);
      const auto mode = symmetry_mode(fix_first_arc, fix_first_label);
      report.input("symmetry", to_string(mode));
      const auto r = noncordial_orientations(g, mode, file, jobs);
      report.verdict("orientations_scanned", std::to_string(r.total_orientations_scanned));
      report.verdict("noncordial_count", std::to_string(r.noncordial.size()));
      std::string list;
      for (std::size_t i = 0; i < r.noncordial.size(); ++i) {
        list += (i ? "," : "") + r.noncordial[i].to_string();
      }
      report.verdict("noncordial", list);
      code = r.noncordial.empty() ? kHolds : kFails;
    } else if (*gen) {
      const auto g = named(name, count);
      if (const auto* u = std::get_if<Graph>(&g)) {
        write_graph(io.out, *u);
      } else {
        write_digraph(io.out, std::get<Digraph>(g));
      }
      return kHolds;
    } else if (*scan) {
      report.command = "scan-alternating";
      report.input("n_max", std::to_string(n));
      const auto failing = scan_alternating_paths(n);
      report.verdict("noncordial_n", detail::join(failing));
      code = failing.empty() ? kHolds : kFails;
    } else if (*tourn) {
      report.command = "tournaments";
      report.input("n", std::to_string(n));
      const auto s = tournament_survey(n, jobs);
      report.verdict("total", std::to_string(s.total));
      report.verdict("noncordial_count", std::to_string(s.noncordial_count));
      code = s.noncordial_count == 0 ? kHolds : kFails;
    } else if (*bounds) {
      report.command = "bounds";
      report.input("n", std::to_string(n));
      const auto b = bounds_record(n);
      report.verdict("z", std::to_string(b.z));
      report.verdict("bichromatic_capacity", std::to_string(b.bichromatic_capacity));
      report.verdict("e_max", std::to_string(b.e_max));
      report.verdict("zero_excess", complete_graph_zero_excess(n) ? "true" : "false");
      if (!b.within_hypothesis) report.verdict("warning", "n < 6 is outside the bound's hypothesis");
    } else if (*vbound) {
      report.command = "verify-bound";
      report.input("n", std::to_string(n));
      const auto v = verify_bound(n, jobs);
      report.verdict("e_max", std::to_string(max_edges(n)));
      report.verdict("graphs_above_bound", std::to_string(v.graphs_checked));
      report.verdict("violations", std::to_string(v.violations.size()));
      report.verdict("tight_edges", std::to_string(v.tight_graph.edge_count()));
      if (v.tight_witness) {
        report.verdict("tight_labeling", v.tight_witness->labeling.to_string());
        report.verdict("tight_orientation", v.tight_witness->orientation.to_string());
        report.verdict("tight_gamma", to_string(v.tight_witness->gamma));
      } else {
        report.verdict("tight_labeling", "none");
      }
      code = v.violations.empty() && v.tight_witness ? kHolds : kFails;
    } else if (*qcheck) {
      report.command = "qcheck";
      report.input("file", file);
      report.input("table", table_file);
      std::optional<CordialInstance> inst;
      std::optional<CayleyTable> table;
      if (table_file == "z3_minus" && !std::filesystem::exists(table_file)) {
        inst = z3_minus_instance();
        table = inst->table;
      } else {
        std::ifstream tf(table_file);
        if (!tf) throw ParseError("cannot open table " + table_file);
        table = read_cayley_table(tf);
      }
      auto g = detail::load_any(file, io.in);
      std::optional<std::vector<int>> witness;
      if (const auto* d = std::get_if<Digraph>(&g)) {
        if (!subset_list.empty()) {
          inst.emplace(*table, detail::parse_subset(subset_list));
        } else if (!inst) {
          throw ParseError("qcheck on a digraph needs --subset");
        }
        report.input("subset", subset_list.empty() ? "0,1" : subset_list);
        witness = is_subset_q_cordial(*d, *inst);
      } else {
        if (!subset_list.empty()) throw ParseError("--subset applies to digraphs only");
        witness = is_a_cordial(std::get<Graph>(g), *table);
      }
      if (witness) {
        report.verdict("result", "cordial");
        report.verdict("labeling", detail::labels_string(*witness, *table));
      } else {
        report.verdict("result", "not cordial");
        code = kFails;
      }
    } else if (*verify) {
      report.command = "verify-paper";
      report.input("jobs", std::to_string(jobs));
      const auto results = acceptance::run_all(jobs);
      bool all = true;
      for (const auto& r : results) {
        if (!json) io.out << acceptance::format_line(r) << '\n';
        report.verdict("criterion_" + std::to_string(r.id), r.passed() ? "pass" : "fail");
        all = all && r.passed();
      }
      report.verdict("result", all ? "all criteria pass" : "some criteria fail");
      code = all ? kHolds : kFails;
    }
  } catch (const GraphError& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }
  emit();
  return code;
}

}  // namespace cordial::cli
