#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "quasigroup.hpp"

namespace cordial {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parsed edge-list file: undirected lines are `u v`, arc lines `u > v`.
struct EdgeList {
  std::size_t n = 0;
  bool directed = false;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

namespace detail {

// Next line that is neither blank nor a `#` comment.
inline bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t lineno) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("line " + std::to_string(lineno) + ": expected a nonnegative integer, got '" +
                     tok + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(lineno) + ": integer out of range");
  }
}

}  // namespace detail

inline EdgeList parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError("empty edge list");
  auto header = detail::split_ws(line);
  if (header.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected `n m`");
  EdgeList out;
  out.n = detail::parse_count(header[0], lineno);
  const std::size_t m = detail::parse_count(header[1], lineno);
  bool saw_arc = false, saw_edge = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    auto tok = detail::split_ws(line);
    if (tok.size() == 3 && tok[1] == ">") {
      saw_arc = true;
      out.pairs.emplace_back(detail::parse_count(tok[0], lineno), detail::parse_count(tok[2], lineno));
    } else if (tok.size() == 2) {
      saw_edge = true;
      out.pairs.emplace_back(detail::parse_count(tok[0], lineno), detail::parse_count(tok[1], lineno));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": expected `u v` or `u > v`");
    }
    if (saw_arc && saw_edge) {
      throw ParseError("line " + std::to_string(lineno) + ": mixes edges and arcs");
    }
  }
  if (detail::next_content_line(in, line, lineno)) {
    throw ParseError("line " + std::to_string(lineno) + ": more lines than the declared edge count");
  }
  out.directed = saw_arc;
  return out;
}

inline Graph to_graph(const EdgeList& e) {
  if (e.directed) throw ParseError("expected an undirected edge list, found arcs");
  return make_graph(e.n, e.pairs);
}

inline Digraph to_digraph(const EdgeList& e) {
  if (!e.directed && !e.pairs.empty()) throw ParseError("expected arcs `u > v`, found undirected edges");
  std::vector<Arc> arcs;
  for (auto [t, h] : e.pairs) arcs.push_back({t, h});
  return make_digraph(e.n, std::move(arcs));
}

inline Graph read_graph(std::istream& in) { return to_graph(parse_edge_list(in)); }
inline Digraph read_digraph(std::istream& in) { return to_digraph(parse_edge_list(in)); }

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const auto& a : d.arcs()) out << a.tail << " > " << a.head << '\n';
}

/// Table file: first line `q`, then q rows of q integers.
inline std::vector<std::vector<int>> parse_cayley_rows(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError("empty table file");
  auto header = detail::split_ws(line);
  if (header.size() != 1) throw ParseError("line " + std::to_string(lineno) + ": expected `q`");
  const std::size_t q = detail::parse_count(header[0], lineno);
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < q; ++i) {
    if (!detail::next_content_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(q) + " table rows, found " + std::to_string(i));
    }
    std::vector<int> row;
    for (const auto& tok : detail::split_ws(line)) {
      row.push_back(static_cast<int>(detail::parse_count(tok, lineno)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CayleyTable read_cayley_table(std::istream& in) {
  auto rows = parse_cayley_rows(in);
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ParseError("table row length differs from q");
  }
  if (!validate_latin(rows)) throw ParseError("table is not a Latin square");
  return CayleyTable(std::move(rows));
}

inline void write_cayley_table(std::ostream& out, const CayleyTable& t) {
  out << t.order() << '\n';
  for (const auto& r : t.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  }
}

}  // namespace cordial
