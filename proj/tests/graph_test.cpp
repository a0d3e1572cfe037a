#include <algorithm>

#include <gtest/gtest.h>

#include "cordial/graph.hpp"
#include "cordial/named.hpp"

namespace cordial {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST(MakeGraph, CanonicalizesPairs) {
  const auto g = make_graph(2, Pairs{{1, 0}});
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
}

TEST(MakeGraph, SortsEdgesLexicographically) {
  const auto g = make_graph(4, Pairs{{3, 2}, {0, 3}, {1, 0}, {2, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {2, 3}}));
}

TEST(MakeGraph, IdempotentOnOwnOutput) {
  const auto g = petersen_graph();
  EXPECT_EQ(make_graph(g.vertex_count(), g.edges()), g);
}

TEST(MakeGraph, RejectsLoop) { EXPECT_THROW(make_graph(3, Pairs{{0, 0}}), GraphError); }

TEST(MakeGraph, RejectsDuplicateInEitherOrder) {
  EXPECT_THROW(make_graph(3, Pairs{{0, 1}, {1, 0}}), GraphError);
}

TEST(MakeGraph, RejectsOutOfRange) { EXPECT_THROW(make_graph(3, Pairs{{0, 3}}), GraphError); }

TEST(MakeDigraph, RejectsDigon) {
  EXPECT_THROW(make_digraph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(make_digraph(2, {{1, 1}}), GraphError);
}

TEST(Orient, AllForwardOnP4) {
  const auto d = orient(path_graph(4), Orientation::from_string("000"));
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Orient, AlternatingBitsGiveAlternatingPath) {
  const auto d = orient(path_graph(10), Orientation::from_string("010101010"));
  EXPECT_EQ(d, alternating_path(10));
  EXPECT_EQ(d.arcs()[0], (Arc{0, 1}));
  EXPECT_EQ(d.arcs()[1], (Arc{2, 1}));
  EXPECT_EQ(d.arcs()[2], (Arc{2, 3}));
}

TEST(Orient, LengthMismatchThrows) {
  EXPECT_THROW(orient(path_graph(4), Orientation::from_string("00")), GraphError);
}

TEST(Orient, OneArcPerEdgeNoDigon) {
  const auto g = complete_graph(5);
  for (std::uint64_t bits = 0; bits < 1024; bits += 37) {
    const auto d = orient(g, Orientation::from_mask(10, bits));
    ASSERT_EQ(d.arc_count(), g.edge_count());
    EXPECT_EQ(underlying_graph(d), g);
  }
}

TEST(Reverse, FlipsAndIsInvolution) {
  const auto d = make_digraph(2, {{0, 1}});
  EXPECT_EQ(reverse(d).arcs(), (std::vector<Arc>{{1, 0}}));
  const auto fig = alternating_path(10);
  EXPECT_EQ(reverse(reverse(fig)), fig);
  EXPECT_EQ(reverse(fig).arcs()[0], (Arc{1, 0}));
  EXPECT_EQ(reverse(fig).arcs()[1], (Arc{1, 2}));
}

TEST(Named, Petersen) {
  const auto p = petersen_graph();
  EXPECT_EQ(p.vertex_count(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  for (auto deg : p.degrees()) EXPECT_EQ(deg, 3u);
}

TEST(Named, CounterexampleTree) {
  const auto t = counterexample_tree();
  EXPECT_EQ(t.vertex_count(), 10u);
  EXPECT_EQ(t.edge_count(), 9u);
  const auto deg = t.degrees();
  EXPECT_EQ(*std::max_element(deg.begin(), deg.end()), 3u);
  EXPECT_EQ(std::count(deg.begin(), deg.end(), 3u), 4);
}

TEST(Named, AlternatingPathDegrees) {
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto d = alternating_path(n);
    std::vector<int> in(n, 0), out(n, 0);
    for (const auto& a : d.arcs()) {
      ++out[a.tail];
      ++in[a.head];
    }
    std::size_t sources = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (out[v] >= 1 && in[v] == 0) ++sources;
      if (v % 2 == 1 && v + 1 < n) {
        EXPECT_EQ(in[v], 2) << "n=" << n << " v=" << v;
      }
    }
    EXPECT_EQ(sources, n / 2);  // ceil((n-1)/2) for even n
  }
}

TEST(Named, AlternatingPathRejectsOdd) {
  EXPECT_THROW(alternating_path(7), GraphError);
  EXPECT_THROW(named("alternating_path", 7), GraphError);
}

TEST(Named, Lookup) {
  EXPECT_EQ(std::get<Graph>(named("path", 5)), path_graph(5));
  EXPECT_EQ(std::get<Graph>(named("complete", 4)).edge_count(), 6u);
  EXPECT_EQ(std::get<Digraph>(named("alternating_path", 10)), alternating_path(10));
  EXPECT_THROW(named("path"), GraphError);
  EXPECT_THROW(named("heawood"), GraphError);
}

TEST(Named, TightBound) {
  const auto g = tight_bound_graph(6);
  EXPECT_EQ(g.edge_count(), 14u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(tight_bound_graph(7).edge_count(), 18u);
  EXPECT_THROW(tight_bound_graph(2), GraphError);
}

}  // namespace
}  // namespace cordial
