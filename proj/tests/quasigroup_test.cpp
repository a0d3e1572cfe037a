#include <random>

#include <gtest/gtest.h>

#include "cordial/engine.hpp"
#include "cordial/named.hpp"
#include "cordial/quasigroup.hpp"
#include "cordial/verify/acceptance.hpp"
#include "cordial/verify/oracles.hpp"

namespace cordial {
namespace {

TEST(ValidateLatin, GroupsAccepted) {
  EXPECT_TRUE(validate_latin(cyclic_group(3).rows()));
  for (const auto& t : acceptance::small_group_tables()) EXPECT_TRUE(validate_latin(t.rows()));
}

TEST(ValidateLatin, RepeatedEntryRejected) {
  EXPECT_FALSE(validate_latin({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}));
  EXPECT_FALSE(validate_latin({{0, 3}, {1, 0}}));
}

TEST(ValidateLatin, RaggedThrows) {
  EXPECT_THROW(validate_latin({{0, 1}, {1}}), GraphError);
}

TEST(ValidateLatin, SingleSwapRejected) {
  for (const auto& t : acceptance::small_group_tables()) {
    for (std::size_t r = 0; r < t.order(); ++r) {
      for (std::size_t a = 0; a + 1 < t.order(); ++a) {
        auto rows = t.rows();
        std::swap(rows[r][a], rows[r][a + 1]);
        EXPECT_FALSE(validate_latin(rows));
      }
    }
  }
}

TEST(Z3Minus, TableAndNames) {
  const auto inst = z3_minus_instance();
  EXPECT_TRUE(validate_latin(inst.table.rows()));
  EXPECT_EQ(inst.table.op(0, 1), 1);
  EXPECT_EQ(inst.table.name(1), "+1");
  EXPECT_EQ(inst.table.op(1, 1), 0);
  EXPECT_EQ(inst.table.op(1, 0), 2);
  EXPECT_EQ(inst.table.name(2), "-1");
  EXPECT_FALSE(inst.table.is_commutative());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) EXPECT_EQ(z3_signed(inst.table.op(x, y)), arc_label(x, y));
}

TEST(CordialInstance, RejectsBadSubsets) {
  EXPECT_THROW(CordialInstance(cyclic_group(3), {}), GraphError);
  EXPECT_THROW(CordialInstance(cyclic_group(3), {0, 3}), GraphError);
  EXPECT_THROW(CordialInstance(cyclic_group(3), {1, 1}), GraphError);
  EXPECT_THROW(CayleyTable({{0, 0}, {1, 1}}), GraphError);
}

TEST(SubsetQCordial, SingleArc) {
  const auto w = is_subset_q_cordial(make_digraph(2, {{0, 1}}), z3_minus_instance());
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<int>{0, 1}));
}

TEST(SubsetQCordial, AlternatingTenPath) {
  EXPECT_FALSE(is_subset_q_cordial(alternating_path(10), z3_minus_instance()));
}

TEST(SubsetQCordial, MatchesEngineOnRandomDigraphs) {
  std::mt19937_64 rng(21);
  const auto inst = z3_minus_instance();
  for (int i = 0; i < 200; ++i) {
    const auto d = oracle::random_digraph(1 + rng() % 8, rng);
    const auto w = is_subset_q_cordial(d, inst);
    ASSERT_EQ(w.has_value(), is_cordial(d).has_value());
    if (w) {
      const auto l = VertexLabeling::from_labels(*w);
      EXPECT_TRUE(is_friendly(l));
      EXPECT_TRUE(is_balanced_triple(gamma_triple(d, l)));
    }
  }
}

// Balance over Q for the z3-minus instance is the pairwise condition on
// (alpha, beta, gamma): arc counts per element are (gamma, alpha, beta).
TEST(SubsetQCordial, ArcBalanceMatchesTriple) {
  const auto inst = z3_minus_instance();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto n = 1 + rng() % 8;
    const auto d = oracle::random_digraph(n, rng);
    const auto l = oracle::random_labeling(n, rng);
    std::vector<std::size_t> counts(3, 0);
    for (const auto& a : d.arcs()) ++counts[inst.table.op(l[a.tail], l[a.head])];
    const auto t = gamma_triple(d, l);
    EXPECT_EQ(counts, (std::vector<std::size_t>{t.gamma_zero, t.alpha, t.beta}));
  }
}

TEST(SubsetQCordial, ThreeLabelSubset) {
  // Z3 labels on a directed triangle 0->1->2->0 with op = addition.
  const CordialInstance inst(cyclic_group(3), {0, 1, 2});
  const auto d = make_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto w = is_subset_q_cordial(d, inst);
  ASSERT_TRUE(w);
  std::vector<int> sorted = *w;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2}));
}

TEST(ACordial, P3WithZ2) {
  const auto w = is_a_cordial(path_graph(3), cyclic_group(2));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<int>{0, 0, 1}));
}

TEST(ACordial, SingleVertex) {
  const auto w = is_a_cordial(path_graph(1), cyclic_group(2));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->size(), 1u);
}

TEST(ACordial, NonAbelianRejected) {
  EXPECT_THROW(is_a_cordial(path_graph(3), z3_minus_instance().table), GraphError);
}

}  // namespace
}  // namespace cordial
