#include <gtest/gtest.h>

#include "cordial/search.hpp"
#include "cordial/verify/oracles.hpp"

namespace cordial {
namespace {

TEST(FriendlyLabelings, Counts) {
  EXPECT_EQ(friendly_labelings(4).count(), 6u);
  EXPECT_EQ(friendly_labelings(5).count(), 20u);
  EXPECT_EQ(friendly_labelings(10, true).count(), 126u);
  EXPECT_EQ(friendly_labelings(1).count(), 2u);
  EXPECT_EQ(friendly_labelings(1, true).count(), 1u);
}

TEST(FriendlyLabelings, CountFormula) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto expected = n % 2 == 0
                              ? detail::binomial(n, n / 2)
                              : detail::binomial(n, n / 2) + detail::binomial(n, (n + 1) / 2);
    EXPECT_EQ(friendly_labelings(n).count(), expected) << n;
  }
}

TEST(FriendlyLabelings, AscendingAndMatchesFilter) {
  for (std::size_t n = 1; n <= 11; ++n) {
    std::vector<std::uint64_t> got;
    for (const auto& l : friendly_labelings(n)) got.push_back(l.to_mask());
    std::vector<std::uint64_t> expected;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (oracle::friendly(oracle::labels_of(m, n))) expected.push_back(m);
    }
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(FriendlyLabelings, FixedFirstLabelPinsVertexZero) {
  for (const auto& l : friendly_labelings(9, true)) EXPECT_EQ(l[0], 0);
}

TEST(Orientations, Counts) {
  EXPECT_EQ(orientations(path_graph(10), true).count(), 256u);
  EXPECT_EQ(orientations(path_graph(4)).count(), 8u);
  const auto empty = make_graph(3, std::vector<Edge>{});
  EXPECT_EQ(orientations(empty).count(), 1u);
  EXPECT_EQ(orientations(empty, true).count(), 1u);
  std::size_t seen = 0;
  for (const auto& o : orientations(path_graph(4), true)) {
    EXPECT_FALSE(o.reversed(0));
    ++seen;
  }
  EXPECT_EQ(seen, 4u);
}

TEST(NoncordialOrientations, P10ExactlyAlternatingPair) {
  const auto r = noncordial_orientations(path_graph(10), SymmetryMode::none, "path 10");
  EXPECT_EQ(r.total_orientations_scanned, 512u);
  ASSERT_EQ(r.noncordial.size(), 2u);
  EXPECT_EQ(r.noncordial[0].to_string(), "010101010");
  EXPECT_EQ(r.noncordial[1].to_string(), "101010101");
  for (const auto& o : r.noncordial) EXPECT_FALSE(is_cordial(orient(path_graph(10), o)));
}

TEST(NoncordialOrientations, P4) {
  const auto r = noncordial_orientations(path_graph(4), SymmetryMode::none);
  std::vector<std::string> bits;
  for (const auto& o : r.noncordial) bits.push_back(o.to_string());
  // Ascending as integers with edge 0 as the low bit.
  EXPECT_EQ(bits, (std::vector<std::string>{"100", "110", "001", "011"}));
}

TEST(NoncordialOrientations, P6Empty) {
  EXPECT_TRUE(noncordial_orientations(path_graph(6), SymmetryMode::none).noncordial.empty());
}

TEST(NoncordialOrientations, FixedFirstArcIsSubset) {
  for (std::size_t n : {4u, 10u}) {
    const auto full = noncordial_orientations(path_graph(n), SymmetryMode::none);
    const auto fixed = noncordial_orientations(path_graph(n), SymmetryMode::fix_first_arc);
    std::vector<Orientation> expected;
    for (const auto& o : full.noncordial)
      if (!o.reversed(0)) expected.push_back(o);
    EXPECT_EQ(fixed.noncordial, expected);
    // closed under full reversal
    for (const auto& o : full.noncordial) {
      BitVector flipped(o.size());
      for (std::size_t j = 0; j < o.size(); ++j) flipped.set(j, !o.reversed(j));
      EXPECT_NE(std::find(full.noncordial.begin(), full.noncordial.end(), Orientation(flipped)),
                full.noncordial.end());
    }
  }
}

TEST(NoncordialOrientations, IndependentOfJobsAndLabelMode) {
  const auto g = complete_graph(4);
  const auto base = noncordial_orientations(g, SymmetryMode::none, "", 1);
  for (unsigned jobs : {2u, 3u, 5u}) {
    EXPECT_EQ(noncordial_orientations(g, SymmetryMode::none, "", jobs).noncordial, base.noncordial);
  }
  EXPECT_EQ(noncordial_orientations(g, SymmetryMode::fix_first_label, "", 4).noncordial,
            base.noncordial);
}

TEST(ScanAlternating, SmallRanges) {
  EXPECT_EQ(scan_alternating_paths(10), std::vector<std::size_t>{10});
  EXPECT_TRUE(scan_alternating_paths(8).empty());
  EXPECT_THROW(scan_alternating_paths(9), GraphError);
}

TEST(ScanAlternating, UpTo22) {
  EXPECT_EQ(scan_alternating_paths(22), (std::vector<std::size_t>{10, 22}));
}

TEST(TournamentSurvey, SmallOrders) {
  EXPECT_EQ(tournament_survey(3).noncordial_count, 0u);
  const auto t4 = tournament_survey(4);
  EXPECT_EQ(t4.total, 64u);
  EXPECT_EQ(t4.noncordial_count, 16u);
  const auto t5 = tournament_survey(5, 2);
  EXPECT_EQ(t5.total, 1024u);
  EXPECT_EQ(t5.noncordial_count, 0u);
  EXPECT_THROW(tournament_survey(7), GraphError);
  EXPECT_THROW(tournament_survey(0), GraphError);
}

}  // namespace
}  // namespace cordial
