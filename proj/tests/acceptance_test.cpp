#include <cstdlib>
#include <iostream>

#include <gtest/gtest.h>

#include "cordial/verify/acceptance.hpp"

namespace cordial::acceptance {
namespace {

unsigned jobs() {
  const char* env = std::getenv("CORDIAL_JOBS");
  return env ? static_cast<unsigned>(std::max(1, std::atoi(env))) : 1u;
}

void report(const CriterionResult& r) {
  std::cout << format_line(r) << std::endl;
  EXPECT_TRUE(r.correct) << r.detail;
  EXPECT_LT(r.seconds, r.limit_seconds) << "criterion " << r.id << " over its time limit";
}

TEST(Acceptance, C01_AlternatingTenPath) { report(alternating_ten_path()); }
TEST(Acceptance, C02_PathTenOrientations) { report(path_ten_orientations(jobs())); }
TEST(Acceptance, C03_PathLandscape) { report(path_landscape(jobs())); }
TEST(Acceptance, C04_DegreeThreeTree) { report(degree_three_tree()); }
TEST(Acceptance, C05_PetersenNotOrientable) { report(petersen_not_orientable()); }
TEST(Acceptance, C06_LambdaCharacterization) { report(lambda_characterization()); }
TEST(Acceptance, C07_EdgeBound) { report(edge_bound(jobs())); }
TEST(Acceptance, C08_Tournaments) { report(tournaments(jobs())); }
TEST(Acceptance, C09_ReversalComplementSymmetries) { report(reversal_complement_symmetries()); }
TEST(Acceptance, C10_QuasigroupEquivalence) { report(quasigroup_equivalence()); }
TEST(Acceptance, C11_DpVersusExhaustive) { report(dp_vs_exhaustive()); }

}  // namespace
}  // namespace cordial::acceptance

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
