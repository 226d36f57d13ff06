#include <gtest/gtest.h>

#include "support.hpp"

using namespace betti;
using betti::testing::diagram_of;

TEST(PathBetti, Examples) {
  EXPECT_EQ(path_betti(6, 2, 1, 4), 15);
  EXPECT_EQ(path_betti(6, 2, 2, 6), 8);
  EXPECT_EQ(path_betti(6, 4, 5, 12), 1);
  EXPECT_EQ(path_betti(4, 1, 2, 3), 2);
  EXPECT_EQ(path_betti(6, 1, 0, 0), 1);
  EXPECT_EQ(path_betti(6, 1, 0, 2), 0);
}

TEST(PathBetti, RejectsBadParameters) {
  EXPECT_THROW(path_betti(1, 1, 0, 0), Error);
  EXPECT_THROW(path_betti(4, 0, 0, 0), Error);
  EXPECT_THROW(path_betti(4, 1, -1, 0), Error);
}

TEST(PathDiagram, SmallCases) {
  EXPECT_EQ(path_diagram(4, 1), diagram_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  EXPECT_EQ(path_diagram(2, 3), diagram_of({{0, 0, 1}, {1, 6, 1}}));
}

TEST(PathDiagram, SixVariablesMatchesTableExpressions) {
  for (long long k = 1; k <= 6; ++k) {
    const int kk = static_cast<int>(k);
    BettiDiagram expected;
    expected.set(0, 0, 1);
    expected.set(1, 2 * kk, Rational(binom(k + 4, 4)));
    expected.set(2, 2 * kk + 1, Rational(4 * binom(k + 3, 4)));
    expected.set(3, 2 * kk + 2, Rational(6 * binom(k + 2, 4)));
    expected.set(4, 2 * kk + 3, Rational(4 * binom(k + 1, 4)));
    expected.set(5, 2 * kk + 4, Rational(binom(k, 4)));
    expected.set(2, 2 * kk + 2, Rational(k * (k + 2)));
    expected.set(3, 2 * kk + 3, Rational(2 * k * (k + 1)));
    expected.set(4, 2 * kk + 4, Rational(k * k));
    EXPECT_EQ(path_diagram(6, kk), expected) << "k = " << k;
  }
}

TEST(PathFamily, Recognition) {
  EXPECT_EQ(path_family_size(path_ideal(5)), 5);
  EXPECT_EQ(path_family_size(parse_ideal("x1*x2, x2*x3", 3)), 3);
  EXPECT_EQ(path_family_size(parse_ideal("x1*x2, x3*x4", 4)), std::nullopt);
  EXPECT_EQ(path_family_size(parse_ideal("x1*x2, x2*x3", 4)), std::nullopt);
  EXPECT_THROW(path_ideal(1), Error);
}

TEST(PathDiagram, EulerCharacteristicVanishes) {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k <= 6; ++k) {
      Rational alternating = 0;
      const auto sums = column_sums(path_diagram(n, k));
      for (std::size_t i = 0; i < sums.size(); ++i) alternating += i % 2 ? Rational(-sums[i]) : sums[i];
      EXPECT_EQ(alternating, 0) << n << " " << k;
    }
  }
}
