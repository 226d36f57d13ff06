#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace betti;
using betti::testing::ideal_of;

TEST(ParseIdeal, Examples) {
  EXPECT_EQ(parse_ideal("x1*x2, x2*x3", 3), ideal_of(3, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(parse_ideal("x1^2, x1*x2, x1^3", 2), ideal_of(2, {{2, 0}, {1, 1}}));
  const auto path = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6", 6);
  EXPECT_EQ(path.generators().size(), 5u);
  EXPECT_EQ(path, path_ideal(6));
}

TEST(ParseIdeal, AcceptsWhitespaceRepeatsAndUnit) {
  EXPECT_EQ(parse_ideal("  x2 * x1 ,x1*x1 ", 2), ideal_of(2, {{2, 0}, {1, 1}}));
  EXPECT_EQ(parse_ideal("x1, 1", 2), ideal_of(2, {{0, 0}}));
}

TEST(ParseIdeal, RejectsMalformedInput) {
  for (const char* bad : {"", "x1*", "x0", "x4", "y1", "x1^", "x1^-1", "x1,,x2", "x1**x2", "2*x1"}) {
    try {
      parse_ideal(bad, 3);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
  EXPECT_EQ(max_variable_index("x1*x12, x3"), 12u);
}

TEST(MonomialIdeal, GeneratorsAreMinimalAndSorted) {
  const auto ideal = ideal_of(3, {{0, 1, 1}, {1, 1, 0}, {1, 1, 1}, {0, 2, 2}});
  ASSERT_EQ(ideal.generators().size(), 2u);
  EXPECT_EQ(ideal.generators()[0], Monomial({1, 1, 0}));
  EXPECT_EQ(ideal.generators()[1], Monomial({0, 1, 1}));
  EXPECT_TRUE(ideal.contains(Monomial({1, 2, 1})));
  EXPECT_FALSE(ideal.contains(Monomial({1, 0, 1})));
  EXPECT_EQ(ideal.lcm(), Monomial({1, 1, 1}));
  EXPECT_EQ(to_string(ideal), "x1*x2, x2*x3");
}

TEST(MonomialIdeal, RejectsBadGenerators) {
  EXPECT_THROW(MonomialIdeal::from_generators(2, {}), Error);
  EXPECT_THROW(MonomialIdeal::from_generators(0, {Monomial(std::vector<int>{})}), Error);
  EXPECT_THROW(ideal_of(2, {{1, 0, 0}}), Error);
  EXPECT_THROW(Monomial({1, -1}), Error);
}

TEST(Power, Examples) {
  const auto i2 = ideal_of(3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(power(i2, 2), ideal_of(3, {{2, 2, 0}, {1, 2, 1}, {0, 2, 2}}));
  EXPECT_EQ(power(i2, 1), i2);
  const auto p4 = path_ideal(4);
  EXPECT_EQ(power(p4, 2), ideal_of(4, {{2, 2, 0, 0},
                                       {1, 2, 1, 0},
                                       {1, 1, 1, 1},
                                       {0, 2, 2, 0},
                                       {0, 1, 2, 1},
                                       {0, 0, 2, 2}}));
  EXPECT_THROW(power(p4, 0), Error);
}

TEST(Power, MultiplicativeAndMinimal) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> gens;
    const int c = count(rng);
    for (int g = 0; g < c; ++g) gens.emplace_back(std::vector<int>{expo(rng), expo(rng), expo(rng) + 1});
    const auto ideal = MonomialIdeal::from_generators(3, gens);
    EXPECT_EQ(MonomialIdeal::minimalize(ideal.generators()), ideal.generators());
    const auto sq = power(ideal, 2);
    // I^3 = I^2 * I
    std::vector<Monomial> products;
    for (const auto& a : sq.generators())
      for (const auto& b : ideal.generators()) products.push_back(a * b);
    EXPECT_EQ(power(ideal, 3), MonomialIdeal::from_generators(3, products));
    for (const auto& g : sq.generators()) EXPECT_TRUE(ideal.contains(g));
  }
}

TEST(Equigenerated, Examples) {
  EXPECT_EQ(is_equigenerated(path_ideal(6)), 2);
  EXPECT_EQ(is_equigenerated(ideal_of(2, {{1, 0}, {0, 2}})), std::nullopt);
  EXPECT_EQ(is_equigenerated(ideal_of(2, {{2, 2}})), 4);
}
