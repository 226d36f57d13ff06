#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace betti;
using betti::testing::diagram_of;
using betti::testing::ideal_of;

TEST(StrandHomology, Examples) {
  EXPECT_EQ(strand_homology(ideal_of(2, {{1, 0}, {0, 1}}), {1, 1}), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(strand_homology(path_ideal(4), {1, 1, 1, 1}), (std::vector<std::size_t>(5, 0)));
  // indices count homological degree in the resolution of S/I
  EXPECT_EQ(strand_homology(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}}), {2, 1}), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(strand_homology(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}}), {1, 1}), (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(strand_homology(path_ideal(4), {0, 0, 0, 0}), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(StrandHomology, RejectsBadMultidegree) {
  EXPECT_THROW(strand_homology(path_ideal(4), {1, 1}), Error);
  EXPECT_THROW(strand_homology(path_ideal(4), {1, -1, 0, 0}), Error);
}

TEST(BettiOracle, Examples) {
  EXPECT_EQ(betti_oracle(ideal_of(2, {{1, 0}, {0, 1}})), diagram_of({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  EXPECT_EQ(betti_oracle(path_ideal(4)), diagram_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  EXPECT_EQ(betti_oracle(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}})), diagram_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
}

TEST(BettiOracle, PrincipalIdeal) {
  for (int e = 1; e <= 4; ++e) {
    const auto ideal = ideal_of(3, {{e, 0, 2}});
    EXPECT_EQ(betti_oracle(ideal), diagram_of({{0, 0, 1}, {1, e + 2, 1}}));
  }
}

TEST(BettiOracle, BoundaryComposesToZero) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> expo(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    for (int g = 0; g < 3; ++g) gens.emplace_back(std::vector<int>{expo(rng), expo(rng), expo(rng), expo(rng) + 1});
    const auto ideal = MonomialIdeal::from_generators(4, gens);
    for (const auto& a : candidate_multidegrees(ideal, {})) {
      const auto strand = build_strand(ideal, a);
      for (std::size_t i = 2; i < strand.boundary.size(); ++i) {
        const auto& lo = strand.boundary[i - 1];
        const auto& hi = strand.boundary[i];
        if (!lo.rows() || !lo.cols() || !hi.cols()) continue;
        for (std::size_t r = 0; r < lo.rows(); ++r) {
          for (std::size_t c = 0; c < hi.cols(); ++c) {
            BigInt acc = 0;
            for (std::size_t m = 0; m < lo.cols(); ++m) acc += lo(r, m) * hi(m, c);
            ASSERT_EQ(acc, 0);
          }
        }
      }
    }
  }
}

TEST(BettiOracle, EulerCharacteristicMatchesStrandDimensions) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> expo(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    for (int g = 0; g < 3; ++g) gens.emplace_back(std::vector<int>{expo(rng), expo(rng) + 1, expo(rng)});
    const auto ideal = MonomialIdeal::from_generators(3, gens);
    for (const auto& a : candidate_multidegrees(ideal, {.degree_bound = std::nullopt, .lcm_filter = false})) {
      const auto strand = build_strand(ideal, a);
      const auto homology = strand_homology(strand);
      long chain = 0;
      long betti_sum = 0;
      for (std::size_t i = 0; i < homology.size(); ++i) {
        const long sign = i % 2 ? -1 : 1;
        chain += sign * static_cast<long>(strand.basis[i].size());
        betti_sum += sign * static_cast<long>(homology[i]);
      }
      EXPECT_EQ(chain, betti_sum);
    }
  }
}

TEST(BettiOracle, FilterDoesNotChangeResult) {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> expo(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Monomial> gens;
    for (int g = 0; g < 4; ++g) gens.emplace_back(std::vector<int>{expo(rng), expo(rng), expo(rng) + 1});
    const auto ideal = MonomialIdeal::from_generators(3, gens);
    OracleOptions unfiltered;
    unfiltered.lcm_filter = false;
    const auto filtered = betti_oracle(ideal);
    EXPECT_EQ(filtered, betti_oracle(ideal, unfiltered));
    EXPECT_TRUE(validate_cyclic(filtered));
  }
}

TEST(BettiOracle, DegreeBoundTruncates) {
  const auto ideal = power(path_ideal(4), 2);
  OracleOptions bounded;
  bounded.degree_bound = 4;
  const auto d = betti_oracle(ideal, bounded);
  for (const auto& [pos, v] : d.entries()) EXPECT_LE(pos.j, 4);
  EXPECT_EQ(d.get(1, 4), 6);
}

TEST(BettiOracle, ThreadCountDoesNotChangeResult) {
  const auto ideal = power(path_ideal(5), 2);
  OracleOptions serial;
  OracleOptions parallel;
  parallel.threads = 4;
  EXPECT_EQ(betti_oracle(ideal, serial), betti_oracle(ideal, parallel));
}
