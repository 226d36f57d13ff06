#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace betti;
using betti::testing::diagram_of;

namespace {

DecompositionPolytope solved(const BettiDiagram& d, unsigned threads = 1) {
  return enumerate_vertices(build_polytope(d, candidate_degree_sequences(d)), threads);
}

}  // namespace

TEST(GreedyDecompose, PureInputs) {
  const auto d023 = pure_diagram(DegreeSequence({0, 2, 3})).to_diagram();
  const auto g = greedy_decompose(d023);
  ASSERT_EQ(g.terms.size(), 1u);
  EXPECT_EQ(g.terms[0].weight, 1);
  EXPECT_EQ(g.terms[0].sequence, DegreeSequence({0, 2, 3}));

  const auto twice = greedy_decompose(pure_diagram(DegreeSequence({0, 1, 2})).to_diagram(2));
  ASSERT_EQ(twice.terms.size(), 1u);
  EXPECT_EQ(twice.terms[0].weight, 2);
  EXPECT_EQ(twice.terms[0].sequence, DegreeSequence({0, 1, 2}));
}

TEST(GreedyDecompose, PathFiveFirstStep) {
  const auto d = path_diagram(5, 1);
  const auto g = greedy_decompose(d);
  ASSERT_GE(g.terms.size(), 2u);
  EXPECT_EQ(g.terms[0].sequence, DegreeSequence({0, 2, 3, 5}));
  EXPECT_EQ(g.terms[0].weight, Rational(3, 5));
  EXPECT_EQ(g.reconstruct(), d);
  EXPECT_TRUE(verify_decomposition(d, g));
}

TEST(GreedyDecompose, RejectsDiagramsOutsideCone) {
  EXPECT_THROW(greedy_decompose(BettiDiagram()), Error);
  try {
    greedy_decompose(diagram_of({{1, 2, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInCone);
  }
  try {
    greedy_decompose(diagram_of({{0, 0, 1}, {1, 3, 1}, {2, 3, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInCone);
  }
}

TEST(GreedyDecompose, RandomConeElementsReconstruct) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = betti::testing::random_pure_combination(rng, 4, 5, 10);
    const auto g = greedy_decompose(d);
    EXPECT_EQ(g.reconstruct(), d);
    for (const auto& t : g.terms) EXPECT_GT(t.weight, 0);
    // chain condition: successive sequences strictly increase termwise
    for (std::size_t t = 1; t < g.terms.size(); ++t) {
      const auto& a = g.terms[t - 1].sequence;
      const auto& b = g.terms[t].sequence;
      const std::size_t common = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < common; ++i) EXPECT_LE(a[i], b[i]);
    }
  }
}

TEST(CandidateSequences, Examples) {
  const auto small = candidate_degree_sequences(diagram_of({{0, 0, 1}, {1, 2, 1}, {2, 3, 1}}));
  EXPECT_EQ(small, (std::vector<DegreeSequence>{DegreeSequence({0, 2}), DegreeSequence({0, 2, 3})}));
  EXPECT_TRUE(candidate_degree_sequences(diagram_of({{0, 0, 1}})).empty());
  for (int k = 4; k <= 6; ++k) EXPECT_EQ(candidate_degree_sequences(path_diagram(6, k)).size(), 11u);
  try {
    candidate_degree_sequences(diagram_of({{0, 0, 2}, {1, 2, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCyclic);
  }
}

TEST(BuildPolytope, ConstraintSystems) {
  const auto d = pure_diagram(DegreeSequence({0, 2, 3})).to_diagram();
  const auto p = build_polytope(d, {DegreeSequence({0, 2}), DegreeSequence({0, 2, 3})});
  EXPECT_EQ(p.constraints, RationalMatrix::from_rows({{1, 1}, {1, 3}, {0, 2}}));
  EXPECT_EQ(p.rhs, (RationalVector{1, 3, 2}));

  const auto q = build_polytope(pure_diagram(DegreeSequence({0, 1, 2})).to_diagram(), {DegreeSequence({0, 1, 2})});
  EXPECT_EQ(q.constraints, RationalMatrix::from_rows({{1}, {2}, {1}}));
  EXPECT_EQ(q.rhs, (RationalVector{1, 2, 1}));

  const auto path = path_diagram(6, 4);
  const auto big = build_polytope(path, candidate_degree_sequences(path));
  EXPECT_EQ(big.constraints.rows(), 9u);
  EXPECT_EQ(big.constraints.cols(), 11u);
  EXPECT_THROW(build_polytope(path, {}), Error);
}

TEST(EnumerateVertices, Segment) {
  // w1 + w2 = 1: two single-column sequences that share their only position
  DecompositionPolytope segment;
  segment.candidates = {DegreeSequence({0}), DegreeSequence({0, 1})};
  segment.constraints = RationalMatrix::from_rows({{1, 1}});
  segment.rhs = {1};
  segment.rank = 1;
  const auto solved_segment = enumerate_vertices(segment);
  EXPECT_EQ(solved_segment.vertices, (std::vector<RationalVector>{{0, 1}, {1, 0}}));
}

TEST(EnumerateVertices, PureDiagramHasSingleVertex) {
  const auto p = solved(pure_diagram(DegreeSequence({0, 2, 3})).to_diagram());
  EXPECT_EQ(p.vertices, (std::vector<RationalVector>{{0, 1}}));
  const auto pruned = prune(p);
  EXPECT_EQ(pruned.coordinate_count(), 1u);
  EXPECT_EQ(pruned.candidates, (std::vector<DegreeSequence>{DegreeSequence({0, 2, 3})}));
  EXPECT_EQ(pruned.vertices, (std::vector<RationalVector>{{1}}));
}

TEST(EnumerateVertices, PathSixTriangle) {
  const auto d = path_diagram(6, 4);
  const auto p = solved(d);
  EXPECT_EQ(p.rank, 8u);
  EXPECT_EQ(p.vertices.size(), 3u);
  const auto pruned = prune(p);
  EXPECT_EQ(pruned.coordinate_count(), 8u);
  EXPECT_EQ(pruned.dimension(), 2u);
  const std::vector<RationalVector> expected{
      {0, Rational(43, 330), Rational(1, 330), Rational(13, 90), 0, Rational(35, 198), Rational(6, 11), 0},
      {0, Rational(43, 330), Rational(1, 330), Rational(13, 90), Rational(20, 33), Rational(5, 198), 0, Rational(1, 11)},
      {Rational(2, 3), Rational(43, 330), Rational(1, 330), Rational(1, 30), 0, Rational(5, 66), 0, Rational(1, 11)},
  };
  EXPECT_EQ(pruned.vertices, expected);
  for (const auto& v : pruned.vertices) EXPECT_TRUE(verify_decomposition(d, v, pruned.candidates));
}

TEST(Prune, IdempotentAndKeepsUsedCoordinates) {
  const auto once = prune(solved(path_diagram(6, 5)));
  EXPECT_EQ(prune(once), once);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = betti::testing::normalized(betti::testing::random_pure_combination(rng, 3, 4, 7));
    const auto p = prune(solved(d));
    EXPECT_EQ(prune(p), p);
    for (std::size_t c = 0; c < p.coordinate_count(); ++c) {
      bool used = false;
      for (const auto& v : p.vertices) used = used || v[c] != 0;
      EXPECT_TRUE(used);
    }
    for (const auto& v : p.vertices) EXPECT_TRUE(verify_decomposition(d, v, p.candidates));
  }
}

TEST(VerifyDecomposition, DetectsPerturbation) {
  const auto d = path_diagram(5, 1);
  const auto g = greedy_decompose(d);
  EXPECT_TRUE(verify_decomposition(d, g));
  auto perturbed = g;
  perturbed.terms[0].weight += Rational(1, 1000000);
  EXPECT_FALSE(verify_decomposition(d, perturbed));
  RationalVector negative{-1, 2};
  EXPECT_FALSE(verify_decomposition(pure_diagram(DegreeSequence({0, 2, 3})).to_diagram(), negative,
                                    {DegreeSequence({0, 2}), DegreeSequence({0, 2, 3})}));
}

TEST(EnumerateVertices, ThreadCountDoesNotChangeResult) {
  const auto d = path_diagram(6, 5);
  EXPECT_EQ(solved(d, 1), solved(d, 4));
}
