#pragma once

// Boij-Soderberg decompositions of a Betti diagram: the greedy elimination,
// and the polytope of every nonnegative weighting of the admissible pure
// diagrams.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "betti_stab/diagram.hpp"
#include "betti_stab/error.hpp"
#include "betti_stab/exact_arith.hpp"
#include "betti_stab/parallel.hpp"

namespace betti {

struct DecompositionTerm {
  Rational weight;
  DegreeSequence sequence;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;

  BettiDiagram reconstruct() const {
    BettiDiagram out;
    for (const auto& t : terms) {
      const auto pure = pure_diagram(t.sequence);
      for (std::size_t i = 0; i < pure.betti.size(); ++i)
        out.add(static_cast<int>(i), t.sequence[i], t.weight * pure.betti[i]);
    }
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Repeatedly strips the largest multiple of the pure diagram on the minimal
/// shifts d_i = min{j : beta_{i,j} != 0} of the leading nonzero columns.
inline Decomposition greedy_decompose(const BettiDiagram& diagram) {
  if (diagram.empty()) throw Error(ErrorKind::InvalidArgument, "cannot decompose the zero diagram");
  std::map<Position, Rational> residual(diagram.entries().begin(), diagram.entries().end());
  Decomposition out;
  while (!residual.empty()) {
    std::map<int, int> min_shift;
    for (const auto& [p, v] : residual) {
      auto [it, inserted] = min_shift.emplace(p.i, p.j);
      if (!inserted) it->second = std::min(it->second, p.j);
    }
    std::vector<int> shifts;
    for (int i = 0; min_shift.count(i); ++i) shifts.push_back(min_shift[i]);
    if (shifts.empty())
      throw Error(ErrorKind::NotInCone, "diagram not in the Boij-Soderberg cone: column 0 vanished before the rest");
    for (std::size_t i = 1; i < shifts.size(); ++i) {
      if (shifts[i] <= shifts[i - 1])
        throw Error(ErrorKind::NotInCone,
                    "diagram not in the Boij-Soderberg cone: minimal shifts are not strictly increasing");
    }
    const DegreeSequence d(shifts);
    const PureDiagram pure = pure_diagram(d);
    Rational scale = residual.at({0, d[0]}) / pure.betti[0];
    for (std::size_t i = 1; i < d.size(); ++i)
      scale = std::min(scale, residual.at({static_cast<int>(i), d[i]}) / pure.betti[i]);
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto it = residual.find({static_cast<int>(i), d[i]});
      it->second -= scale * pure.betti[i];
      if (it->second == 0) residual.erase(it);
    }
    out.terms.push_back({scale, d});
  }
  return out;
}

/// Every sequence 0 = d_0 < d_1 < ... < d_s (s >= 1) with each (i, d_i) in
/// the support, in lexicographic order. Nonnegativity forces any pure diagram
/// with positive weight to live inside the support.
inline std::vector<DegreeSequence> candidate_degree_sequences(const BettiDiagram& diagram) {
  if (!validate_cyclic(diagram))
    throw Error(ErrorKind::NotCyclic, "candidate enumeration needs the diagram of a cyclic quotient");
  std::map<int, std::vector<int>> columns;
  for (const auto& [p, v] : diagram.entries()) columns[p.i].push_back(p.j);

  std::vector<DegreeSequence> out;
  std::vector<int> chain{0};
  auto extend = [&](auto&& self) -> void {
    if (chain.size() >= 2) out.emplace_back(chain);
    const auto it = columns.find(static_cast<int>(chain.size()));
    if (it == columns.end()) return;
    for (int j : it->second) {
      if (j <= chain.back()) continue;
      chain.push_back(j);
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);
  std::sort(out.begin(), out.end());
  return out;
}

/// {w >= 0 : A w = b}: one row per support position of the source diagram,
/// one column per candidate pure diagram.
struct DecompositionPolytope {
  std::vector<DegreeSequence> candidates;
  std::vector<Position> rows;
  RationalMatrix constraints;
  RationalVector rhs;
  std::size_t rank = 0;
  bool vertices_enumerated = false;
  std::vector<RationalVector> vertices;  // lexicographically sorted

  std::size_t coordinate_count() const noexcept { return candidates.size(); }
  std::size_t dimension() const noexcept { return candidates.size() - rank; }

  friend bool operator==(const DecompositionPolytope&, const DecompositionPolytope&) = default;
};

inline RationalMatrix constraint_matrix(const std::vector<Position>& rows, const std::vector<DegreeSequence>& candidates) {
  std::map<Position, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  RationalMatrix a(rows.size(), candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto pure = pure_diagram(candidates[c]);
    for (std::size_t i = 0; i < pure.betti.size(); ++i) {
      const auto it = row_of.find({static_cast<int>(i), candidates[c][i]});
      if (it != row_of.end()) a(it->second, c) = pure.betti[i];
    }
  }
  return a;
}

inline DecompositionPolytope build_polytope(const BettiDiagram& diagram, std::vector<DegreeSequence> candidates) {
  if (candidates.empty()) throw Error(ErrorKind::InvalidArgument, "polytope needs at least one candidate");
  DecompositionPolytope p;
  p.candidates = std::move(candidates);
  p.rows = diagram.support();
  for (const auto& pos : p.rows) p.rhs.push_back(diagram.get(pos.i, pos.j));
  p.constraints = constraint_matrix(p.rows, p.candidates);
  p.rank = rank(p.constraints);
  return p;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    out.push_back(pick);
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) return out;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

/// Vertices as basic feasible solutions: for every set of rank(A) columns
/// with an invertible restriction, solve exactly and keep nonnegative
/// solutions. Empty iff the polytope is infeasible.
inline DecompositionPolytope enumerate_vertices(DecompositionPolytope p, unsigned threads = 1) {
  const auto subsets = detail::combinations(p.candidates.size(), p.rank);
  const auto trials = parallel_map(subsets.size(), threads, [&](std::size_t idx) -> std::optional<RationalVector> {
    const auto& cols = subsets[idx];
    const auto solution = solve_exact(p.constraints.select_columns(cols), p.rhs);
    if (!solution.particular || !solution.nullspace.empty()) return std::nullopt;
    RationalVector w(p.candidates.size(), Rational(0));
    for (std::size_t t = 0; t < cols.size(); ++t) {
      if ((*solution.particular)[t] < 0) return std::nullopt;
      w[cols[t]] = (*solution.particular)[t];
    }
    return w;
  });
  std::set<RationalVector> unique;
  for (const auto& t : trials) {
    if (t) unique.insert(*t);
  }
  p.vertices.assign(unique.begin(), unique.end());
  p.vertices_enumerated = true;
  return p;
}

/// Drops coordinates that vanish at every vertex. The polytope is bounded,
/// so it is the hull of its vertices and those weights are always zero.
inline DecompositionPolytope prune(const DecompositionPolytope& p) {
  if (!p.vertices_enumerated) throw Error(ErrorKind::InvalidArgument, "prune needs enumerated vertices");
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < p.candidates.size(); ++c) {
    if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](const RationalVector& v) { return v[c] != 0; }))
      keep.push_back(c);
  }
  DecompositionPolytope out;
  out.rows = p.rows;
  out.rhs = p.rhs;
  for (auto c : keep) out.candidates.push_back(p.candidates[c]);
  out.constraints = p.constraints.select_columns(keep);
  out.rank = rank(out.constraints);
  out.vertices_enumerated = true;
  for (const auto& v : p.vertices) {
    RationalVector projected;
    for (auto c : keep) projected.push_back(v[c]);
    out.vertices.push_back(std::move(projected));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

/// Exact check that sum_c w_c * pure(candidates[c]) == diagram with w >= 0.
inline bool verify_decomposition(const BettiDiagram& diagram, const RationalVector& weights,
                                 const std::vector<DegreeSequence>& candidates) {
  if (weights.size() != candidates.size())
    throw Error(ErrorKind::InvalidArgument, "weight and candidate counts differ");
  Decomposition d;
  for (std::size_t c = 0; c < weights.size(); ++c) {
    if (weights[c] < 0) return false;
    if (weights[c] != 0) d.terms.push_back({weights[c], candidates[c]});
  }
  return d.reconstruct() == diagram;
}

inline bool verify_decomposition(const BettiDiagram& diagram, const Decomposition& d) {
  RationalVector weights;
  std::vector<DegreeSequence> candidates;
  for (const auto& t : d.terms) {
    weights.push_back(t.weight);
    candidates.push_back(t.sequence);
  }
  return verify_decomposition(diagram, weights, candidates);
}

}  // namespace betti
