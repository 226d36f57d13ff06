#pragma once

// Brute-force multigraded Betti numbers of S/I for a monomial ideal I:
// beta_{i,a}(S/I) = dim H_i of the Koszul complex of S/I in multidegree a.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "betti_stab/diagram.hpp"
#include "betti_stab/exact_arith.hpp"
#include "betti_stab/monomial_ideal.hpp"
#include "betti_stab/parallel.hpp"

namespace betti {

/// Koszul complex of S/I restricted to one multidegree a. Basis elements in
/// homological degree i are the subsets sigma of the variables, |sigma| = i,
/// with a - e_sigma >= 0 and x^(a - e_sigma) not in I.
struct KoszulStrand {
  std::vector<int> multidegree;
  std::vector<std::vector<std::uint32_t>> basis;  // basis[i]: bitmasks, ascending
  /// boundary[i] maps degree i to degree i - 1 (rows: basis[i-1], cols:
  /// basis[i]); boundary[0] is empty.
  std::vector<IntMatrix> boundary;
};

/// Builds the strand with signs d(sigma) = sum_{l in sigma} (-1)^{#{t in sigma :
/// t < l}} (sigma \ l), dropping faces that fall outside the basis.
inline KoszulStrand build_strand(const MonomialIdeal& ideal, const std::vector<int>& a) {
  const std::size_t n = ideal.num_vars();
  if (a.size() != n) throw Error(ErrorKind::InvalidArgument, "multidegree length does not match variable count");
  if (n > 31) throw Error(ErrorKind::InvalidArgument, "Koszul strands support at most 31 variables");
  for (int e : a) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "multidegree must be componentwise nonnegative");
  }

  KoszulStrand strand;
  strand.multidegree = a;
  strand.basis.resize(n + 1);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t sigma = 0; sigma <= full; ++sigma) {
    std::vector<int> rest(a);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (sigma >> v & 1u) ok = --rest[v] >= 0;
    }
    if (!ok || ideal.contains(Monomial(std::move(rest)))) continue;
    strand.basis[static_cast<std::size_t>(std::popcount(sigma))].push_back(sigma);
  }

  strand.boundary.resize(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& source = strand.basis[i];
    const auto& target = strand.basis[i - 1];
    IntMatrix d(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      const std::uint32_t sigma = source[c];
      int below = 0;
      for (std::size_t l = 0; l < n; ++l) {
        if (!(sigma >> l & 1u)) continue;
        const std::uint32_t face = sigma & ~(std::uint32_t{1} << l);
        const auto it = std::lower_bound(target.begin(), target.end(), face);
        if (it != target.end() && *it == face) {
          d(static_cast<std::size_t>(it - target.begin()), c) = below % 2 == 0 ? 1 : -1;
        }
        ++below;
      }
    }
    strand.boundary[i] = std::move(d);
  }
  return strand;
}

/// dim H_i for i = 0..n: nullity of boundary_i minus rank of boundary_{i+1}.
inline std::vector<std::size_t> strand_homology(const KoszulStrand& strand) {
  const std::size_t n = strand.basis.size() - 1;
  std::vector<std::size_t> ranks(n + 2, 0);  // ranks[i] = rank of boundary_i
  for (std::size_t i = 1; i <= n; ++i) {
    if (strand.boundary[i].rows() && strand.boundary[i].cols()) ranks[i] = rank(strand.boundary[i]);
  }
  std::vector<std::size_t> homology(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) homology[i] = strand.basis[i].size() - ranks[i] - ranks[i + 1];
  return homology;
}

inline std::vector<std::size_t> strand_homology(const MonomialIdeal& ideal, const std::vector<int>& a) {
  return strand_homology(build_strand(ideal, a));
}

struct OracleOptions {
  std::optional<int> degree_bound;  // default: total degree of lcm(generators)
  bool lcm_filter = true;
  unsigned threads = 1;
};

/// Necessary condition for a to be a Betti multidegree: every positive
/// coordinate is attained by a generator dividing x^a.
inline bool passes_lcm_filter(const MonomialIdeal& ideal, const std::vector<int>& a) {
  const Monomial m(a);
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] == 0) continue;
    const bool attained = std::any_of(ideal.generators().begin(), ideal.generators().end(),
                                      [&](const Monomial& g) { return g[t] == a[t] && g.divides(m); });
    if (!attained) return false;
  }
  return true;
}

/// Candidate multidegrees: 0 <= a <= lcm(generators), |a| <= bound, in
/// lexicographic order, optionally lcm-filtered.
inline std::vector<std::vector<int>> candidate_multidegrees(const MonomialIdeal& ideal, const OracleOptions& options) {
  const Monomial cap = ideal.lcm();
  const int bound = options.degree_bound.value_or(cap.degree());
  const std::size_t n = ideal.num_vars();
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  int total = 0;
  for (;;) {
    if (total <= bound && (!options.lcm_filter || passes_lcm_filter(ideal, a))) out.push_back(a);
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (a[v] < cap[v] && total < bound) {
        ++a[v];
        ++total;
        break;
      }
      total -= a[v];
      a[v] = 0;
      if (v == 0) return out;
    }
  }
}

/// Nonzero multigraded Betti numbers beta_{i,a}(S/I), keyed by (i, a).
inline std::map<std::pair<int, std::vector<int>>, std::size_t> multigraded_betti(const MonomialIdeal& ideal,
                                                                                 const OracleOptions& options = {}) {
  const auto degrees = candidate_multidegrees(ideal, options);
  const auto homology = parallel_map(degrees.size(), options.threads,
                                     [&](std::size_t idx) { return strand_homology(ideal, degrees[idx]); });
  std::map<std::pair<int, std::vector<int>>, std::size_t> out;
  for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
    for (std::size_t i = 0; i < homology[idx].size(); ++i) {
      if (homology[idx][i]) out[{static_cast<int>(i), degrees[idx]}] = homology[idx][i];
    }
  }
  return out;
}

/// Graded Betti diagram of S/I, complete up to the degree bound.
inline BettiDiagram betti_oracle(const MonomialIdeal& ideal, const OracleOptions& options = {}) {
  BettiDiagram out;
  for (const auto& [key, count] : multigraded_betti(ideal, options)) {
    int total = 0;
    for (int e : key.second) total += e;
    out.add(key.first, total, Rational(static_cast<long>(count)));
  }
  return out;
}

}  // namespace betti
