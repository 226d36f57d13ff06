#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betti_stab/diagram.hpp"
#include "betti_stab/exact_arith.hpp"
#include "betti_stab/monomial_ideal.hpp"

namespace betti {

/// Edge ideal of the path on n vertices: <x1 x2, x2 x3, ..., x_{n-1} x_n>.
inline MonomialIdeal path_ideal(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "path ideal needs n >= 2");
  std::vector<Monomial> gens;
  for (int v = 0; v + 1 < n; ++v) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(v)] = e[static_cast<std::size_t>(v + 1)] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(static_cast<std::size_t>(n), std::move(gens));
}

/// The number of variables n if `ideal` is exactly the path edge ideal on
/// its variables.
inline std::optional<int> path_family_size(const MonomialIdeal& ideal) {
  const int n = static_cast<int>(ideal.num_vars());
  if (n < 2) return std::nullopt;
  if (ideal == path_ideal(n)) return n;
  return std::nullopt;
}

/// beta_{i,j}(S/I^k) for the path edge ideal on n variables. The closed
/// triple-binomial product is used for i >= 1; column 0 is the unit at (0,0).
inline BigInt path_betti(int n, int k, int i, int j) {
  if (n < 2 || k < 1 || i < 0 || j < 0)
    throw Error(ErrorKind::InvalidArgument, "path_betti needs n >= 2, k >= 1, i >= 0, j >= 0");
  if (i == 0) return j == 0 ? 1 : 0;
  const long long N = n, K = k, I = i, J = j;
  return binom(N + 3 * K - J - 2, 2 * J - 3 * I - 3 * K + 3) *
         binom(N + 4 * K + 2 * I - 2 * J - 4, 2 * K + 2 * I - J - 2) * binom(J - I - K, K - 1);
}

/// All nonzero path_betti values with 0 <= i <= n and i <= j <= 2k + n.
inline BettiDiagram path_diagram(int n, int k) {
  BettiDiagram out;
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= 2 * k + n; ++j) {
      const BigInt b = path_betti(n, k, i, j);
      if (b != 0) out.set(i, j, Rational(b));
    }
  }
  return out;
}

}  // namespace betti
