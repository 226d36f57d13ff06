#pragma once

#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "betti_stab/betti_stab.hpp"

namespace betti::testing {

inline BettiDiagram diagram_of(std::initializer_list<std::tuple<int, int, long>> entries) {
  BettiDiagram d;
  for (const auto& [i, j, v] : entries) d.set(i, j, Rational(v));
  return d;
}

inline MonomialIdeal ideal_of(std::size_t n, std::initializer_list<std::vector<int>> gens) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.emplace_back(g);
  return MonomialIdeal::from_generators(n, std::move(out));
}

/// Strictly increasing sequence starting at 0, length in [2, max_len],
/// entries at most max_entry.
inline DegreeSequence random_sequence(std::mt19937& rng, int max_len, int max_entry) {
  std::uniform_int_distribution<int> len_dist(2, max_len);
  const int len = len_dist(rng);
  std::vector<int> pool;
  for (int v = 1; v <= max_entry; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> d{0};
  d.insert(d.end(), pool.begin(), pool.begin() + (len - 1));
  std::sort(d.begin(), d.end());
  return DegreeSequence(d);
}

/// Herzog-Kuehl identities sum_i (-1)^i beta_i d_i^t = 0 for t = 0..s-1.
inline bool satisfies_herzog_kuehl(const PureDiagram& p) {
  const auto& d = p.sequence.degrees();
  const std::size_t s = d.size() - 1;
  for (std::size_t t = 0; t < s; ++t) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= s; ++i) {
      Rational term = p.betti[i];
      for (std::size_t e = 0; e < t; ++e) term *= d[i];
      acc += i % 2 == 0 ? term : Rational(-term);
    }
    if (acc != 0) return false;
  }
  return true;
}

/// Positive combination of up to max_terms random pure diagrams whose
/// sequences start at 0 and stay within [0, max_entry].
inline BettiDiagram random_pure_combination(std::mt19937& rng, int max_terms, int max_len, int max_entry) {
  std::uniform_int_distribution<int> terms_dist(1, max_terms);
  std::uniform_int_distribution<int> weight_num(1, 9);
  std::uniform_int_distribution<int> weight_den(1, 5);
  BettiDiagram out;
  const int terms = terms_dist(rng);
  for (int t = 0; t < terms; ++t) {
    const Rational w(weight_num(rng), weight_den(rng));
    const auto scaled = pure_diagram(random_sequence(rng, max_len, max_entry)).to_diagram(w);
    for (const auto& [pos, v] : scaled.entries()) out.add(pos.i, pos.j, v);
  }
  return out;
}

/// Scales a diagram so that beta_{0,0} = 1.
inline BettiDiagram normalized(const BettiDiagram& d) {
  const Rational corner = d.get(0, 0);
  BettiDiagram out;
  for (const auto& [pos, v] : d.entries()) out.set(pos.i, pos.j, v / corner);
  return out;
}

}  // namespace betti::testing
