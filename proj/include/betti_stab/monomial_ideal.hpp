#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betti_stab/error.hpp"

namespace betti {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in monomial");
    }
  }

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int operator[](std::size_t v) const { return exponents_[v]; }

  int degree() const {
    int d = 0;
    for (int e : exponents_) d += e;
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t v = 0; v < exponents_.size(); ++v) {
      if (exponents_[v] > other.exponents_[v]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exponents_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += b.exponents_[v];
    return Monomial(std::move(e));
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v + 1);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

/// Monomial ideal held by its minimal generators, sorted in lex order with
/// x1 > x2 > ... > xn (largest exponent vector first).
class MonomialIdeal {
 public:
  /// Minimalizes and sorts; throws on an empty list or a length mismatch.
  static MonomialIdeal from_generators(std::size_t num_vars, std::vector<Monomial> generators) {
    if (num_vars == 0) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one variable");
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
    for (const auto& g : generators) {
      if (g.num_vars() != num_vars)
        throw Error(ErrorKind::InvalidArgument, "generator has " + std::to_string(g.num_vars()) +
                                                    " exponents, expected " + std::to_string(num_vars));
    }
    return MonomialIdeal(num_vars, minimalize(std::move(generators)));
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// Exponentwise maximum over all generators.
  Monomial lcm() const {
    std::vector<int> e(num_vars_, 0);
    for (const auto& g : generators_)
      for (std::size_t v = 0; v < num_vars_; ++v) e[v] = std::max(e[v], g[v]);
    return Monomial(std::move(e));
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Drops duplicates and every monomial divisible by another one.
  static std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
      return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> kept;
    for (auto& m : monomials) {
      const bool redundant =
          std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!redundant) kept.push_back(std::move(m));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>{});
    return kept;
  }

 private:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
      : num_vars_(num_vars), generators_(std::move(generators)) {}

  std::size_t num_vars_;
  std::vector<Monomial> generators_;
};

inline std::string to_string(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

/// Parses "x1*x2, x2^2*x3, ..." over x1..x{num_vars}.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t num_vars) {
  auto fail = [&](const std::string& why) -> MonomialIdeal {
    throw Error(ErrorKind::Parse, "cannot parse ideal: " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_uint = [](std::string_view s) -> std::optional<long> {
    if (s.empty() || s.size() > 9) return std::nullopt;
    long value = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + (c - '0');
    }
    return value;
  };

  std::vector<Monomial> generators;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) {
      if (comma == text.size() && generators.empty()) break;
      return fail("empty generator");
    }
    std::vector<int> exponents(num_vars, 0);
    std::size_t pos = 0;
    while (pos <= item.size()) {
      const std::size_t star = std::min(item.find('*', pos), item.size());
      const std::string_view factor = trim(item.substr(pos, star - pos));
      pos = star + 1;
      if (factor == "1") continue;
      if (factor.size() < 2 || factor.front() != 'x') return fail("malformed token '" + std::string(factor) + "'");
      const std::size_t caret = factor.find('^');
      const auto index = parse_uint(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
      long power = 1;
      if (caret != std::string_view::npos) {
        const auto p = parse_uint(factor.substr(caret + 1));
        if (!p) return fail("malformed exponent in '" + std::string(factor) + "'");
        power = *p;
      }
      if (!index || *index < 1) return fail("malformed variable in '" + std::string(factor) + "'");
      if (static_cast<std::size_t>(*index) > num_vars)
        return fail("variable x" + std::to_string(*index) + " exceeds " + std::to_string(num_vars) + " variables");
      exponents[static_cast<std::size_t>(*index - 1)] += static_cast<int>(power);
    }
    generators.emplace_back(std::move(exponents));
  }
  if (generators.empty()) return fail("no generators");
  return MonomialIdeal::from_generators(num_vars, std::move(generators));
}

/// Largest variable index mentioned in ideal text (0 if none).
inline std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t value = 0;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) value = value * 10 + static_cast<std::size_t>(text[j++] - '0');
    best = std::max(best, value);
  }
  return best;
}

/// I^k: every k-fold product of generators (multisets of generator indices),
/// deduplicated and minimalized.
inline MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "ideal power must be at least 1, got " + std::to_string(k));
  const auto& gens = ideal.generators();
  std::set<Monomial> products;
  std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
  // Nondecreasing index tuples enumerate each multiset once.
  for (;;) {
    Monomial product = gens[choice[0]];
    for (std::size_t t = 1; t < choice.size(); ++t) product = product * gens[choice[t]];
    products.insert(std::move(product));

    std::size_t t = choice.size();
    while (t > 0 && choice[t - 1] == gens.size() - 1) --t;
    if (t == 0) break;
    const std::size_t next = choice[t - 1] + 1;
    for (std::size_t u = t - 1; u < choice.size(); ++u) choice[u] = next;
  }
  return MonomialIdeal::from_generators(ideal.num_vars(), {products.begin(), products.end()});
}

/// The common total degree of the generators, or nothing if they differ.
inline std::optional<int> is_equigenerated(const MonomialIdeal& ideal) {
  const int d = ideal.generators().front().degree();
  for (const auto& g : ideal.generators()) {
    if (g.degree() != d) return std::nullopt;
  }
  return d;
}

}  // namespace betti
