#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betti_stab/error.hpp"
#include "betti_stab/exact_arith.hpp"

namespace betti {

/// (homological index i, internal degree j)
struct Position {
  int i;
  int j;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Graded Betti numbers beta_{i,j}, stored sparsely; absent means zero and
/// every stored value is strictly positive.
class BettiDiagram {
 public:
  using Entries = std::map<Position, Rational>;

  BettiDiagram() = default;

  /// Sets beta_{i,j}; zero erases, negative values are rejected.
  void set(int i, int j, const Rational& value) {
    if (i < 0 || j < 0) throw Error(ErrorKind::InvalidArgument, "Betti position indices must be nonnegative");
    if (value < 0) throw Error(ErrorKind::InvalidArgument, "Betti numbers must be nonnegative");
    if (value == 0) {
      entries_.erase({i, j});
    } else {
      entries_[{i, j}] = value;
    }
  }

  void add(int i, int j, const Rational& value) { set(i, j, get(i, j) + value); }

  Rational get(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Largest homological index with a nonzero entry, or -1 when empty.
  int max_index() const {
    int best = -1;
    for (const auto& [p, v] : entries_) best = std::max(best, p.i);
    return best;
  }

  std::vector<Position> support() const {
    std::vector<Position> out;
    out.reserve(entries_.size());
    for (const auto& [p, v] : entries_) out.push_back(p);
    return out;
  }

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  Entries entries_;
};

/// Strictly increasing degrees d_0 < d_1 < ... < d_s.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error(ErrorKind::InvalidArgument, "degree sequence must be nonempty");
    for (std::size_t i = 1; i < degrees_.size(); ++i) {
      if (degrees_[i] <= degrees_[i - 1])
        throw Error(ErrorKind::InvalidArgument, "degree sequence must be strictly increasing");
    }
  }

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

inline std::string to_string(const DegreeSequence& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

struct PureDiagram {
  DegreeSequence sequence;
  std::vector<Rational> betti;  // betti[i] sits at (i, sequence[i]); betti[0] == 1

  /// Smallest integer multiple with coprime entries.
  std::vector<BigInt> integral() const {
    BigInt scale = 1;
    for (const auto& b : betti) scale = boost::multiprecision::lcm(scale, denominator(b));
    std::vector<BigInt> out;
    BigInt content = 0;
    for (const auto& b : betti) {
      out.push_back(numerator(b * Rational(scale)));
      content = boost::multiprecision::gcd(content, out.back());
    }
    for (auto& v : out) v /= content;
    return out;
  }

  BettiDiagram to_diagram(const Rational& weight = 1) const {
    BettiDiagram out;
    for (std::size_t i = 0; i < betti.size(); ++i) out.set(static_cast<int>(i), sequence[i], weight * betti[i]);
    return out;
  }
};

/// Pure diagram of a degree sequence, normalized so the first entry is one:
/// betti[i] = prod_{j>0} (d_j - d_0) / prod_{j!=i} |d_j - d_i|, the positive
/// solution of the Herzog-Kuhl equations.
inline PureDiagram pure_diagram(const DegreeSequence& d) {
  const std::size_t n = d.size();
  BigInt top = 1;
  for (std::size_t j = 1; j < n; ++j) top *= d[j] - d[0];
  PureDiagram out{d, {}};
  out.betti.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt bottom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) bottom *= std::abs(d[j] - d[i]);
    }
    out.betti.emplace_back(top, bottom);
  }
  return out;
}

/// Degree position a * k + b.
struct AffineDegree {
  int slope;
  int intercept;
  int at(long long k) const { return static_cast<int>(slope * k + intercept); }
  friend auto operator<=>(const AffineDegree&, const AffineDegree&) = default;
};

/// A degree sequence whose entries are affine in the power k, valid (strictly
/// increasing) for every k >= k_min.
class TranslationTemplate {
 public:
  TranslationTemplate() = default;
  TranslationTemplate(std::vector<AffineDegree> positions, int k_min)
      : positions_(std::move(positions)), k_min_(k_min) {
    if (positions_.empty()) throw Error(ErrorKind::InvalidArgument, "template needs at least one position");
    for (std::size_t i = 1; i < positions_.size(); ++i) {
      const auto& lo = positions_[i - 1];
      const auto& hi = positions_[i];
      // increasing at k_min and never closing the gap afterwards
      if (hi.slope < lo.slope || hi.at(k_min_) <= lo.at(k_min_))
        throw Error(ErrorKind::InvalidArgument, "template is not strictly increasing for all k >= k_min");
    }
  }

  const std::vector<AffineDegree>& positions() const noexcept { return positions_; }
  int k_min() const noexcept { return k_min_; }

  friend bool operator==(const TranslationTemplate&, const TranslationTemplate&) = default;

 private:
  std::vector<AffineDegree> positions_;
  int k_min_ = 0;
};

inline std::string to_string(const TranslationTemplate& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.positions().size(); ++i) {
    const auto& p = t.positions()[i];
    if (i) out += ",";
    std::string term;
    if (p.slope != 0) term = (p.slope == 1 ? "" : std::to_string(p.slope)) + "k";
    if (p.intercept != 0 || term.empty()) {
      if (!term.empty()) term += p.intercept > 0 ? "+" : "";
      term += std::to_string(p.intercept);
    }
    out += term;
  }
  return out + ")";
}

inline DegreeSequence instantiate_template(const TranslationTemplate& t, long long k) {
  if (k < t.k_min())
    throw Error(ErrorKind::InvalidArgument,
                "template instantiated at k = " + std::to_string(k) + " below k_min = " + std::to_string(t.k_min()));
  std::vector<int> d;
  d.reserve(t.positions().size());
  for (const auto& p : t.positions()) d.push_back(p.at(k));
  return DegreeSequence(std::move(d));
}

/// Total Betti numbers sum_j beta_{i,j} for i = 0..max_index.
inline std::vector<Rational> column_sums(const BettiDiagram& diagram) {
  std::vector<Rational> sums(static_cast<std::size_t>(diagram.max_index() + 1), Rational(0));
  for (const auto& [p, v] : diagram.entries()) sums[static_cast<std::size_t>(p.i)] += v;
  return sums;
}

/// True iff column 0 is exactly {(0,0) -> 1}.
inline bool validate_cyclic(const BettiDiagram& diagram) {
  if (diagram.get(0, 0) != 1) return false;
  for (const auto& [p, v] : diagram.entries()) {
    if (p.i == 0 && p.j != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Table rendering in the usual layout: column i, display row j - i.

/// Renders the banded table. Zero cells print as ".", and runs of empty rows
/// between occupied rows collapse into a single "⋮" line.
inline std::string render_table(const BettiDiagram& diagram) {
  if (diagram.empty()) return "(empty diagram)\n";
  const int columns = diagram.max_index() + 1;
  int row_lo = 0;
  int row_hi = 0;
  bool first = true;
  for (const auto& [p, v] : diagram.entries()) {
    const int r = p.j - p.i;
    row_lo = first ? r : std::min(row_lo, r);
    row_hi = first ? r : std::max(row_hi, r);
    first = false;
  }

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  labels.emplace_back("");
  cells.emplace_back();
  for (int i = 0; i < columns; ++i) cells.back().push_back(std::to_string(i));

  bool eliding = false;
  for (int r = row_lo; r <= row_hi; ++r) {
    std::vector<std::string> row;
    bool occupied = false;
    for (int i = 0; i < columns; ++i) {
      const Rational v = diagram.get(i, r + i);
      occupied |= v != 0;
      row.push_back(v == 0 ? "." : to_string(v));
    }
    if (!occupied) {
      if (!eliding) {
        labels.emplace_back("⋮");
        cells.emplace_back();
      }
      eliding = true;
      continue;
    }
    eliding = false;
    labels.push_back(std::to_string(r));
    cells.push_back(std::move(row));
  }

  std::size_t label_width = 1;
  for (const auto& l : labels) label_width = std::max(label_width, l == "⋮" ? std::size_t{1} : l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(columns), 1);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  for (std::size_t line = 0; line < cells.size(); ++line) {
    const std::string& label = labels[line];
    const std::size_t shown = label == "⋮" ? 1 : label.size();
    out << std::string(label_width - shown, ' ') << label << " |";
    for (std::size_t c = 0; c < cells[line].size(); ++c) {
      out << ' ' << std::string(width[c] - cells[line][c].size(), ' ') << cells[line][c];
    }
    if (line == 0) {
      std::size_t total = label_width + 2;
      for (auto w : width) total += w + 1;
      out << '\n' << std::string(label_width + 1, '-') << '+' << std::string(total - label_width - 2, '-');
    }
    out << '\n';
  }
  return out.str();
}

/// Inverse of render_table.
inline BettiDiagram parse_table(std::string_view text) {
  BettiDiagram out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    const auto bar = line.find('|');
    if (bar == std::string::npos) {
      if (line.find_first_not_of("-+ ") == std::string::npos || line == "(empty diagram)") continue;
      throw Error(ErrorKind::Parse, "table line without column separator: '" + line + "'");
    }
    std::istringstream label_in(line.substr(0, bar));
    std::string label;
    label_in >> label;
    std::istringstream cells_in(line.substr(bar + 1));
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    if (label.empty() || label == "⋮") continue;
    int row = 0;
    try {
      row = std::stoi(label);
    } catch (...) {
      throw Error(ErrorKind::Parse, "bad row label '" + label + "'");
    }
    std::string cell;
    for (int i = 0; cells_in >> cell; ++i) {
      if (cell == ".") continue;
      out.set(i, row + i, parse_rational(cell));
    }
  }
  return out;
}

}  // namespace betti
