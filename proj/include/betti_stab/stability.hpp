#pragma once

// Sweeps powers I^k, tracks the decomposition polytopes across k and tests
// whether they settle into one combinatorial type with vertices moving along
// rational functions of k.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betti_stab/decomposition.hpp"
#include "betti_stab/diagram.hpp"
#include "betti_stab/error.hpp"
#include "betti_stab/exact_arith.hpp"
#include "betti_stab/koszul_oracle.hpp"
#include "betti_stab/monomial_ideal.hpp"
#include "betti_stab/parallel.hpp"
#include "betti_stab/path_formula.hpp"

namespace betti {

/// Vertex count, dimension and the multiset of per-vertex zero patterns,
/// each pattern written in coordinate labels.
struct CombinatorialSignature {
  std::size_t vertex_count = 0;
  std::size_t dimension = 0;
  std::vector<std::vector<std::size_t>> zero_patterns;

  friend bool operator==(const CombinatorialSignature&, const CombinatorialSignature&) = default;
};

inline std::vector<std::size_t> zero_pattern(const RationalVector& vertex, std::span<const std::size_t> labels) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < vertex.size(); ++c) {
    if (vertex[c] == 0) out.push_back(labels[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// labels[c] names coordinate c; an empty span means label c for column c.
inline CombinatorialSignature combinatorial_signature(const DecompositionPolytope& p,
                                                      std::span<const std::size_t> labels = {}) {
  if (!p.vertices_enumerated) throw Error(ErrorKind::InvalidArgument, "signature needs enumerated vertices");
  std::vector<std::size_t> identity;
  if (labels.empty()) {
    identity.resize(p.coordinate_count());
    for (std::size_t c = 0; c < identity.size(); ++c) identity[c] = c;
    labels = identity;
  }
  if (labels.size() != p.coordinate_count()) throw Error(ErrorKind::InvalidArgument, "one label per coordinate required");
  CombinatorialSignature sig;
  sig.vertex_count = p.vertices.size();
  sig.dimension = p.dimension();
  for (const auto& v : p.vertices) sig.zero_patterns.push_back(zero_pattern(v, labels));
  std::sort(sig.zero_patterns.begin(), sig.zero_patterns.end());
  return sig;
}

struct CandidateFamily {
  int k;
  std::vector<DegreeSequence> candidates;
};

/// Pairs candidates across k by their sorted order and fits every position
/// as a * k + b from the first two powers, verifying the rest.
inline std::vector<TranslationTemplate> match_templates(std::span<const CandidateFamily> families) {
  if (families.size() < 3) throw Error(ErrorKind::InvalidArgument, "template matching needs at least three powers");
  for (std::size_t t = 1; t < families.size(); ++t) {
    if (families[t].k <= families[t - 1].k)
      throw Error(ErrorKind::InvalidArgument, "template matching needs increasing powers");
    if (families[t].candidates.size() != families[0].candidates.size())
      throw Error(ErrorKind::TemplateMismatch, "candidate counts differ between k = " + std::to_string(families[0].k) +
                                                   " and k = " + std::to_string(families[t].k));
  }
  auto sorted = [](std::vector<DegreeSequence> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<DegreeSequence>> aligned;
  for (const auto& f : families) aligned.push_back(sorted(f.candidates));

  const int k1 = families[0].k;
  const int k2 = families[1].k;
  std::vector<TranslationTemplate> out;
  for (std::size_t c = 0; c < aligned[0].size(); ++c) {
    const std::size_t length = aligned[0][c].size();
    std::vector<AffineDegree> positions;
    for (std::size_t i = 0; i < length; ++i) {
      if (aligned[1][c].size() != length)
        throw Error(ErrorKind::TemplateMismatch, "aligned candidates have different lengths");
      const int rise = aligned[1][c][i] - aligned[0][c][i];
      if (rise % (k2 - k1) != 0)
        throw Error(ErrorKind::TemplateMismatch, "candidate position is not integral-affine in k");
      const int slope = rise / (k2 - k1);
      positions.push_back({slope, aligned[0][c][i] - slope * k1});
    }
    for (std::size_t t = 0; t < families.size(); ++t) {
      const auto& seq = aligned[t][c];
      bool ok = seq.size() == length;
      for (std::size_t i = 0; ok && i < length; ++i) ok = positions[i].at(families[t].k) == seq[i];
      if (!ok)
        throw Error(ErrorKind::TemplateMismatch, "candidate " + to_string(aligned[0][c]) + " at k = " + std::to_string(k1) +
                                                     " does not follow one affine family");
    }
    try {
      out.emplace_back(std::move(positions), k1);
    } catch (const Error& e) {
      throw Error(ErrorKind::TemplateMismatch, e.what());
    }
  }
  return out;
}

struct ScanOptions {
  int k_min = 1;
  int k_max = 5;
  bool use_formula = false;  // closed path formula instead of the Koszul oracle
  int fit_num_degree = 3;
  int fit_den_degree = 3;
  unsigned threads = 1;
};

struct PowerRecord {
  int k = 0;
  BettiDiagram diagram;
  std::size_t candidate_count = 0;  // before pruning
  DecompositionPolytope polytope;   // pruned, vertices enumerated
  CombinatorialSignature signature; // coordinates labelled by sorted position

  friend bool operator==(const PowerRecord&, const PowerRecord&) = default;
};

struct CoordinateTrajectory {
  std::optional<RationalFunctionFit> fit;
  bool validated = false;  // fit reproduces the held-out last power of the window

  friend bool operator==(const CoordinateTrajectory&, const CoordinateTrajectory&) = default;
};

/// One vertex followed through the stable window.
struct VertexTrajectory {
  std::vector<std::size_t> zero_pattern;   // template labels
  std::vector<std::size_t> vertex_index;   // per window power, index into that polytope's vertices
  std::vector<CoordinateTrajectory> coordinates;

  friend bool operator==(const VertexTrajectory&, const VertexTrajectory&) = default;
};

struct StabilityReport {
  MonomialIdeal ideal;
  ScanOptions options;
  std::vector<PowerRecord> records;
  std::optional<std::pair<int, int>> window;  // stable powers [first, last]
  std::optional<int> k0;                      // window.first - 1
  std::vector<TranslationTemplate> templates; // template c labels pruned coordinate c in the window
  std::vector<VertexTrajectory> trajectories;
  std::vector<std::optional<RatPolynomial>> column_sum_polynomials;
  bool stable_in_range = false;
  bool all_trajectories_fit = false;
  bool all_column_sums_fit = false;

  const PowerRecord& record(int k) const {
    for (const auto& r : records) {
      if (r.k == k) return r;
    }
    throw Error(ErrorKind::InvalidArgument, "no record for k = " + std::to_string(k));
  }

  std::vector<int> window_powers() const {
    std::vector<int> out;
    if (window)
      for (int k = window->first; k <= window->second; ++k) out.push_back(k);
    return out;
  }

  std::string verdict() const { return stable_in_range ? "stable in range" : "not stabilized in range"; }
};

inline bool operator==(const ScanOptions& a, const ScanOptions& b) {
  return a.k_min == b.k_min && a.k_max == b.k_max && a.use_formula == b.use_formula &&
         a.fit_num_degree == b.fit_num_degree && a.fit_den_degree == b.fit_den_degree;
}

inline bool operator==(const StabilityReport& a, const StabilityReport& b) {
  return a.ideal == b.ideal && a.options == b.options && a.records == b.records && a.window == b.window &&
         a.k0 == b.k0 && a.templates == b.templates && a.trajectories == b.trajectories &&
         a.column_sum_polynomials == b.column_sum_polynomials && a.stable_in_range == b.stable_in_range &&
         a.all_trajectories_fit == b.all_trajectories_fit && a.all_column_sums_fit == b.all_column_sums_fit;
}

/// Diagram, pruned polytope and signature of S/I^k.
inline PowerRecord analyze_power(const MonomialIdeal& ideal, int k, bool use_formula, unsigned threads = 1) {
  PowerRecord rec;
  rec.k = k;
  if (use_formula) {
    const auto n = path_family_size(ideal);
    if (!n) throw Error(ErrorKind::InvalidArgument, "formula mode needs the path edge ideal");
    rec.diagram = path_diagram(*n, k);
  } else {
    OracleOptions opts;
    opts.threads = threads;
    rec.diagram = betti_oracle(power(ideal, k), opts);
  }
  auto candidates = candidate_degree_sequences(rec.diagram);
  rec.candidate_count = candidates.size();
  if (candidates.empty()) {
    // Only (0,0) survives (e.g. the unit ideal); nothing to decompose.
    rec.polytope.rows = rec.diagram.support();
    rec.polytope.vertices_enumerated = true;
  } else {
    rec.polytope = prune(enumerate_vertices(build_polytope(rec.diagram, std::move(candidates)), threads));
  }
  rec.signature = combinatorial_signature(rec.polytope);
  return rec;
}

/// Column sums per window power fitted by the lowest-degree polynomial
/// through all but the last power, kept only when it predicts the last one.
inline std::vector<std::optional<RatPolynomial>> fit_column_sums(const StabilityReport& report) {
  std::vector<std::optional<RatPolynomial>> out;
  const auto ks = report.window_powers();
  if (ks.size() < 3) return out;
  std::size_t columns = 0;
  std::vector<std::vector<Rational>> sums;
  for (int k : ks) {
    sums.push_back(column_sums(report.record(k).diagram));
    columns = std::max(columns, sums.back().size());
  }
  for (std::size_t i = 0; i < columns; ++i) {
    std::vector<Sample> fit_samples;
    for (std::size_t t = 0; t + 1 < ks.size(); ++t)
      fit_samples.push_back({ks[t], i < sums[t].size() ? sums[t][i] : Rational(0)});
    const Rational held_out = i < sums.back().size() ? sums.back()[i] : Rational(0);
    std::optional<RatPolynomial> found;
    for (int deg = 0; deg + 2 <= static_cast<int>(fit_samples.size()); ++deg) {
      if (auto p = fit_polynomial(fit_samples, deg)) {
        found = std::move(p);
        break;
      }
    }
    if (found && found->evaluate(Rational(ks.back())) != held_out) found.reset();
    out.push_back(std::move(found));
  }
  return out;
}

/// Runs every power in [k_min, k_max], finds the longest suffix of equal
/// signatures (at least three powers) whose candidates form translation
/// templates, pairs vertices by zero pattern and fits their coordinates.
inline StabilityReport scan_powers(const MonomialIdeal& ideal, const ScanOptions& options) {
  if (!is_equigenerated(ideal))
    throw Error(ErrorKind::NotEquigenerated, "scan needs an ideal whose generators share one degree");
  if (options.k_min < 1) throw Error(ErrorKind::InvalidArgument, "k_min must be at least 1");
  if (options.k_max - options.k_min < 4)
    throw Error(ErrorKind::InvalidArgument, "scan needs k_max - k_min >= 4");
  if (options.use_formula && !path_family_size(ideal))
    throw Error(ErrorKind::InvalidArgument, "formula mode needs the path edge ideal");

  StabilityReport report{ideal, options, {}, {}, {}, {}, {}, {}, false, false, false};
  const std::size_t count = static_cast<std::size_t>(options.k_max - options.k_min + 1);
  report.records = parallel_map(count, options.threads, [&](std::size_t t) {
    return analyze_power(ideal, options.k_min + static_cast<int>(t), options.use_formula);
  });

  // Longest suffix of equal signatures, shrunk from the left until the
  // candidates line up as translation templates.
  std::size_t last = count - 1;
  std::size_t first = last;
  while (first > 0 && report.records[first - 1].signature == report.records[last].signature) --first;
  for (; last - first + 1 >= 3; ++first) {
    std::vector<CandidateFamily> families;
    for (std::size_t t = first; t <= last; ++t) families.push_back({report.records[t].k, report.records[t].polytope.candidates});
    try {
      report.templates = match_templates(families);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TemplateMismatch) throw;
      continue;
    }
    report.window = std::pair{report.records[first].k, report.records[last].k};
    report.k0 = report.records[first].k - 1;
    report.stable_in_range = true;
    break;
  }
  if (!report.window) return report;

  // Vertex pairing: same zero pattern, ties broken by lexicographic rank.
  const auto ks = report.window_powers();
  auto grouped = [](const PowerRecord& rec) {
    std::vector<std::size_t> labels(rec.polytope.coordinate_count());
    for (std::size_t c = 0; c < labels.size(); ++c) labels[c] = c;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < rec.polytope.vertices.size(); ++v)
      groups[zero_pattern(rec.polytope.vertices[v], labels)].push_back(v);
    return groups;  // vertices are stored sorted, so each group is in lexicographic order
  };
  const auto base = grouped(report.record(ks.front()));
  std::vector<std::map<std::vector<std::size_t>, std::vector<std::size_t>>> per_k;
  for (int k : ks) per_k.push_back(grouped(report.record(k)));
  for (const auto& [pattern, members] : base) {
    for (std::size_t rank_in_group = 0; rank_in_group < members.size(); ++rank_in_group) {
      VertexTrajectory traj;
      traj.zero_pattern = pattern;
      for (const auto& g : per_k) traj.vertex_index.push_back(g.at(pattern).at(rank_in_group));
      report.trajectories.push_back(std::move(traj));
    }
  }

  report.all_trajectories_fit = true;
  const std::size_t m = report.templates.size();
  for (auto& traj : report.trajectories) {
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<Sample> fit_samples;
      for (std::size_t t = 0; t + 1 < ks.size(); ++t)
        fit_samples.push_back({ks[t], report.record(ks[t]).polytope.vertices[traj.vertex_index[t]][c]});
      const Rational held_out = report.record(ks.back()).polytope.vertices[traj.vertex_index.back()][c];
      CoordinateTrajectory coord;
      coord.fit = fit_lowest_degree(fit_samples, options.fit_num_degree, options.fit_den_degree);
      if (coord.fit) {
        const auto predicted = coord.fit->evaluate(Rational(ks.back()));
        coord.validated = predicted && *predicted == held_out;
      }
      report.all_trajectories_fit &= coord.validated;
      traj.coordinates.push_back(std::move(coord));
    }
  }

  report.column_sum_polynomials = fit_column_sums(report);
  report.all_column_sums_fit =
      std::all_of(report.column_sum_polynomials.begin(), report.column_sum_polynomials.end(),
                  [](const auto& p) { return p.has_value(); });
  return report;
}

// ---------------------------------------------------------------------------
// Comparison against the published vertex formulas for the path ideal on six
// variables.

/// Translation templates pi_1..pi_8 and the three published vertex families
/// h_1, h_2, h_3 (coordinates in pi order).
struct ReferenceVertexFamily {
  std::vector<TranslationTemplate> templates;
  std::vector<std::vector<RationalFunctionFit>> vertices;
};

inline ReferenceVertexFamily path6_reference() {
  auto poly = [](std::vector<long> c) {
    std::vector<BigInt> out(c.begin(), c.end());
    return IntPolynomial(std::move(out));
  };
  auto product = [](std::initializer_list<IntPolynomial> factors) {
    IntPolynomial out = IntPolynomial::constant(1);
    for (const auto& f : factors) out = out * f;
    return out;
  };
  auto frac = [](const IntPolynomial& p, const IntPolynomial& q) { return RationalFunctionFit::from(p, q); };

  const auto one = poly({1});
  const auto zero = RationalFunctionFit();
  const auto km1 = poly({-1, 1}), km2 = poly({-2, 1}), km3 = poly({-3, 1});
  const auto kp1 = poly({1, 1}), kp2 = poly({2, 1});
  const auto tk1 = poly({1, 2}), tk3 = poly({3, 2}), tk5 = poly({5, 2});
  const auto common = product({poly({4}), tk3, tk1, kp1});

  const auto w4 = frac(product({poly({5, 7}), km1, km2}), common);
  const auto w8 = frac(product({km1, km2, km3}), common);
  const auto pi5_a = frac(product({tk5, km1}), product({tk1, kp2, kp1}));

  ReferenceVertexFamily ref;
  const std::vector<std::vector<int>> offsets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {0, 1, 2, 3},
                                                 {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {0, 1, 2, 3, 4}};
  for (const auto& tail : offsets) {
    std::vector<AffineDegree> positions{{0, 0}};
    for (int o : tail) positions.push_back({2, o});
    ref.templates.emplace_back(std::move(positions), 1);
  }
  ref.vertices = {
      {zero, zero, frac(kp2, tk3), w4, pi5_a, frac(product({poly({5, 4}), kp1}), product({tk3, tk1, kp2})), zero, w8},
      {zero, frac(product({poly({2}), kp2, kp2}), product({tk3, tk1})), zero, w4, pi5_a,
       frac(product({kp1, km1}), product({tk3, tk1, kp2})), frac(one, tk3), w8},
      {frac(kp2, tk1), zero, zero, w4, frac(poly({-7, 0, 1}), product({tk1, kp2, kp1})),
       frac(kp1, product({tk3, tk1, kp2})), frac(one, tk3), w8},
  };
  return ref;
}

struct CoordinateComparison {
  std::size_t vertex = 0;      // reference vertex (h index - 1)
  std::size_t coordinate = 0;  // reference template (pi index - 1)
  std::vector<Rational> computed;  // per window power
  std::vector<Rational> printed;
  bool exact_equal = false;
  bool constant_ratio = false;
  std::optional<Rational> ratio;  // computed / printed when constant and defined
  bool fit_equals_printed = false;

  friend bool operator==(const CoordinateComparison&, const CoordinateComparison&) = default;
};

struct VertexComparison {
  std::size_t vertex = 0;
  std::vector<std::size_t> printed_zero_pattern;  // reference labels
  std::optional<std::size_t> trajectory;          // matching computed trajectory
  bool zero_pattern_match = false;
  std::vector<Rational> printed_sums;   // per window power
  std::vector<Rational> computed_sums;

  friend bool operator==(const VertexComparison&, const VertexComparison&) = default;
};

struct ReferenceComparison {
  std::vector<int> powers;
  std::vector<std::size_t> template_map;  // reference label -> computed template
  std::vector<VertexComparison> vertices;
  std::vector<CoordinateComparison> coordinates;
  bool all_zero_patterns_match = false;
  bool reconstruction_holds = false;
  bool shared_coordinates_agree = false;  // pi_4 and pi_8 equal at every vertex

  friend bool operator==(const ReferenceComparison&, const ReferenceComparison&) = default;
};

inline ReferenceComparison compare_reference(const StabilityReport& report, const ReferenceVertexFamily& ref) {
  if (!report.window || report.window->first < 4)
    throw Error(ErrorKind::InvalidArgument, "window mismatch: reference comparison needs a stable window within k >= 4");
  ReferenceComparison cmp;
  cmp.powers = report.window_powers();

  for (const auto& t : ref.templates) {
    const auto it = std::find_if(report.templates.begin(), report.templates.end(),
                                 [&](const TranslationTemplate& c) { return c.positions() == t.positions(); });
    if (it == report.templates.end())
      throw Error(ErrorKind::TemplateMismatch, "window mismatch: no computed template " + to_string(t));
    cmp.template_map.push_back(static_cast<std::size_t>(it - report.templates.begin()));
  }

  auto value_at = [&](std::size_t traj, std::size_t t, std::size_t computed_coord) {
    const auto& rec = report.record(cmp.powers[t]);
    return rec.polytope.vertices[report.trajectories[traj].vertex_index[t]][computed_coord];
  };

  cmp.all_zero_patterns_match = true;
  for (std::size_t v = 0; v < ref.vertices.size(); ++v) {
    VertexComparison vc;
    vc.vertex = v;
    std::vector<std::size_t> mapped;
    for (std::size_t c = 0; c < ref.vertices[v].size(); ++c) {
      if (ref.vertices[v][c].numerator().is_zero()) {
        vc.printed_zero_pattern.push_back(c);
        mapped.push_back(cmp.template_map[c]);
      }
    }
    std::sort(mapped.begin(), mapped.end());
    for (std::size_t t = 0; t < report.trajectories.size(); ++t) {
      if (report.trajectories[t].zero_pattern == mapped) vc.trajectory = t;
    }
    vc.zero_pattern_match = vc.trajectory.has_value();
    cmp.all_zero_patterns_match &= vc.zero_pattern_match;
    for (std::size_t t = 0; t < cmp.powers.size(); ++t) {
      Rational printed = 0;
      for (const auto& f : ref.vertices[v]) printed += f.evaluate(Rational(cmp.powers[t])).value_or(Rational(0));
      vc.printed_sums.push_back(printed);
      Rational computed = 0;
      if (vc.trajectory)
        for (std::size_t c = 0; c < report.templates.size(); ++c) computed += value_at(*vc.trajectory, t, c);
      vc.computed_sums.push_back(computed);
    }

    for (std::size_t c = 0; c < ref.vertices[v].size(); ++c) {
      CoordinateComparison cc;
      cc.vertex = v;
      cc.coordinate = c;
      for (std::size_t t = 0; t < cmp.powers.size(); ++t) {
        cc.printed.push_back(ref.vertices[v][c].evaluate(Rational(cmp.powers[t])).value_or(Rational(0)));
        if (vc.trajectory) cc.computed.push_back(value_at(*vc.trajectory, t, cmp.template_map[c]));
      }
      if (vc.trajectory) {
        cc.exact_equal = cc.computed == cc.printed;
        const bool all_zero = std::all_of(cc.computed.begin(), cc.computed.end(), [](const Rational& x) { return x == 0; }) &&
                              std::all_of(cc.printed.begin(), cc.printed.end(), [](const Rational& x) { return x == 0; });
        if (all_zero) {
          cc.constant_ratio = true;
        } else if (std::none_of(cc.printed.begin(), cc.printed.end(), [](const Rational& x) { return x == 0; })) {
          const Rational r = cc.computed.front() / cc.printed.front();
          cc.constant_ratio = r != 0;
          for (std::size_t t = 0; t < cc.printed.size(); ++t) cc.constant_ratio &= cc.computed[t] == r * cc.printed[t];
          if (cc.constant_ratio) cc.ratio = r;
        }
        const auto& fit = report.trajectories[*vc.trajectory].coordinates[cmp.template_map[c]].fit;
        cc.fit_equals_printed = fit && *fit == ref.vertices[v][c];
      }
      cmp.coordinates.push_back(std::move(cc));
    }
    cmp.vertices.push_back(std::move(vc));
  }

  cmp.reconstruction_holds = true;
  for (const auto& rec : report.records) {
    for (const auto& vertex : rec.polytope.vertices)
      cmp.reconstruction_holds &= verify_decomposition(rec.diagram, vertex, rec.polytope.candidates);
  }

  cmp.shared_coordinates_agree = true;
  for (std::size_t label : {std::size_t{3}, std::size_t{7}}) {
    const std::size_t c = cmp.template_map[label];
    for (std::size_t t = 0; t < cmp.powers.size(); ++t) {
      const auto& vertices = report.record(cmp.powers[t]).polytope.vertices;
      for (const auto& vertex : vertices) cmp.shared_coordinates_agree &= vertex[c] == vertices.front()[c];
    }
  }
  return cmp;
}

}  // namespace betti
