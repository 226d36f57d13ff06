#pragma once

// JSON encodings. Rationals are decimal strings "num/den" ("n" for
// integers); polynomials are coefficient lists, lowest degree first.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "betti_stab/decomposition.hpp"
#include "betti_stab/diagram.hpp"
#include "betti_stab/exact_arith.hpp"
#include "betti_stab/monomial_ideal.hpp"
#include "betti_stab/stability.hpp"

namespace nlohmann {

template <>
struct adl_serializer<betti::Rational> {
  static void to_json(json& j, const betti::Rational& q) { j = betti::to_string(q); }
  static void from_json(const json& j, betti::Rational& q) {
    if (!j.is_string()) throw betti::Error(betti::ErrorKind::Parse, "rational must be encoded as a string");
    q = betti::parse_rational(j.get<std::string>());
  }
};

template <>
struct adl_serializer<betti::BigInt> {
  static void to_json(json& j, const betti::BigInt& z) { j = z.str(); }
  static void from_json(const json& j, betti::BigInt& z) {
    const auto q = j.get<betti::Rational>();
    if (betti::denominator(q) != 1) throw betti::Error(betti::ErrorKind::Parse, "expected an integer");
    z = betti::numerator(q);
  }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};

template <>
struct adl_serializer<betti::MonomialIdeal> {
  static void to_json(json& j, const betti::MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
    j = {{"num_vars", ideal.num_vars()}, {"generators", gens}};
  }
  static betti::MonomialIdeal from_json(const json& j) {
    const auto n = j.at("num_vars").get<std::size_t>();
    std::vector<betti::Monomial> gens;
    for (const auto& g : j.at("generators")) gens.emplace_back(g.get<std::vector<int>>());
    return betti::MonomialIdeal::from_generators(n, std::move(gens));
  }
};

template <>
struct adl_serializer<betti::StabilityReport> {
  static void to_json(json& j, const betti::StabilityReport& r);
  static betti::StabilityReport from_json(const json& j);
};

}  // namespace nlohmann

namespace betti {

using nlohmann::json;

template <typename T>
void to_json(json& j, const Polynomial<T>& p) {
  j = p.coefficients();
}
template <typename T>
void from_json(const json& j, Polynomial<T>& p) {
  p = Polynomial<T>(j.get<std::vector<T>>());
}

inline void to_json(json& j, const RationalFunctionFit& f) {
  j = {{"numerator", f.numerator()}, {"denominator", f.denominator()}};
}
inline void from_json(const json& j, RationalFunctionFit& f) {
  f = RationalFunctionFit::from(j.at("numerator").get<IntPolynomial>(), j.at("denominator").get<IntPolynomial>());
}

inline void to_json(json& j, const BettiDiagram& d) {
  json entries = json::array();
  for (const auto& [p, v] : d.entries()) entries.push_back({p.i, p.j, to_string(v)});
  j = {{"entries", entries}};
}
inline void from_json(const json& j, BettiDiagram& d) {
  d = BettiDiagram();
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Parse, "diagram entry must be [i, j, \"value\"]");
    const auto value = e[2].get<Rational>();
    if (value <= 0) throw Error(ErrorKind::Parse, "diagram entries must be positive");
    if (d.get(e[0].get<int>(), e[1].get<int>()) != 0) throw Error(ErrorKind::Parse, "duplicate diagram entry");
    d.set(e[0].get<int>(), e[1].get<int>(), value);
  }
}

inline void to_json(json& j, const DegreeSequence& d) { j = d.degrees(); }
inline void from_json(const json& j, DegreeSequence& d) { d = DegreeSequence(j.get<std::vector<int>>()); }

inline void to_json(json& j, const Position& p) { j = {p.i, p.j}; }
inline void from_json(const json& j, Position& p) { p = {j.at(0).get<int>(), j.at(1).get<int>()}; }

inline void to_json(json& j, const Decomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) terms.push_back({{"weight", t.weight}, {"sequence", t.sequence}});
  j = {{"terms", terms}};
}
inline void from_json(const json& j, Decomposition& d) {
  d.terms.clear();
  for (const auto& t : j.at("terms")) d.terms.push_back({t.at("weight").get<Rational>(), t.at("sequence").get<DegreeSequence>()});
}

/// "support" and "rhs" are carried so the constraint matrix can be rebuilt.
inline void to_json(json& j, const DecompositionPolytope& p) {
  j = {{"candidates", p.candidates}, {"vertices", p.vertices}, {"rank", p.rank},
       {"dimension", p.dimension()}, {"support", p.rows}, {"rhs", p.rhs}};
}
inline void from_json(const json& j, DecompositionPolytope& p) {
  p = DecompositionPolytope();
  p.candidates = j.at("candidates").get<std::vector<DegreeSequence>>();
  p.rows = j.at("support").get<std::vector<Position>>();
  p.rhs = j.at("rhs").get<RationalVector>();
  if (p.rows.size() != p.rhs.size()) throw Error(ErrorKind::Parse, "support and rhs lengths differ");
  p.constraints = constraint_matrix(p.rows, p.candidates);
  p.rank = j.at("rank").get<std::size_t>();
  if (p.rank != rank(p.constraints)) throw Error(ErrorKind::Parse, "stored rank disagrees with the constraints");
  p.vertices = j.at("vertices").get<std::vector<RationalVector>>();
  p.vertices_enumerated = true;
  for (const auto& v : p.vertices) {
    if (v.size() != p.candidates.size()) throw Error(ErrorKind::Parse, "vertex length differs from candidate count");
  }
}

inline void to_json(json& j, const TranslationTemplate& t) {
  json positions = json::array();
  for (const auto& p : t.positions()) positions.push_back({p.slope, p.intercept});
  j = {{"positions", positions}, {"k_min", t.k_min()}};
}
inline void from_json(const json& j, TranslationTemplate& t) {
  std::vector<AffineDegree> positions;
  for (const auto& p : j.at("positions")) positions.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  t = TranslationTemplate(std::move(positions), j.at("k_min").get<int>());
}

inline void to_json(json& j, const CombinatorialSignature& s) {
  j = {{"vertex_count", s.vertex_count}, {"dimension", s.dimension}, {"zero_patterns", s.zero_patterns}};
}
inline void from_json(const json& j, CombinatorialSignature& s) {
  s.vertex_count = j.at("vertex_count").get<std::size_t>();
  s.dimension = j.at("dimension").get<std::size_t>();
  s.zero_patterns = j.at("zero_patterns").get<std::vector<std::vector<std::size_t>>>();
}

inline void to_json(json& j, const PowerRecord& r) {
  j = {{"k", r.k}, {"diagram", r.diagram}, {"candidate_count", r.candidate_count},
       {"polytope", r.polytope}, {"signature", r.signature}};
}
inline void from_json(const json& j, PowerRecord& r) {
  r.k = j.at("k").get<int>();
  r.diagram = j.at("diagram").get<BettiDiagram>();
  r.candidate_count = j.at("candidate_count").get<std::size_t>();
  r.polytope = j.at("polytope").get<DecompositionPolytope>();
  r.signature = j.at("signature").get<CombinatorialSignature>();
}

inline void to_json(json& j, const CoordinateTrajectory& c) { j = {{"fit", c.fit}, {"validated", c.validated}}; }
inline void from_json(const json& j, CoordinateTrajectory& c) {
  c.fit = j.at("fit").get<std::optional<RationalFunctionFit>>();
  c.validated = j.at("validated").get<bool>();
}

inline void to_json(json& j, const VertexTrajectory& v) {
  j = {{"zero_pattern", v.zero_pattern}, {"vertex_index", v.vertex_index}, {"coordinates", v.coordinates}};
}
inline void from_json(const json& j, VertexTrajectory& v) {
  v.zero_pattern = j.at("zero_pattern").get<std::vector<std::size_t>>();
  v.vertex_index = j.at("vertex_index").get<std::vector<std::size_t>>();
  v.coordinates = j.at("coordinates").get<std::vector<CoordinateTrajectory>>();
}

inline void to_json(json& j, const CoordinateComparison& c) {
  j = {{"vertex", c.vertex},       {"coordinate", c.coordinate},         {"computed", c.computed},
       {"printed", c.printed},     {"exact_equal", c.exact_equal},       {"constant_ratio", c.constant_ratio},
       {"ratio", c.ratio},         {"fit_equals_printed", c.fit_equals_printed}};
}
inline void from_json(const json& j, CoordinateComparison& c) {
  c.vertex = j.at("vertex").get<std::size_t>();
  c.coordinate = j.at("coordinate").get<std::size_t>();
  c.computed = j.at("computed").get<RationalVector>();
  c.printed = j.at("printed").get<RationalVector>();
  c.exact_equal = j.at("exact_equal").get<bool>();
  c.constant_ratio = j.at("constant_ratio").get<bool>();
  c.ratio = j.at("ratio").get<std::optional<Rational>>();
  c.fit_equals_printed = j.at("fit_equals_printed").get<bool>();
}

inline void to_json(json& j, const VertexComparison& v) {
  j = {{"vertex", v.vertex},
       {"printed_zero_pattern", v.printed_zero_pattern},
       {"trajectory", v.trajectory},
       {"zero_pattern_match", v.zero_pattern_match},
       {"printed_sums", v.printed_sums},
       {"computed_sums", v.computed_sums}};
}
inline void from_json(const json& j, VertexComparison& v) {
  v.vertex = j.at("vertex").get<std::size_t>();
  v.printed_zero_pattern = j.at("printed_zero_pattern").get<std::vector<std::size_t>>();
  v.trajectory = j.at("trajectory").get<std::optional<std::size_t>>();
  v.zero_pattern_match = j.at("zero_pattern_match").get<bool>();
  v.printed_sums = j.at("printed_sums").get<RationalVector>();
  v.computed_sums = j.at("computed_sums").get<RationalVector>();
}

inline void to_json(json& j, const ReferenceComparison& c) {
  j = {{"powers", c.powers},
       {"template_map", c.template_map},
       {"vertices", c.vertices},
       {"coordinates", c.coordinates},
       {"all_zero_patterns_match", c.all_zero_patterns_match},
       {"reconstruction_holds", c.reconstruction_holds},
       {"shared_coordinates_agree", c.shared_coordinates_agree}};
}
inline void from_json(const json& j, ReferenceComparison& c) {
  c.powers = j.at("powers").get<std::vector<int>>();
  c.template_map = j.at("template_map").get<std::vector<std::size_t>>();
  c.vertices = j.at("vertices").get<std::vector<VertexComparison>>();
  c.coordinates = j.at("coordinates").get<std::vector<CoordinateComparison>>();
  c.all_zero_patterns_match = j.at("all_zero_patterns_match").get<bool>();
  c.reconstruction_holds = j.at("reconstruction_holds").get<bool>();
  c.shared_coordinates_agree = j.at("shared_coordinates_agree").get<bool>();
}

inline void to_json(json& j, const ErrorKind& kind) { j = to_string(kind); }

}  // namespace betti

namespace nlohmann {

inline void adl_serializer<betti::StabilityReport>::to_json(json& j, const betti::StabilityReport& r) {
  json window = nullptr;
  if (r.window) window = {r.window->first, r.window->second};
  j = {{"ideal", r.ideal},
       {"k_min", r.options.k_min},
       {"k_max", r.options.k_max},
       {"formula_mode", r.options.use_formula},
       {"fit_degrees", {r.options.fit_num_degree, r.options.fit_den_degree}},
       {"records", r.records},
       {"window", window},
       {"k0", r.k0},
       {"templates", r.templates},
       {"trajectories", r.trajectories},
       {"column_sum_polynomials", r.column_sum_polynomials},
       {"verdict",
        {{"summary", r.verdict()},
         {"stable_in_range", r.stable_in_range},
         {"all_trajectories_fit", r.all_trajectories_fit},
         {"all_column_sums_fit", r.all_column_sums_fit}}}};
}

inline betti::StabilityReport adl_serializer<betti::StabilityReport>::from_json(const json& j) {
  betti::StabilityReport r{j.at("ideal").get<betti::MonomialIdeal>(), {}, {}, {}, {}, {}, {}, {}, false, false, false};
  r.options.k_min = j.at("k_min").get<int>();
  r.options.k_max = j.at("k_max").get<int>();
  r.options.use_formula = j.at("formula_mode").get<bool>();
  r.options.fit_num_degree = j.at("fit_degrees").at(0).get<int>();
  r.options.fit_den_degree = j.at("fit_degrees").at(1).get<int>();
  r.records = j.at("records").get<std::vector<betti::PowerRecord>>();
  if (!j.at("window").is_null()) r.window = std::pair{j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>()};
  r.k0 = j.at("k0").get<std::optional<int>>();
  r.templates = j.at("templates").get<std::vector<betti::TranslationTemplate>>();
  r.trajectories = j.at("trajectories").get<std::vector<betti::VertexTrajectory>>();
  r.column_sum_polynomials = j.at("column_sum_polynomials").get<std::vector<std::optional<betti::RatPolynomial>>>();
  const auto& verdict = j.at("verdict");
  r.stable_in_range = verdict.at("stable_in_range").get<bool>();
  r.all_trajectories_fit = verdict.at("all_trajectories_fit").get<bool>();
  r.all_column_sums_fit = verdict.at("all_column_sums_fit").get<bool>();
  return r;
}

}  // namespace nlohmann
