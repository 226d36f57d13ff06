#pragma once

// Command-line front end: betti-stab <subcommand> [options].
// Exit status 0 on success, 1 on domain errors (a JSON error object is
// written to stdout), 2 on usage errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "betti_stab/decomposition.hpp"
#include "betti_stab/diagram.hpp"
#include "betti_stab/json_io.hpp"
#include "betti_stab/koszul_oracle.hpp"
#include "betti_stab/monomial_ideal.hpp"
#include "betti_stab/parallel.hpp"
#include "betti_stab/path_formula.hpp"
#include "betti_stab/stability.hpp"

namespace betti::cli {

enum class Command { Formula, Oracle, Decompose, Polytope, Scan, VerifyPaper };

struct RunConfig {
  Command command = Command::Formula;
  std::string ideal_path;
  std::string diagram_path;
  std::optional<std::size_t> num_vars;
  int n = 6;
  int k = 1;
  int k_min = 1;
  int k_max = 5;
  bool table = false;
  bool formula_mode = false;
  bool prune = false;
  bool lcm_filter = true;
  std::optional<int> degree_bound;
  int fit_num_degree = 3;
  int fit_den_degree = 3;
  unsigned threads = 1;
  std::string json_out;  // "-" for stdout
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Ideal files hold either the JSON encoding or the text syntax
/// "x1*x2, x2*x3"; text without an explicit variable count uses the largest
/// variable index mentioned.
inline MonomialIdeal load_ideal(const std::string& path, std::optional<std::size_t> num_vars) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return json::parse(text).get<MonomialIdeal>();
  return parse_ideal(text, num_vars.value_or(max_variable_index(text)));
}

inline BettiDiagram load_diagram(const std::string& path) { return json::parse(read_file(path)).get<BettiDiagram>(); }

inline void emit_json(const json& j, const std::string& target, std::ostream& out) {
  if (target.empty() || target == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw FileError("cannot write '" + target + "'");
  file << j.dump(2) << '\n';
}

inline void emit_diagram(const BettiDiagram& d, bool table, std::ostream& out) {
  if (table) {
    out << render_table(d);
  } else {
    out << json(d).dump(2) << '\n';
  }
}

inline std::string pattern_string(const std::vector<std::size_t>& pattern, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t t = 0; t < pattern.size(); ++t) out += (t ? ", " : "") + names[pattern[t]];
  return out + "}";
}

inline void print_scan_summary(const StabilityReport& r, std::ostream& out) {
  out << "ideal: " << to_string(r.ideal) << " (" << r.ideal.num_vars() << " variables)\n";
  out << "diagrams: " << (r.options.use_formula ? "closed path formula" : "Koszul oracle") << "\n\n";
  out << std::setw(4) << "k" << std::setw(12) << "candidates" << std::setw(6) << "m" << std::setw(10) << "vertices"
      << std::setw(6) << "dim" << "\n";
  for (const auto& rec : r.records) {
    out << std::setw(4) << rec.k << std::setw(12) << rec.candidate_count << std::setw(6)
        << rec.polytope.coordinate_count() << std::setw(10) << rec.polytope.vertices.size() << std::setw(6)
        << rec.polytope.dimension() << "\n";
  }
  out << "\nverdict: " << r.verdict();
  if (r.window) out << " (window k = " << r.window->first << ".." << r.window->second << ", k0 = " << *r.k0 << ")";
  out << "\n";
  if (!r.window) return;

  std::vector<std::string> names;
  for (std::size_t c = 0; c < r.templates.size(); ++c) {
    names.push_back("T" + std::to_string(c + 1));
    out << "  " << names.back() << " = " << to_string(r.templates[c]) << "\n";
  }
  for (std::size_t v = 0; v < r.trajectories.size(); ++v) {
    const auto& traj = r.trajectories[v];
    out << "vertex " << v + 1 << ", zeros " << pattern_string(traj.zero_pattern, names) << "\n";
    for (std::size_t c = 0; c < traj.coordinates.size(); ++c) {
      const auto& coord = traj.coordinates[c];
      out << "  " << names[c] << ": ";
      if (!coord.fit) {
        out << "no fit within degrees (" << r.options.fit_num_degree << "," << r.options.fit_den_degree << ")\n";
      } else {
        out << to_string(*coord.fit) << (coord.validated ? "  [validated]" : "  [fails held-out power]") << "\n";
      }
    }
  }
  out << "column sums:\n";
  for (std::size_t i = 0; i < r.column_sum_polynomials.size(); ++i) {
    const auto& p = r.column_sum_polynomials[i];
    out << "  column " << i << ": " << (p ? to_string(*p) : std::string("no validated polynomial")) << "\n";
  }
  out << "trajectory fits: " << (r.all_trajectories_fit ? "all validated" : "incomplete")
      << "; column sums: " << (r.all_column_sums_fit ? "all validated" : "incomplete") << "\n";
}

inline void print_comparison(const ReferenceComparison& cmp, std::ostream& out) {
  out << "\nreference comparison over k = " << cmp.powers.front() << ".." << cmp.powers.back() << "\n";
  for (const auto& v : cmp.vertices) {
    out << "h" << v.vertex + 1 << ": zero pattern " << (v.zero_pattern_match ? "matches" : "DOES NOT MATCH")
        << "; printed coordinate sums";
    for (const auto& s : v.printed_sums) out << " " << to_string(s);
    out << "; computed sums";
    for (const auto& s : v.computed_sums) out << " " << to_string(s);
    out << "\n";
  }
  out << std::left << std::setw(8) << "vertex" << std::setw(8) << "coord" << std::setw(8) << "equal"
      << std::setw(10) << "ratio" << "at k = " << cmp.powers.front() << " (computed vs printed)\n";
  for (const auto& c : cmp.coordinates) {
    std::string ratio = c.constant_ratio ? (c.ratio ? to_string(*c.ratio) : "0/0") : "varies";
    out << std::setw(8) << ("h" + std::to_string(c.vertex + 1)) << std::setw(8)
        << ("pi" + std::to_string(c.coordinate + 1)) << std::setw(8) << (c.exact_equal ? "yes" : "no")
        << std::setw(10) << ratio;
    if (!c.computed.empty()) out << to_string(c.computed.front()) << " vs " << to_string(c.printed.front());
    out << "\n";
  }
  out << std::right;
  out << "all zero patterns match: " << (cmp.all_zero_patterns_match ? "yes" : "no") << "\n";
  out << "every vertex reconstructs its diagram: " << (cmp.reconstruction_holds ? "yes" : "no") << "\n";
  out << "pi4 and pi8 agree across vertices: " << (cmp.shared_coordinates_agree ? "yes" : "no") << "\n";
}

inline int execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Formula:
      emit_diagram(path_diagram(cfg.n, cfg.k), cfg.table, out);
      return 0;
    case Command::Oracle: {
      OracleOptions opts;
      opts.degree_bound = cfg.degree_bound;
      opts.lcm_filter = cfg.lcm_filter;
      opts.threads = cfg.threads;
      const auto ideal = load_ideal(cfg.ideal_path, cfg.num_vars);
      emit_diagram(betti_oracle(power(ideal, cfg.k), opts), cfg.table, out);
      return 0;
    }
    case Command::Decompose:
      out << json(greedy_decompose(load_diagram(cfg.diagram_path))).dump(2) << '\n';
      return 0;
    case Command::Polytope: {
      const auto diagram = load_diagram(cfg.diagram_path);
      auto polytope = enumerate_vertices(build_polytope(diagram, candidate_degree_sequences(diagram)), cfg.threads);
      if (cfg.prune) polytope = prune(polytope);
      out << json(polytope).dump(2) << '\n';
      return 0;
    }
    case Command::Scan: {
      ScanOptions opts{cfg.k_min, cfg.k_max, cfg.formula_mode, cfg.fit_num_degree, cfg.fit_den_degree, cfg.threads};
      const auto report = scan_powers(load_ideal(cfg.ideal_path, cfg.num_vars), opts);
      if (cfg.json_out == "-") {
        emit_json(report, "-", out);
      } else {
        print_scan_summary(report, out);
        if (!cfg.json_out.empty()) emit_json(report, cfg.json_out, out);
      }
      return 0;
    }
    case Command::VerifyPaper: {
      if (cfg.n != 6) throw Error(ErrorKind::InvalidArgument, "the reference vertex formulas exist for n = 6 only");
      ScanOptions opts{cfg.k_min, cfg.k_max, true, cfg.fit_num_degree, cfg.fit_den_degree, cfg.threads};
      const auto report = scan_powers(path_ideal(cfg.n), opts);
      const auto comparison = compare_reference(report, path6_reference());
      const json record = {{"report", report}, {"comparison", comparison}};
      if (cfg.json_out == "-") {
        emit_json(record, "-", out);
      } else {
        print_scan_summary(report, out);
        print_comparison(comparison, out);
        if (!cfg.json_out.empty()) emit_json(record, cfg.json_out, out);
      }
      return 0;
    }
  }
  return 0;
}

inline void write_error(std::ostream& out, const std::string& kind, const std::string& message) {
  out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti diagrams of monomial ideal powers and their Boij-Soderberg decomposition polytopes",
               "betti-stab"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = default_thread_count();
  std::string fit_deg;

  auto threads_opt = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (default: BETTI_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };

  auto* formula = app.add_subcommand("formula", "closed-form diagram of S/I^k for the path ideal");
  formula->add_option("--n", cfg.n, "number of variables")->required()->check(CLI::Range(2, 1000));
  formula->add_option("--k", cfg.k, "power")->required()->check(CLI::Range(1, 100000));
  auto* formula_json = formula->add_flag("--json", "JSON output (default)");
  formula->add_flag("--table", cfg.table, "pretty table output")->excludes(formula_json);

  auto* oracle = app.add_subcommand("oracle", "Betti diagram of S/I^k from Koszul homology");
  oracle->add_option("--ideal", cfg.ideal_path, "ideal file (JSON or text)")->required()->check(CLI::ExistingFile);
  oracle->add_option("--power", cfg.k, "power k")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--degree-bound", cfg.degree_bound, "largest total degree examined");
  oracle->add_option("--num-vars", cfg.num_vars, "variable count for text ideal files");
  oracle->add_flag("--no-filter", "disable the lcm-lattice filter")->each([&](const std::string&) { cfg.lcm_filter = false; });
  oracle->add_flag("--table", cfg.table, "pretty table output");
  threads_opt(oracle);

  auto* decompose = app.add_subcommand("decompose", "greedy Boij-Soderberg decomposition");
  decompose->add_option("--diagram", cfg.diagram_path, "diagram JSON file")->required()->check(CLI::ExistingFile);

  auto* polytope = app.add_subcommand("polytope", "polytope of all decompositions");
  polytope->add_option("--diagram", cfg.diagram_path, "diagram JSON file")->required()->check(CLI::ExistingFile);
  polytope->add_flag("--prune", cfg.prune, "drop coordinates that vanish at every vertex");
  threads_opt(polytope);

  auto* scan = app.add_subcommand("scan", "sweep powers and test polytope stabilization");
  scan->add_option("--ideal", cfg.ideal_path, "ideal file (JSON or text)")->required()->check(CLI::ExistingFile);
  scan->add_option("--kmin", cfg.k_min, "first power")->required();
  scan->add_option("--kmax", cfg.k_max, "last power")->required();
  scan->add_option("--num-vars", cfg.num_vars, "variable count for text ideal files");
  scan->add_flag("--formula", cfg.formula_mode, "use the closed path formula for diagrams");
  scan->add_option("--fit-deg", fit_deg, "maximal numerator,denominator fit degrees (default 3,3)");
  scan->add_option("--json", cfg.json_out, "write the report JSON to this file ('-' for stdout)");
  threads_opt(scan);

  auto* verify = app.add_subcommand("verify-paper", "reproduce the path-ideal example and compare vertex formulas");
  verify->add_option("--n", cfg.n, "number of variables (6)")->default_val(6);
  verify->add_option("--kmin", cfg.k_min, "first power")->default_val(4);
  verify->add_option("--kmax", cfg.k_max, "last power")->default_val(10);
  verify->add_option("--fit-deg", fit_deg, "maximal numerator,denominator fit degrees (default 3,3)");
  verify->add_option("--json", cfg.json_out, "write report and comparison JSON to this file ('-' for stdout)");
  threads_opt(verify);

  try {
    app.parse(argc, argv);
    if (!fit_deg.empty()) {
      const auto comma = fit_deg.find(',');
      if (comma == std::string::npos) throw CLI::ValidationError("--fit-deg", "expected N,D");
      try {
        cfg.fit_num_degree = std::stoi(fit_deg.substr(0, comma));
        cfg.fit_den_degree = std::stoi(fit_deg.substr(comma + 1));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--fit-deg", "expected N,D");
      }
      if (cfg.fit_num_degree < 0 || cfg.fit_den_degree < 0)
        throw CLI::ValidationError("--fit-deg", "degrees must be nonnegative");
    }
    if (cfg.k_min > cfg.k_max) throw CLI::ValidationError("--kmin", "kmin must not exceed kmax");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "betti-stab: " << e.what() << "\n" << "run 'betti-stab --help' for usage\n";
    return 2;
  }

  if (formula->parsed()) cfg.command = Command::Formula;
  if (oracle->parsed()) cfg.command = Command::Oracle;
  if (decompose->parsed()) cfg.command = Command::Decompose;
  if (polytope->parsed()) cfg.command = Command::Polytope;
  if (scan->parsed()) cfg.command = Command::Scan;
  if (verify->parsed()) cfg.command = Command::VerifyPaper;

  try {
    return execute(cfg, out);
  } catch (const Error& e) {
    write_error(out, to_string(e.kind()), e.what());
  } catch (const FileError& e) {
    write_error(out, "file_error", e.what());
  } catch (const nlohmann::json::exception& e) {
    write_error(out, "parse_error", e.what());
  }
  return 1;
}

}  // namespace betti::cli
