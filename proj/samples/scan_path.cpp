// Sweeps powers of a path edge ideal with the Koszul oracle and prints the
// polytope shape per power plus the fitted vertex trajectories.
//
//   ./scan_path [n] [k_max]

#include <cstdlib>
#include <iostream>

#include "betti_stab/betti_stab.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  const int k_max = argc > 2 ? std::atoi(argv[2]) : 6;

  betti::ScanOptions options;
  options.k_min = 1;
  options.k_max = k_max;
  options.threads = betti::default_thread_count();

  try {
    const auto report = betti::scan_powers(betti::path_ideal(n), options);
    for (const auto& rec : report.records) {
      std::cout << "k = " << rec.k << ": " << rec.polytope.vertices.size() << " vertices, dimension "
                << rec.polytope.dimension() << "\n"
                << betti::render_table(rec.diagram);
    }
    std::cout << report.verdict() << "\n";
    for (std::size_t v = 0; v < report.trajectories.size(); ++v) {
      for (std::size_t c = 0; c < report.templates.size(); ++c) {
        const auto& coord = report.trajectories[v].coordinates[c];
        if (coord.fit && coord.validated)
          std::cout << "  vertex " << v + 1 << ", " << betti::to_string(report.templates[c]) << ": "
                    << betti::to_string(*coord.fit) << "\n";
      }
    }
  } catch (const betti::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
