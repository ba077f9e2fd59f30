#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "opep/heuristics.hpp"

namespace opep {

struct ExperimentConfig {
  std::string graph_name = "board";
  Graph graph;
  std::vector<int> c_values;
  std::vector<int> nd_values{1, 2, 3};
  std::vector<HeuristicId> heuristics;
  int num_settings = 0;
  // Ideal solver runs on this prefix of each cell's settings; 0 disables it.
  int num_ideal_settings = 0;
  std::uint64_t master_seed = 1;
  // Wall-clock columns are informational and break byte-identical output.
  bool timing = false;
  int jobs = 1;
};

// Defaults for a builtin graph: board c in 5..8, extended c in 7..11.
ExperimentConfig default_config(const std::string& graph_name);

inline constexpr const char* kIdealSolver = "ideal";

struct StatRow {
  std::string graph;
  int c = 0;
  int nd = 0;
  std::string solver;
  double mean_len = 0.0;
  // NaN when timing is off.
  double mean_ms = 0.0;
  double median_ms = 0.0;
  // histogram[l - 1] = number of runs with node length l, l = 1..n.
  std::vector<long> histogram;

  long runs() const;
};

// One row per (c, nd, solver); heuristics share each cell's settings.
std::vector<StatRow> run_grid(const ExperimentConfig& cfg);

// Header: graph,c,nd,solver,mean_len,mean_ms,hist_1,...,hist_n
void emit_csv(std::ostream& out, const std::vector<StatRow>& rows, int node_count);
void write_csv_file(const std::string& path, const std::vector<StatRow>& rows, int node_count);
std::vector<StatRow> read_csv(std::istream& in);

}  // namespace opep
