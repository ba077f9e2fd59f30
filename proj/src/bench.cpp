#include "opep/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "opep/exact.hpp"
#include "opep/parallel.hpp"
#include "opep/seeds.hpp"

namespace opep {

ExperimentConfig default_config(const std::string& graph_name) {
  ExperimentConfig cfg;
  cfg.graph_name = graph_name;
  cfg.graph = builtin_graph(graph_name);
  cfg.c_values = graph_name == "extended" ? std::vector<int>{7, 8, 9, 10, 11} : std::vector<int>{5, 6, 7, 8};
  cfg.heuristics = named_combos();
  return cfg;
}

long StatRow::runs() const {
  long total = 0;
  for (long h : histogram) total += h;
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Sample {
  int length = 0;
  double ms = 0.0;
};

StatRow summarize(const ExperimentConfig& cfg, int c, int nd, std::string solver, const std::vector<Sample>& samples) {
  StatRow row;
  row.graph = cfg.graph_name;
  row.c = c;
  row.nd = nd;
  row.solver = std::move(solver);
  row.histogram.assign(static_cast<std::size_t>(cfg.graph.node_count()), 0);
  if (samples.empty()) {
    row.mean_len = row.mean_ms = row.median_ms = std::numeric_limits<double>::quiet_NaN();
    return row;
  }
  long total = 0;
  std::vector<double> times;
  times.reserve(samples.size());
  for (const auto& s : samples) {
    total += s.length;
    ++row.histogram[static_cast<std::size_t>(s.length - 1)];
    times.push_back(s.ms);
  }
  row.mean_len = static_cast<double>(total) / static_cast<double>(samples.size());
  if (cfg.timing) {
    double sum = 0.0;
    for (double t : times) sum += t;
    row.mean_ms = sum / static_cast<double>(times.size());
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
    row.median_ms = times[times.size() / 2];
  } else {
    row.mean_ms = row.median_ms = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

std::vector<StatRow> run_grid(const ExperimentConfig& cfg) {
  const Graph& g = cfg.graph;
  std::vector<StatRow> rows;
  const auto count = static_cast<std::size_t>(std::max(0, cfg.num_settings));
  if (count == 0) return rows;
  const auto ideal_count = std::min(count, static_cast<std::size_t>(std::max(0, cfg.num_ideal_settings)));
  const std::size_t solvers = cfg.heuristics.size();

  for (int nd : cfg.nd_values) {
    for (int c : cfg.c_values) {
      std::vector<Sample> heur(count * solvers);
      std::vector<Sample> ideal(ideal_count);
      parallel_for(count, cfg.jobs, [&](std::size_t i) {
        Rng deck_rng = setting_stream(cfg.master_seed, c, nd, i);
        const FeasibleSetting s = random_setting(g, c, nd, deck_rng);
        for (std::size_t h = 0; h < solvers; ++h) {
          Rng rng = solver_stream(cfg.master_seed, c, nd, i, cfg.heuristics[h]);
          const auto t0 = Clock::now();
          const Path p = run_combined(g, s, cfg.heuristics[h], rng);
          const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
          heur[i * solvers + h] = {p.length(), dt.count()};
        }
        if (i < ideal_count) {
          const auto t0 = Clock::now();
          const int len = ideal_path(g, s).path.length();
          const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
          ideal[i] = {len, dt.count()};
        }
      });
      for (std::size_t h = 0; h < solvers; ++h) {
        std::vector<Sample> samples(count);
        for (std::size_t i = 0; i < count; ++i) samples[i] = heur[i * solvers + h];
        rows.push_back(summarize(cfg, c, nd, heuristic_name(cfg.heuristics[h]), samples));
      }
      if (ideal_count > 0) rows.push_back(summarize(cfg, c, nd, kIdealSolver, ideal));
    }
  }
  return rows;
}

void emit_csv(std::ostream& out, const std::vector<StatRow>& rows, int node_count) {
  out << "graph,c,nd,solver,mean_len,mean_ms";
  for (int l = 1; l <= node_count; ++l) out << ",hist_" << l;
  out << '\n';
  for (const auto& r : rows) {
    out << r.graph << ',' << r.c << ',' << r.nd << ',' << r.solver << ',' << std::fixed << std::setprecision(6)
        << r.mean_len << ',';
    if (std::isnan(r.mean_ms)) {
      out << "NA";
    } else {
      out << r.mean_ms;
    }
    for (int l = 1; l <= node_count; ++l) {
      const auto idx = static_cast<std::size_t>(l - 1);
      out << ',' << (idx < r.histogram.size() ? r.histogram[idx] : 0);
    }
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<StatRow>& rows, int node_count) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  emit_csv(out, rows, node_count);
  if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

std::vector<StatRow> read_csv(std::istream& in) {
  std::vector<StatRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  if (line.rfind("graph,c,nd,solver,mean_len,mean_ms", 0) != 0) throw InputError("not a result CSV: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < 6) throw InputError("result CSV row has too few columns");
    StatRow r;
    r.graph = cells[0];
    r.c = std::stoi(cells[1]);
    r.nd = std::stoi(cells[2]);
    r.solver = cells[3];
    r.mean_len = std::stod(cells[4]);
    r.mean_ms = cells[5] == "NA" ? std::numeric_limits<double>::quiet_NaN() : std::stod(cells[5]);
    r.median_ms = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 6; i < cells.size(); ++i) r.histogram.push_back(std::stol(cells[i]));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace opep
