#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "opep/arena.hpp"
#include "opep/bench.hpp"
#include "opep/exact.hpp"
#include "opep/seeds.hpp"

using namespace opep;

namespace {

struct Globals {
  std::string graph = "board";
  std::uint64_t seed = 1;
  std::string out;
  int jobs = 1;
};

Graph load(const std::string& name) {
  if (name == "board" || name == "extended") return builtin_graph(name);
  return read_edge_file(name);
}

// Writes to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (file_ && !file_->flush()) throw std::runtime_error("write to " + path_ + " failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

std::vector<FeasibleSetting> settings_from(const std::string& record, const std::string& file, const Graph& g) {
  if (!record.empty()) return {parse_setting(record, g)};
  std::ifstream in(file);
  if (!in) throw InputError("cannot open settings file " + file);
  try {
    return read_settings(in, g);
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::vector<HeuristicId> heuristics_from(const std::vector<std::string>& names, const std::string& start,
                                         const std::string& ext, bool all) {
  if (all) return all_combos();
  std::vector<HeuristicId> out;
  for (const auto& n : names) out.push_back(parse_heuristic(n));
  if (!start.empty() || !ext.empty()) {
    if (start.empty() || ext.empty()) throw CLI::ValidationError("--start and --ext go together");
    out.push_back({parse_start_rule(start), parse_ext_rule(ext)});
  }
  if (out.empty()) out = named_combos();
  return out;
}

std::string path_text(const Path& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) os << (i ? " " : "") << p.nodes[i];
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online path extension: heuristics, ideal paths and tournaments"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--graph", gl.graph, "board, extended or an edge-list file")->capture_default_str();
  app.add_option("--seed", gl.seed, "master seed")->capture_default_str();
  app.add_option("--out", gl.out, "output file (default stdout)");
  app.add_option("--jobs", gl.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "write random settings, one record per line");
  int gen_c = 6;
  int gen_nd = 2;
  int gen_count = 100;
  gen->add_option("--c", gen_c, "initial cards")->capture_default_str();
  gen->add_option("--nd", gen_nd, "copies of each node")->capture_default_str();
  gen->add_option("--count", gen_count, "number of settings")->check(CLI::NonNegativeNumber)->capture_default_str();

  // run
  auto* run = app.add_subcommand("run", "heuristic grid over c and nd; CSV with histograms");
  std::vector<int> run_c;
  std::vector<int> run_nd;
  int run_settings = 1000;
  int run_ideal = 0;
  std::vector<std::string> run_heur;
  std::string run_start;
  std::string run_ext;
  bool run_all = false;
  bool run_timing = false;
  run->add_option("--c", run_c, "c values (default from graph)")->delimiter(',');
  run->add_option("--nd", run_nd, "nd values (default 1,2,3)")->delimiter(',');
  run->add_option("--settings", run_settings, "settings per cell")->check(CLI::NonNegativeNumber)->capture_default_str();
  run->add_option("--ideal", run_ideal, "also solve this prefix exactly")->check(CLI::NonNegativeNumber)->capture_default_str();
  run->add_option("--heuristics", run_heur, "rs|md|mt|lcc|pp or start/ext")->delimiter(',');
  run->add_option("--start", run_start, "start rule: random|degree|connected|longest_path");
  run->add_option("--ext", run_ext, "extension rule: random|degree|tentacles|connected|longest_path");
  run->add_flag("--all-combos", run_all, "all 20 start/extension pairs");
  run->add_flag("--timing", run_timing, "fill the mean_ms column");

  // exact
  auto* exact = app.add_subcommand("exact", "ideal path length for each setting");
  std::string ex_record;
  std::string ex_file;
  bool ex_path = false;
  auto* ex_rec_opt = exact->add_option("--setting", ex_record, "one setting record");
  exact->add_option("--settings-file", ex_file, "file of setting records")->excludes(ex_rec_opt);
  exact->add_flag("--path", ex_path, "print the path after its length");

  // allpairs
  auto* allpairs = app.add_subcommand("allpairs", "mean length of all 20 start/extension pairs");
  int ap_c = 6;
  int ap_nd = 2;
  int ap_settings = 10000;
  allpairs->add_option("--c", ap_c)->capture_default_str();
  allpairs->add_option("--nd", ap_nd)->capture_default_str();
  allpairs->add_option("--settings", ap_settings)->check(CLI::NonNegativeNumber)->capture_default_str();

  // tournament
  auto* tour = app.add_subcommand("tournament", "two-player games on a shared display");
  int t_c = 6;
  int t_nd = 2;
  int t_settings = 10000;
  std::vector<std::string> t_pairs;
  tour->add_option("--c", t_c)->capture_default_str();
  tour->add_option("--nd", t_nd)->capture_default_str();
  tour->add_option("--settings", t_settings)->check(CLI::NonNegativeNumber)->capture_default_str();
  tour->add_option("--pairings", t_pairs, "first:second pairs (default all named)")->delimiter(',');

  // export-lp
  auto* lp = app.add_subcommand("export-lp", "integer program for the ideal path, LP format");
  std::string lp_record;
  std::string lp_file;
  auto* lp_rec_opt = lp->add_option("--setting", lp_record, "one setting record");
  lp->add_option("--settings-file", lp_file, "first record of this file")->excludes(lp_rec_opt);

  // replay
  auto* rep = app.add_subcommand("replay", "check a move log and print the resulting path");
  std::string rep_record;
  std::string rep_moves;
  std::string rep_mode = "cumulative";
  rep->add_option("--setting", rep_record, "setting record")->required();
  rep->add_option("--moves", rep_moves, "move log file")->required();
  rep->add_option("--mode", rep_mode, "cumulative|display")
      ->check(CLI::IsMember({"cumulative", "display"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Graph g = load(gl.graph);
    Sink sink(gl.out);
    std::ostream& out = sink.stream();

    if (*gen) {
      std::vector<FeasibleSetting> all;
      for (int i = 0; i < gen_count; ++i) {
        Rng rng = setting_stream(gl.seed, gen_c, gen_nd, static_cast<std::uint64_t>(i));
        all.push_back(random_setting(g, gen_c, gen_nd, rng));
      }
      write_settings(out, all);
    } else if (*run) {
      ExperimentConfig cfg;
      cfg.graph_name = gl.graph;
      if (gl.graph == "board" || gl.graph == "extended") {
        cfg = default_config(gl.graph);
      } else {
        cfg.graph = g;
        cfg.c_values = {5, 6, 7, 8};
      }
      if (!run_c.empty()) cfg.c_values = run_c;
      if (!run_nd.empty()) cfg.nd_values = run_nd;
      cfg.heuristics = heuristics_from(run_heur, run_start, run_ext, run_all);
      cfg.num_settings = run_settings;
      cfg.num_ideal_settings = run_ideal;
      cfg.master_seed = gl.seed;
      cfg.timing = run_timing;
      cfg.jobs = gl.jobs;
      emit_csv(out, run_grid(cfg), g.node_count());
    } else if (*exact) {
      if (ex_record.empty() && ex_file.empty()) throw CLI::RequiredError("--setting or --settings-file");
      for (const auto& s : settings_from(ex_record, ex_file, g)) {
        const auto r = ideal_path(g, s);
        out << r.path.length();
        if (ex_path) out << '\t' << path_text(r.path);
        out << '\n';
      }
    } else if (*allpairs) {
      ExperimentConfig cfg;
      cfg.graph_name = gl.graph;
      cfg.graph = g;
      cfg.c_values = {ap_c};
      cfg.nd_values = {ap_nd};
      cfg.heuristics = all_combos();
      cfg.num_settings = ap_settings;
      cfg.master_seed = gl.seed;
      cfg.jobs = gl.jobs;
      const auto rows = run_grid(cfg);
      out << "start";
      for (auto e : {ExtRule::random, ExtRule::degree, ExtRule::tentacles, ExtRule::connected, ExtRule::longest_path})
        out << ',' << to_string(e);
      out << '\n' << std::fixed << std::setprecision(4);
      for (std::size_t s = 0; s < 4 && !rows.empty(); ++s) {
        out << to_string(all_combos()[s * 5].start);
        for (std::size_t e = 0; e < 5; ++e) out << ',' << rows[s * 5 + e].mean_len;
        out << '\n';
      }
    } else if (*tour) {
      std::vector<Pairing> pairings;
      for (const auto& p : t_pairs) {
        const auto colon = p.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("pairing \"" + p + "\" needs first:second");
        pairings.emplace_back(parse_heuristic(p.substr(0, colon)), parse_heuristic(p.substr(colon + 1)));
      }
      if (pairings.empty()) pairings = all_named_pairings();
      write_tournament_csv(out, tournament(g, pairings, t_settings, t_c, t_nd, gl.seed, gl.jobs));
    } else if (*lp) {
      if (lp_record.empty() && lp_file.empty()) throw CLI::RequiredError("--setting or --settings-file");
      const auto all = settings_from(lp_record, lp_file, g);
      if (all.empty()) throw InputError("no setting to export");
      write_lp(out, g, all.front());
    } else if (*rep) {
      const auto s = parse_setting(rep_record, g);
      std::ifstream in(rep_moves);
      if (!in) throw InputError("cannot open move log " + rep_moves);
      const auto moves = parse_move_log(in);
      const Mode mode = rep_mode == "display" ? Mode::display_consuming : Mode::single_player_cumulative;
      const auto st = replay(g, s, mode, moves);
      out << st.path().length() << '\t' << path_text(st.path()) << '\n';
    }
    sink.close();
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
