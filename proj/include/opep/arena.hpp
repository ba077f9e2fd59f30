#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "opep/heuristics.hpp"

namespace opep {

enum class Outcome { first_wins, second_wins, tie };

// Strictly longer path wins; equal lengths tie.
Outcome decide(int len_first, int len_second);

struct GameRecord {
  HeuristicId first;
  HeuristicId second;
  int len_first = 0;
  int len_second = 0;
  Outcome outcome = Outcome::tie;
  std::uint64_t seed = 0;
};

// Snapshot taken after every card taken from the display.
struct TableSnapshot {
  int display = 0;
  int undrawn = 0;
  int len_first = 0;
  int len_second = 0;
};

// Two players alternate on one shared display, first player first. When a
// player cannot extend, the opponent gets one more move and the game ends.
// Player streams are derived from `seed`.
GameRecord play_match(const Graph& g, const FeasibleSetting& s, HeuristicId first, HeuristicId second,
                      std::uint64_t seed, std::vector<TableSnapshot>* trace = nullptr);

struct PairingResult {
  HeuristicId first;
  HeuristicId second;
  long first_wins = 0;
  long second_wins = 0;
  long ties = 0;

  long games() const { return first_wins + second_wins + ties; }
  double first_pct() const { return games() ? 100.0 * first_wins / games() : 0.0; }
  double second_pct() const { return games() ? 100.0 * second_wins / games() : 0.0; }
  double tie_pct() const { return games() ? 100.0 * ties / games() : 0.0; }
};

using Pairing = std::pair<HeuristicId, HeuristicId>;

// Every pairing plays the same num_settings random (c, nd)-settings.
std::vector<PairingResult> tournament(const Graph& g, const std::vector<Pairing>& pairings, int num_settings,
                                      int c, int nd, std::uint64_t master_seed, int jobs = 1);

// All ordered pairs of the five named combos.
std::vector<Pairing> all_named_pairings();

// CSV: first,second,win1_pct,win2_pct,tie_pct,n_games
void write_tournament_csv(std::ostream& out, const std::vector<PairingResult>& results);

}  // namespace opep
