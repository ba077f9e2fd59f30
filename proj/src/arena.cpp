#include "opep/arena.hpp"

#include <array>
#include <iomanip>
#include <ostream>

#include "opep/parallel.hpp"
#include "opep/seeds.hpp"

namespace opep {

Outcome decide(int len_first, int len_second) {
  if (len_first > len_second) return Outcome::first_wins;
  if (len_second > len_first) return Outcome::second_wins;
  return Outcome::tie;
}

namespace {

struct Player {
  HeuristicId id;
  Rng rng;
  Path path;
};

DecisionView view_for(const Graph& g, const Player& p, const Display& table) {
  DecisionView v;
  v.graph = &g;
  v.path = &p.path;
  v.available = table.support();
  v.cards = table.cards();
  return v;
}

// One turn; false when the player cannot move.
bool take_turn(const Graph& g, Player& p, Display& table) {
  if (p.path.empty()) {
    if (table.size() == 0) return false;
    const NodeId v = choose_start(p.id.start, view_for(g, p, table), p.rng);
    p.path.nodes.push_back(v);
    table.take(v);
    return true;
  }
  const auto e = choose_extension(p.id.ext, view_for(g, p, table), p.rng);
  if (!e) return false;
  extend(p.path, *e);
  table.take(e->node);
  return true;
}

}  // namespace

GameRecord play_match(const Graph& g, const FeasibleSetting& s, HeuristicId first, HeuristicId second,
                      std::uint64_t seed, std::vector<TableSnapshot>* trace) {
  std::array<Player, 2> players{Player{first, Rng::stream(seed, 1), {}}, Player{second, Rng::stream(seed, 2), {}}};
  Display table(s);
  auto snapshot = [&] {
    if (trace)
      trace->push_back({table.size(), table.undrawn(), players[0].path.length(), players[1].path.length()});
  };
  snapshot();
  std::size_t turn = 0;
  while (take_turn(g, players[turn], table)) {
    snapshot();
    turn ^= 1U;
  }
  // The opponent of the stalled player gets one follow-up move.
  if (take_turn(g, players[turn ^ 1U], table)) snapshot();

  GameRecord r;
  r.first = first;
  r.second = second;
  r.len_first = players[0].path.length();
  r.len_second = players[1].path.length();
  r.outcome = decide(r.len_first, r.len_second);
  r.seed = seed;
  return r;
}

std::vector<PairingResult> tournament(const Graph& g, const std::vector<Pairing>& pairings, int num_settings,
                                      int c, int nd, std::uint64_t master_seed, int jobs) {
  const auto count = static_cast<std::size_t>(std::max(0, num_settings));
  // outcomes[i * pairings + j]
  std::vector<Outcome> outcomes(count * pairings.size());
  parallel_for(count, jobs, [&](std::size_t i) {
    Rng rng = setting_stream(master_seed, c, nd, i);
    const FeasibleSetting s = random_setting(g, c, nd, rng);
    for (std::size_t j = 0; j < pairings.size(); ++j) {
      const auto [a, b] = pairings[j];
      outcomes[i * pairings.size() + j] = play_match(g, s, a, b, match_seed(master_seed, i, a, b)).outcome;
    }
  });
  std::vector<PairingResult> results;
  for (std::size_t j = 0; j < pairings.size(); ++j) {
    PairingResult r{pairings[j].first, pairings[j].second};
    for (std::size_t i = 0; i < count; ++i) {
      switch (outcomes[i * pairings.size() + j]) {
        case Outcome::first_wins: ++r.first_wins; break;
        case Outcome::second_wins: ++r.second_wins; break;
        case Outcome::tie: ++r.ties; break;
      }
    }
    results.push_back(r);
  }
  return results;
}

std::vector<Pairing> all_named_pairings() {
  std::vector<Pairing> out;
  for (auto a : named_combos())
    for (auto b : named_combos()) out.emplace_back(a, b);
  return out;
}

void write_tournament_csv(std::ostream& out, const std::vector<PairingResult>& results) {
  out << "first,second,win1_pct,win2_pct,tie_pct,n_games\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : results) {
    out << heuristic_name(r.first) << ',' << heuristic_name(r.second) << ',' << r.first_pct() << ','
        << r.second_pct() << ',' << r.tie_pct() << ',' << r.games() << '\n';
  }
}

}  // namespace opep
