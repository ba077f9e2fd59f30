#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "opep/arena.hpp"

using namespace opep;

TEST_CASE("outcome by length") {
  CHECK(decide(3, 2) == Outcome::first_wins);
  CHECK(decide(2, 3) == Outcome::second_wins);
  CHECK(decide(4, 4) == Outcome::tie);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const Outcome x = decide(a, b);
      const Outcome y = decide(b, a);
      if (x == Outcome::tie) {
        CHECK(y == Outcome::tie);
      } else {
        CHECK(x != y);
        CHECK(y != Outcome::tie);
      }
    }
  }
}

TEST_CASE("edgeless graphs end level") {
  const Graph g = fx::edgeless(4);
  const auto s = make_setting({1, 2}, {3, 4}, 1, g);
  for (auto a : named_combos())
    for (auto b : named_combos()) {
      const auto r = play_match(g, s, a, b, 7);
      CHECK(r.len_first == 1);
      CHECK(r.len_second == 1);
      CHECK(r.outcome == Outcome::tie);
    }
}

TEST_CASE("the follow-up move can decide a game") {
  // First player starts at 3, whose neighbours come up too late; second
  // player is handed 1 and then draws its neighbour 2.
  const Graph g(5, std::vector<Edge>{{1, 2}, {3, 4}, {3, 5}});
  const auto s = make_setting({3}, {1, 2, 4, 5}, 1, g);
  std::vector<TableSnapshot> trace;
  const auto r = play_match(g, s, kMd, kMd, 1, &trace);
  CHECK(r.len_first == 1);
  CHECK(r.len_second == 2);
  CHECK(r.outcome == Outcome::second_wins);
  REQUIRE(trace.size() == 4);
  CHECK(trace.back().len_second == 2);
}

TEST_CASE("cards are conserved on the table") {
  const Graph board = builtin_graph("board");
  Rng rng(30);
  for (int trial = 0; trial < 200; ++trial) {
    const int nd = 1 + static_cast<int>(rng.below(3));
    const auto s = random_setting(board, 3 + static_cast<int>(rng.below(6)), nd, rng);
    const auto pairs = all_named_pairings();
    const auto [a, b] = pairs[rng.below(pairs.size())];
    std::vector<TableSnapshot> trace;
    const auto r = play_match(board, s, a, b, rng.next(), &trace);
    REQUIRE_FALSE(trace.empty());
    for (const auto& t : trace) {
      CHECK(t.display + t.undrawn + t.len_first + t.len_second == 22 * nd);
      CHECK(t.display <= s.c());
    }
    // Players alternate, so lengths never drift more than one apart before the end.
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(std::abs(trace[i].len_first - trace[i].len_second) <= 1);
    CHECK(trace.back().len_first == r.len_first);
    CHECK(trace.back().len_second == r.len_second);
  }
}

TEST_CASE("matches are a function of the seed") {
  const Graph board = builtin_graph("board");
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_setting(board, 6, 2, rng);
    const auto r1 = play_match(board, s, kPp, kLcc, 1000 + static_cast<std::uint64_t>(trial));
    const auto r2 = play_match(board, s, kPp, kLcc, 1000 + static_cast<std::uint64_t>(trial));
    CHECK(r1.len_first == r2.len_first);
    CHECK(r1.len_second == r2.len_second);
  }
}

TEST_CASE("tournament totals and thread independence") {
  const Graph board = builtin_graph("board");
  const auto pairings = all_named_pairings();
  CHECK(pairings.size() == 25);
  const auto one = tournament(board, pairings, 300, 6, 2, 5, 1);
  const auto many = tournament(board, pairings, 300, 6, 2, 5, 3);
  REQUIRE(one.size() == many.size());
  for (std::size_t j = 0; j < one.size(); ++j) {
    CHECK(one[j].games() == 300);
    CHECK(one[j].first_wins == many[j].first_wins);
    CHECK(one[j].second_wins == many[j].second_wins);
    CHECK(one[j].ties == many[j].ties);
    CHECK(one[j].first_pct() + one[j].second_pct() + one[j].tie_pct() == doctest::Approx(100.0));
  }
  CHECK(tournament(board, pairings, 0, 6, 2, 5)[0].games() == 0);
}

TEST_CASE("tournament CSV") {
  PairingResult r{kRs, kPp};
  r.first_wins = 1;
  r.second_wins = 2;
  r.ties = 1;
  std::ostringstream out;
  write_tournament_csv(out, {r});
  CHECK(out.str() == "first,second,win1_pct,win2_pct,tie_pct,n_games\nrs,pp,25.000,50.000,25.000,4\n");
}
