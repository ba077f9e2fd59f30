#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "opep/exact.hpp"
#include "opep/heuristics.hpp"

using namespace opep;
using fx::h;

namespace {

// A decision view over a fixed available set; the card list is the set itself.
struct View {
  Graph g;
  Path p;
  std::vector<NodeId> cards;
  DecisionView v;

  View(Graph graph, Path path, std::vector<NodeId> avail) : g(std::move(graph)), p(std::move(path)), cards(std::move(avail)) {
    v.graph = &g;
    v.path = &p;
    v.available = g.empty_set();
    for (NodeId x : cards) v.available.insert(x);
    for (NodeId x : p.nodes) v.available.insert(x);
    v.cards = cards;
  }
};

std::vector<NodeId> hs(std::initializer_list<int> names) {
  std::vector<NodeId> out;
  for (int x : names) out.push_back(h(x));
  return out;
}

Path hpath(std::initializer_list<int> names) { return Path{hs(names)}; }

// Same heuristic call under many seeds; returns the distinct outcomes.
template <typename F>
auto outcomes(F&& f) {
  std::set<decltype(f(std::declval<Rng&>()))> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng(seed);
    seen.insert(f(rng));
  }
  return seen;
}

std::pair<NodeId, int> key(const std::optional<Extension>& e) {
  REQUIRE(e.has_value());
  return {e->node, e->pos == Side::front ? 0 : 1};
}

int tentacles_after(const Graph& g, Path p, Extension e) {
  extend(p, canonical(p, e));
  return tentacle_count(g, p);
}

}  // namespace

TEST_CASE("names and parsing") {
  CHECK(named_combos().size() == 5);
  CHECK(all_combos().size() == 20);
  CHECK(heuristic_name(kPp) == "pp");
  CHECK(heuristic_name({StartRule::random, ExtRule::tentacles}) == "random/tentacles");
  CHECK(parse_heuristic("lcc") == kLcc);
  CHECK(parse_heuristic("degree/tentacle") == kMt);
  CHECK(parse_heuristic("longest_path/connected") == HeuristicId{StartRule::longest_path, ExtRule::connected});
  for (auto id : all_combos()) CHECK(parse_heuristic(heuristic_name(id)) == id);
  CHECK_THROWS_AS(parse_heuristic("xx"), InputError);
  CHECK_THROWS_AS(parse_heuristic("random/teleport"), InputError);
}

TEST_CASE("initialization rules on the illustration graph") {
  const View w(fx::heuristic_graph(), Path{}, hs({3, 4, 5, 7, 8, 12}));
  CHECK(outcomes([&](Rng& r) { return start_degree(w.v, r); }) == std::set<NodeId>{h(5)});
  CHECK(outcomes([&](Rng& r) { return start_connected(w.v, r); }) == std::set<NodeId>{h(4)});
  const auto lp = outcomes([&](Rng& r) { return start_longest_path(w.v, r); });
  CHECK(lp.size() >= 1);
  for (NodeId v : lp) CHECK((v == h(3) || v == h(12)));
}

TEST_CASE("extension rules on the illustration graph") {
  const View w(fx::heuristic_graph(), hpath({2, 5, 10}), hs({3, 4, 6, 7, 9, 11}));
  const auto deg = outcomes([&](Rng& r) { return key(ext_degree(w.v, r)); });
  CHECK(deg == std::set<std::pair<NodeId, int>>{{h(6), 0}, {h(6), 1}});

  const auto t = ext_tentacles(w.v);
  REQUIRE(t);
  CHECK(*t == Extension{h(3), Side::front});
  CHECK(tentacles_after(w.g, w.p, *t) == 4);
  CHECK(tentacles_after(w.g, w.p, {h(11), Side::back}) == 4);

  const auto conn = outcomes([&](Rng& r) { return ext_connected(w.v, r)->node; });
  CHECK(conn == std::set<NodeId>{h(3)});
}

TEST_CASE("longest-path extension follows a best plan") {
  const View w(fx::heuristic_graph(), hpath({2, 5, 10}), hs({3, 4, 6, 7, 9, 11}));
  // Plans straight from enumeration: longest paths through the adjacent
  // component that keep the current path as a block, then most tentacles.
  std::vector<NodeId> allowed = hs({3, 4, 6, 7, 11});
  allowed.insert(allowed.end(), w.p.nodes.begin(), w.p.nodes.end());
  int best_len = 0;
  int best_t = -1;
  std::set<std::pair<NodeId, int>> moves;
  fx::all_simple_paths(w.g, allowed, [&](const std::vector<NodeId>& q) {
    const auto at = std::search(q.begin(), q.end(), w.p.nodes.begin(), w.p.nodes.end());
    if (at == q.end()) return;
    const int len = static_cast<int>(q.size());
    const int t = tentacle_count(w.g, Path{q});
    if (len < best_len || (len == best_len && t < best_t)) return;
    if (len > best_len || t > best_t) moves.clear();
    best_len = len;
    best_t = t;
    if (at != q.begin()) moves.insert({*(at - 1), 0});
    if (at + 3 != q.end()) moves.insert({*(at + 3), 1});
  });
  CHECK(best_len == 7);
  const auto got = outcomes([&](Rng& r) { return key(ext_longest_path(w.v, r)); });
  for (const auto& m : got) {
    CAPTURE(m.first);
    CHECK(moves.count(m) == 1);
  }
}

TEST_CASE("random start weighs cards by multiplicity") {
  const Graph g = fx::edgeless(5);
  const std::vector<NodeId> cards{1, 1, 2, 3, 4, 5};
  DecisionView v;
  v.graph = &g;
  Path empty;
  v.path = &empty;
  v.available = fx::set_of(g, {1, 2, 3, 4, 5});
  v.cards = cards;
  Rng rng(8);
  constexpr int kDraws = 60000;
  std::vector<int> hits(6, 0);
  for (int i = 0; i < kDraws; ++i) ++hits[static_cast<std::size_t>(start_random(v, rng))];
  CHECK(std::abs(hits[1] - kDraws / 3.0) < 500);
  for (NodeId x = 2; x <= 5; ++x) CHECK(std::abs(hits[static_cast<std::size_t>(x)] - kDraws / 6.0) < 450);
}

TEST_CASE("rules without a nontrivial component fall back") {
  const Graph board = builtin_graph("board");
  const View w(board, Path{}, {2, 5, 6, 13, 18, 22});
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    Rng a(seed);
    Rng b(seed);
    Rng c(seed);
    const NodeId d = start_degree(w.v, a);
    CHECK(start_connected(w.v, b) == d);
    CHECK(start_longest_path(w.v, c) == d);
  }

  // Every adjacent component is a singleton: tentacle rule decides.
  const View e(board, Path{{1, 2}}, {3, 6, 17, 22});
  for (const auto& comp : adjacent_components(board, e.v.available, e.p)) REQUIRE(comp.size() == 1);
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    Rng a(seed);
    Rng b(seed);
    CHECK(ext_connected(e.v, a) == ext_tentacles(e.v));
    CHECK(ext_longest_path(e.v, b) == ext_tentacles(e.v));
  }
}

TEST_CASE("tentacle rule picks the first best move") {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(12));
    const Graph g = fx::random_connected_graph(n, 0.3, rng);
    const Path p = fx::random_simple_path(g, rng, 1 + static_cast<int>(rng.below(4)));
    std::vector<NodeId> avail;
    for (NodeId v = 1; v <= n; ++v)
      if (rng.coin()) avail.push_back(v);
    const View w(g, p, avail);
    const auto ext = feasible_extensions(g, p, w.v.available);
    const auto got = ext_tentacles(w.v);
    if (ext.empty()) {
      CHECK_FALSE(got);
      continue;
    }
    REQUIRE(got);
    int best = -1;
    Extension first;
    for (const auto& e : ext) {
      const int t = tentacles_after(g, p, e);
      if (t > best) {
        best = t;
        first = e;
      }
    }
    CHECK(*got == first);
  }
}

TEST_CASE("every rule returns a legal move and stops only when stuck") {
  Rng rng(10);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(10));
    const Graph g = fx::random_connected_graph(n, 0.25, rng);
    const auto s = random_setting(g, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))), 1 + static_cast<int>(rng.below(2)), rng);
    for (auto id : all_combos()) {
      CAPTURE(heuristic_name(id));
      OpepState st(g, s, Mode::single_player_cumulative);
      const NodeId start = choose_start(id.start, st.view(), rng);
      CHECK(st.legal_starts().contains(start));
      st.apply_start(start);
      while (true) {
        const auto e = choose_extension(id.ext, st.view(), rng);
        const auto legal = st.feasible_extensions();
        if (!e) {
          CHECK(legal.empty());
          break;
        }
        CHECK(std::find(legal.begin(), legal.end(), canonical(st.path(), *e)) != legal.end());
        st.apply_extension(*e);
      }
      CHECK(st.is_terminal());
    }
  }
}

TEST_CASE("runs never beat the ideal path") {
  const Graph board = builtin_graph("board");
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_setting(board, 5 + static_cast<int>(rng.below(4)), 1, rng);
    const int best = ideal_path(board, s).path.length();
    for (auto id : named_combos()) {
      const Path p = run_combined(board, s, id, rng);
      CHECK(is_simple_path(board, p));
      CHECK(p.length() <= best);
    }
  }
}

TEST_CASE("worst-case deck stops informed starts at once") {
  const Graph board = builtin_graph("board");
  const auto s = fx::worst_case_setting(board);
  for (auto id : all_combos()) {
    if (id.start == StartRule::random) continue;
    CAPTURE(heuristic_name(id));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Rng rng(seed);
      CHECK(run_combined(board, s, id, rng).length() == 1);
    }
  }
}

TEST_CASE("runs are a function of the seed") {
  const Graph board = builtin_graph("board");
  Rng deal(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_setting(board, 6, 2, deal);
    for (auto id : all_combos()) {
      Rng a(static_cast<std::uint64_t>(trial));
      Rng b(static_cast<std::uint64_t>(trial));
      CHECK(run_combined(board, s, id, a) == run_combined(board, s, id, b));
    }
  }
}
