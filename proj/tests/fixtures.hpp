#pragma once

// Shared graphs, settings and independent oracles for the unit tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "opep/deck.hpp"
#include "opep/engine.hpp"
#include "opep/graph.hpp"
#include "opep/rng.hpp"

namespace fx {

using opep::Edge;
using opep::Graph;
using opep::NodeId;
using opep::Path;

// Tentacle example graph; the same 18-node drawing is reused for the
// two-sided longest extension example. Ids are the drawing's node names.
inline Graph tentacle_graph() {
  const std::vector<Edge> e{{2, 3},  {2, 6},   {3, 8},   {6, 7},   {7, 10},  {7, 11}, {10, 11},
                            {8, 11}, {7, 8},   {1, 2},   {1, 6},   {2, 16},  {3, 4},  {3, 17},
                            {3, 18}, {5, 6},   {6, 13},  {8, 9},   {9, 11},  {10, 13}, {10, 14},
                            {11, 12}, {11, 14}, {11, 15}};
  return Graph(18, e);
}

// Heuristic illustration graph. The drawing names nodes -2..12; here they are
// shifted by +3 so ids run 1..15. Use h(x) to convert a drawing name.
constexpr NodeId h(int drawing_name) { return drawing_name + 3; }

inline Graph heuristic_graph() {
  const std::vector<std::pair<int, int>> raw{{-2, 9}, {-1, -2}, {-1, 5}, {0, -1},  {0, 1},  {0, 5},  {2, 3},  {2, 5},
                                             {2, 6},  {3, 7},   {4, 7},  {5, 6},   {5, 9},  {5, 10}, {6, 7},  {6, 10},
                                             {7, 8},  {7, 11},  {8, 12}, {9, 10},  {10, 11}, {11, 12}};
  std::vector<Edge> e;
  for (auto [a, b] : raw) e.emplace_back(h(a), h(b));
  return Graph(15, e);
}

inline opep::NodeSet set_of(const Graph& g, std::initializer_list<NodeId> ids) {
  return opep::NodeSet(g.node_count(), ids);
}

// Worst-case instance on the board graph: independent initial set, deck order
// read off the iteration labels.
inline opep::FeasibleSetting worst_case_setting(const Graph& board) {
  return opep::make_setting({2, 5, 6, 13, 18, 22}, {4, 10, 17, 21, 20, 19, 11, 1, 3, 9, 16, 15, 14, 12, 7, 8}, 1,
                            board);
}

inline Graph edgeless(int n) { return Graph(n, std::vector<Edge>{}); }

// G(n, p) conditioned on connectivity by adding a random spanning tree first.
inline Graph random_connected_graph(int n, double p, opep::Rng& rng) {
  std::vector<std::vector<bool>> has(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1));
  std::vector<Edge> edges;
  auto add = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    if (a == b || has[a][b]) return;
    has[a][b] = true;
    edges.emplace_back(a, b);
  };
  for (NodeId v = 2; v <= n; ++v) add(v, static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(v - 1))));
  const auto threshold = static_cast<std::uint64_t>(p * 1000000.0);
  for (NodeId a = 1; a <= n; ++a)
    for (NodeId b = a + 1; b <= n; ++b)
      if (rng.below(1000000) < threshold) add(a, b);
  return Graph(n, edges);
}

inline Graph random_tree(int n, opep::Rng& rng) { return random_connected_graph(n, 0.0, rng); }

// Random simple path grown by a random walk that avoids revisits.
inline Path random_simple_path(const Graph& g, opep::Rng& rng, int max_len) {
  Path p;
  p.nodes.push_back(static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(g.node_count()))));
  while (p.length() < max_len) {
    std::vector<NodeId> next;
    for (NodeId w : g.neighbors(p.back()))
      if (std::find(p.nodes.begin(), p.nodes.end(), w) == p.nodes.end()) next.push_back(w);
    if (next.empty()) break;
    p.nodes.push_back(next[rng.below(next.size())]);
  }
  return p;
}

// Tentacles straight from the definition: off-path nodes next to an end.
inline std::vector<NodeId> tentacles_oracle(const Graph& g, const Path& p) {
  std::vector<NodeId> out;
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (std::find(p.nodes.begin(), p.nodes.end(), v) != p.nodes.end()) continue;
    if (g.adjacent(v, p.front()) || g.adjacent(v, p.back())) out.push_back(v);
  }
  return out;
}

// Every simple path (both orientations) inside `allowed`, via adjacency matrix.
inline void all_simple_paths(const Graph& g, const std::vector<NodeId>& allowed,
                             const std::function<void(const std::vector<NodeId>&)>& visit) {
  std::vector<NodeId> cur;
  std::vector<bool> on(static_cast<std::size_t>(g.node_count()) + 1, false);
  std::function<void()> grow = [&] {
    visit(cur);
    for (NodeId w : allowed) {
      if (on[w] || !g.adjacent(cur.back(), w)) continue;
      on[w] = true;
      cur.push_back(w);
      grow();
      cur.pop_back();
      on[w] = false;
    }
  };
  for (NodeId s : allowed) {
    on[s] = true;
    cur.assign(1, s);
    grow();
    on[s] = false;
  }
}

inline int longest_path_oracle(const Graph& g, const std::vector<NodeId>& allowed) {
  int best = 0;
  all_simple_paths(g, allowed, [&](const std::vector<NodeId>& p) { best = std::max(best, static_cast<int>(p.size())); });
  return best;
}

// Longest simple path in p + z containing p as a contiguous block, either orientation.
inline int longest_containing_oracle(const Graph& g, const std::vector<NodeId>& z, const Path& p) {
  std::vector<NodeId> allowed = z;
  allowed.insert(allowed.end(), p.nodes.begin(), p.nodes.end());
  int best = 0;
  const auto& core = p.nodes;
  all_simple_paths(g, allowed, [&](const std::vector<NodeId>& q) {
    if (q.size() < core.size()) return;
    if (std::search(q.begin(), q.end(), core.begin(), core.end()) != q.end())
      best = std::max(best, static_cast<int>(q.size()));
  });
  return best;
}

// Induced subgraph on `keep`, relabelled 1..|keep| in ascending order.
inline Graph induced_relabelled(const Graph& g, std::vector<NodeId> keep, std::map<NodeId, NodeId>& label) {
  std::sort(keep.begin(), keep.end());
  label.clear();
  for (std::size_t i = 0; i < keep.size(); ++i) label[keep[i]] = static_cast<NodeId>(i + 1);
  std::vector<Edge> e;
  for (auto [a, b] : g.edges())
    if (label.count(a) && label.count(b)) e.emplace_back(label[a], label[b]);
  return Graph(static_cast<int>(keep.size()), e);
}

}  // namespace fx
