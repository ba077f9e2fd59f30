#include "opep/heuristics.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace opep {

std::vector<HeuristicId> named_combos() { return {kRs, kMd, kMt, kLcc, kPp}; }

std::vector<HeuristicId> all_combos() {
  std::vector<HeuristicId> out;
  for (auto s : {StartRule::random, StartRule::degree, StartRule::connected, StartRule::longest_path})
    for (auto e : {ExtRule::random, ExtRule::degree, ExtRule::tentacles, ExtRule::connected, ExtRule::longest_path})
      out.push_back({s, e});
  return out;
}

namespace {

constexpr std::array<std::string_view, 4> kStartNames{"random", "degree", "connected", "longest_path"};
constexpr std::array<std::string_view, 5> kExtNames{"random", "degree", "tentacles", "connected", "longest_path"};

struct Named {
  std::string_view acronym;
  HeuristicId id;
};
constexpr std::array<Named, 5> kNamed{{{"rs", kRs}, {"md", kMd}, {"mt", kMt}, {"lcc", kLcc}, {"pp", kPp}}};

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  return items[items.size() == 1 ? 0 : static_cast<std::size_t>(rng.below(items.size()))];
}

const Path& path_of(const DecisionView& v) { return *v.path; }

// Side for an already-chosen tentacle; random when both ends qualify.
Extension attach(const DecisionView& v, NodeId node, Rng& rng) {
  const Path& p = path_of(v);
  const Graph& g = *v.graph;
  if (p.length() == 1) return {node, Side::back};
  const bool at_front = g.adjacent(node, p.front());
  const bool at_back = g.adjacent(node, p.back());
  if (at_front && at_back) return {node, rng.coin() ? Side::front : Side::back};
  return {node, at_front ? Side::front : Side::back};
}

NodeSet available_tentacles(const DecisionView& v) { return tentacles(*v.graph, path_of(v)) & v.available; }

// Nodes of s minimizing (or maximizing) degree, ascending.
std::vector<NodeId> degree_extremes(const Graph& g, const NodeSet& s, bool want_max) {
  std::vector<NodeId> best;
  int best_degree = want_max ? -1 : std::numeric_limits<int>::max();
  s.for_each([&](NodeId u) {
    const int d = g.degree(u);
    if (d == best_degree) {
      best.push_back(u);
    } else if (want_max ? d > best_degree : d < best_degree) {
      best_degree = d;
      best.assign(1, u);
    }
  });
  return best;
}

int max_size(const std::vector<NodeSet>& comps) {
  int z = 0;
  for (const auto& c : comps) z = std::max(z, c.size());
  return z;
}

NodeSet union_of_size(const Graph& g, const std::vector<NodeSet>& comps, int z) {
  NodeSet out = g.empty_set();
  for (const auto& c : comps)
    if (c.size() == z) out |= c;
  return out;
}

// Tentacle count of the path whose end nodes are a and b and whose members are `members`.
int tentacles_between(const Graph& g, const NodeSet& members, NodeId a, NodeId b) {
  return ((g.neighbor_set(a) | g.neighbor_set(b)) - members).size();
}

// Sample among the candidates with the most tentacles.
const Path& sample_max_tentacles(const Graph& g, const std::vector<Path>& paths, Rng& rng, int& tentacle_out) {
  std::vector<std::size_t> best;
  int best_t = -1;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int t = tentacle_count(g, paths[i]);
    if (t > best_t) {
      best_t = t;
      best.assign(1, i);
    } else if (t == best_t) {
      best.push_back(i);
    }
  }
  tentacle_out = best_t;
  return paths[pick(best, rng)];
}

}  // namespace

std::string_view to_string(StartRule r) { return kStartNames[static_cast<std::size_t>(r)]; }
std::string_view to_string(ExtRule r) { return kExtNames[static_cast<std::size_t>(r)]; }

StartRule parse_start_rule(std::string_view s) {
  for (std::size_t i = 0; i < kStartNames.size(); ++i)
    if (kStartNames[i] == s) return static_cast<StartRule>(i);
  throw InputError("unknown start rule \"" + std::string(s) + "\"");
}

ExtRule parse_ext_rule(std::string_view s) {
  if (s == "tentacle") return ExtRule::tentacles;
  for (std::size_t i = 0; i < kExtNames.size(); ++i)
    if (kExtNames[i] == s) return static_cast<ExtRule>(i);
  throw InputError("unknown extension rule \"" + std::string(s) + "\"");
}

std::string heuristic_name(HeuristicId id) {
  for (const auto& n : kNamed)
    if (n.id == id) return std::string(n.acronym);
  return std::string(to_string(id.start)) + "/" + std::string(to_string(id.ext));
}

HeuristicId parse_heuristic(std::string_view s) {
  for (const auto& n : kNamed)
    if (n.acronym == s) return n.id;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) throw InputError("unknown heuristic \"" + std::string(s) + "\"");
  return {parse_start_rule(s.substr(0, slash)), parse_ext_rule(s.substr(slash + 1))};
}

NodeId start_random(const DecisionView& v, Rng& rng) {
  return v.cards[v.cards.size() == 1 ? 0 : static_cast<std::size_t>(rng.below(v.cards.size()))];
}

NodeId start_degree(const DecisionView& v, Rng& rng) {
  return pick(degree_extremes(*v.graph, v.available, true), rng);
}

NodeId start_connected(const DecisionView& v, Rng& rng) {
  const Graph& g = *v.graph;
  const auto comps = connected_components(g, v.available);
  const int z = max_size(comps);
  if (z <= 1) return start_degree(v, rng);
  return pick(degree_extremes(g, union_of_size(g, comps, z), false), rng);
}

NodeId start_longest_path(const DecisionView& v, Rng& rng) {
  const Graph& g = *v.graph;
  const auto comps = connected_components(g, v.available);
  const int z = max_size(comps);
  if (z <= 1) return start_degree(v, rng);
  const int kappa = std::min(z, 3);
  int best_len = 0;
  int best_t = 0;
  Path best;
  for (const auto& comp : comps) {
    if (comp.size() < kappa) continue;
    const auto paths = longest_paths_in(g, comp);
    int t = 0;
    const Path& cand = sample_max_tentacles(g, paths, rng, t);
    if (cand.length() > best_len || (cand.length() == best_len && t > best_t)) {
      best_len = cand.length();
      best_t = t;
      best = cand;
    }
  }
  // Lower-degree end node of the planned path.
  const int df = g.degree(best.front());
  const int db = g.degree(best.back());
  if (df != db) return df < db ? best.front() : best.back();
  return rng.coin() ? best.front() : best.back();
}

std::optional<Extension> ext_random(const DecisionView& v, Rng& rng) {
  const auto cand = available_tentacles(v).to_vector();
  if (cand.empty()) return std::nullopt;
  return attach(v, pick(cand, rng), rng);
}

std::optional<Extension> ext_degree(const DecisionView& v, Rng& rng) {
  const NodeSet cand = available_tentacles(v);
  if (cand.empty()) return std::nullopt;
  return attach(v, pick(degree_extremes(*v.graph, cand, true), rng), rng);
}

std::optional<Extension> ext_tentacles(const DecisionView& v) {
  const Graph& g = *v.graph;
  const Path& p = path_of(v);
  const NodeSet cand = available_tentacles(v);
  if (cand.empty()) return std::nullopt;
  NodeSet members = node_set_of(g, p);
  const bool single = p.length() == 1;
  // Starts below zero so the first candidate is always recorded.
  int best = -1;
  Extension choice;
  cand.for_each([&](NodeId u) {
    members.insert(u);
    if (!single && g.adjacent(u, p.front())) {
      const int t = tentacles_between(g, members, u, p.back());
      if (t > best) {
        best = t;
        choice = {u, Side::front};
      }
    }
    if (g.adjacent(u, p.back())) {
      const int t = tentacles_between(g, members, p.front(), u);
      if (t > best) {
        best = t;
        choice = {u, Side::back};
      }
    }
    members.erase(u);
  });
  return choice;
}

std::optional<Extension> ext_connected(const DecisionView& v, Rng& rng) {
  const Graph& g = *v.graph;
  const NodeSet cand = available_tentacles(v);
  if (cand.empty()) return std::nullopt;
  const auto comps = adjacent_components(g, v.available, path_of(v));
  const int z = max_size(comps);
  if (z <= 1) return ext_tentacles(v);
  const auto lows = degree_extremes(g, union_of_size(g, comps, z) & cand, false);
  return attach(v, pick(lows, rng), rng);
}

std::optional<Extension> ext_longest_path(const DecisionView& v, Rng& rng) {
  const Graph& g = *v.graph;
  const Path& p = path_of(v);
  const NodeSet cand = available_tentacles(v);
  if (cand.empty()) return std::nullopt;
  const auto comps = adjacent_components(g, v.available, p);
  const int z = max_size(comps);
  if (z <= 1) return ext_tentacles(v);
  const int kappa = std::min(z, 3);
  int best_len = 0;
  int best_t = 0;
  Path plan;
  for (const auto& comp : comps) {
    if (comp.size() < kappa) continue;
    const auto paths = longest_extensions_containing(g, comp, p);
    int t = 0;
    const Path& c = sample_max_tentacles(g, paths, rng, t);
    if (c.length() > best_len || (c.length() == best_len && t > best_t)) {
      best_len = c.length();
      best_t = t;
      plan = c;
    }
  }

  // Locate p inside the plan; its neighbours there are the candidate moves.
  const auto at = static_cast<std::size_t>(std::find(plan.nodes.begin(), plan.nodes.end(), p.front()) - plan.nodes.begin());
  const std::size_t len = p.nodes.size();
  std::optional<Extension> front;
  std::optional<Extension> back;
  if (len == 1) {
    if (at > 0) front = Extension{plan.nodes[at - 1], Side::back};
    if (at + 1 < plan.nodes.size()) back = Extension{plan.nodes[at + 1], Side::back};
  } else {
    if (at > 0) front = Extension{plan.nodes[at - 1], Side::front};
    if (at + len < plan.nodes.size()) back = Extension{plan.nodes[at + len], Side::back};
  }
  if (!front) return back;
  if (!back) return front;

  NodeSet members = node_set_of(g, p);
  auto score = [&](const Extension& e, bool is_front) {
    members.insert(e.node);
    const int t = is_front ? tentacles_between(g, members, e.node, p.back())
                           : tentacles_between(g, members, p.front(), e.node);
    members.erase(e.node);
    return t;
  };
  const int tf = score(*front, true);
  const int tb = score(*back, false);
  if (tf != tb) return tf > tb ? front : back;
  return rng.coin() ? front : back;
}

NodeId choose_start(StartRule rule, const DecisionView& v, Rng& rng) {
  switch (rule) {
    case StartRule::random: return start_random(v, rng);
    case StartRule::degree: return start_degree(v, rng);
    case StartRule::connected: return start_connected(v, rng);
    case StartRule::longest_path: return start_longest_path(v, rng);
  }
  return 0;
}

std::optional<Extension> choose_extension(ExtRule rule, const DecisionView& v, Rng& rng) {
  switch (rule) {
    case ExtRule::random: return ext_random(v, rng);
    case ExtRule::degree: return ext_degree(v, rng);
    case ExtRule::tentacles: return ext_tentacles(v);
    case ExtRule::connected: return ext_connected(v, rng);
    case ExtRule::longest_path: return ext_longest_path(v, rng);
  }
  return std::nullopt;
}

void play_out(OpepState& st, HeuristicId id, Rng& rng) {
  if (st.path().empty()) {
    if (st.available().empty()) return;
    st.apply_start(choose_start(id.start, st.view(), rng));
  }
  while (auto e = choose_extension(id.ext, st.view(), rng)) st.apply_extension(*e);
}

Path run_combined(const Graph& g, const FeasibleSetting& s, HeuristicId id, Rng& rng) {
  OpepState st(g, s, Mode::single_player_cumulative);
  play_out(st, id, rng);
  return st.path();
}

}  // namespace opep
