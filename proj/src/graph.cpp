#include "opep/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace opep {

namespace {

std::string edge_text(NodeId u, NodeId v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

}  // namespace

Graph::Graph(int node_count, std::span<const Edge> edges) : n_(node_count) {
  if (node_count < 1) throw InputError("graph needs at least one node");
  adj_list_.resize(static_cast<std::size_t>(n_) + 1);
  adj_set_.assign(static_cast<std::size_t>(n_) + 1, NodeSet(n_));
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw InputError("edge " + edge_text(u, v) + " has a node id outside 1.." + std::to_string(n_));
    if (u == v) throw InputError("self-loop " + edge_text(u, v));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) throw InputError("duplicate edge " + edge_text(u, v));
    edges_.push_back(e);
    adj_list_[index(u)].push_back(v);
    adj_list_[index(v)].push_back(u);
    adj_set_[index(u)].insert(v);
    adj_set_[index(v)].insert(u);
  }
  for (auto& nbrs : adj_list_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::degree(NodeId v) const {
  if (!valid_node(v)) throw InputError("node " + std::to_string(v) + " out of range");
  return static_cast<int>(adj_list_[index(v)].size());
}

NodeSet Graph::all_nodes() const {
  NodeSet s(n_);
  for (NodeId v = 1; v <= n_; ++v) s.insert(v);
  return s;
}

Graph load_graph(std::span<const Edge> edges, int node_count) { return Graph(node_count, edges); }

Graph parse_edge_list(std::istream& in, int node_count) {
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  int max_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    NodeId u = 0;
    NodeId v = 0;
    if (!(ls >> u)) continue;  // blank line
    std::string extra;
    if (!(ls >> v) || (ls >> extra))
      throw InputError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  return Graph(node_count > 0 ? node_count : max_id, edges);
}

Graph read_edge_file(const std::string& path, int node_count) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list " + path);
  try {
    return parse_edge_list(in, node_count);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

bool is_simple_path(const Graph& g, const Path& p) {
  NodeSet seen = g.empty_set();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const NodeId v = p.nodes[i];
    if (!g.valid_node(v) || seen.contains(v)) return false;
    if (i > 0 && !g.adjacent(p.nodes[i - 1], v)) return false;
    seen.insert(v);
  }
  return true;
}

void validate_path(const Graph& g, const Path& p) {
  NodeSet seen = g.empty_set();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const NodeId v = p.nodes[i];
    if (!g.valid_node(v)) throw InputError("path node " + std::to_string(v) + " out of range");
    if (seen.contains(v)) throw InputError("path repeats node " + std::to_string(v));
    if (i > 0 && !g.adjacent(p.nodes[i - 1], v))
      throw InputError("path step " + edge_text(p.nodes[i - 1], v) + " is not an edge");
    seen.insert(v);
  }
}

NodeSet node_set_of(const Graph& g, const Path& p) {
  NodeSet s = g.empty_set();
  for (NodeId v : p.nodes) s.insert(v);
  return s;
}

NodeSet tentacles(const Graph& g, const Path& p) {
  if (p.empty()) return g.empty_set();
  NodeSet t = g.neighbor_set(p.front()) | g.neighbor_set(p.back());
  for (NodeId v : p.nodes) t.erase(v);
  return t;
}

int tentacle_count(const Graph& g, const Path& p) { return tentacles(g, p).size(); }

TentacleBounds tentacle_bounds(const Graph& g, const Path& p) {
  validate_path(g, p);
  if (p.empty()) throw InputError("tentacle bounds need a nonempty path");
  const int d1 = g.degree(p.front());
  if (p.length() == 1) return {d1, d1};
  const int dl = g.degree(p.back());
  const int len = p.length();
  return {std::max(0, std::max(d1, dl) - len), std::min(g.node_count() - len, d1 + dl - 2)};
}

std::vector<NodeSet> connected_components(const Graph& g, const NodeSet& s) {
  std::vector<NodeSet> out;
  NodeSet remaining = s;
  std::vector<NodeId> stack;
  while (!remaining.empty()) {
    const NodeId seed = remaining.first();
    NodeSet comp = g.empty_set();
    comp.insert(seed);
    remaining.erase(seed);
    stack.assign(1, seed);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (remaining.contains(w)) {
          remaining.erase(w);
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<NodeSet> adjacent_components(const Graph& g, const NodeSet& s, const Path& p) {
  if (p.empty()) return {};
  const NodeSet rest = s - node_set_of(g, p);
  const NodeSet ends = g.neighbor_set(p.front()) | g.neighbor_set(p.back());
  std::vector<NodeSet> out;
  for (auto& comp : connected_components(g, rest))
    if (!(comp & ends).empty()) out.push_back(std::move(comp));
  return out;
}

namespace {

// Keeps the longest paths offered so far.
class LongestCollector {
 public:
  void offer(const std::vector<NodeId>& nodes) {
    const int len = static_cast<int>(nodes.size());
    if (len < best_) return;
    if (len > best_) {
      best_ = len;
      paths_.clear();
    }
    paths_.push_back(Path{nodes});
  }
  int best() const { return best_; }
  std::vector<Path> take() { return std::move(paths_); }

 private:
  int best_ = 0;
  std::vector<Path> paths_;
};

void extend_within(const Graph& g, const NodeSet& allowed, NodeSet& used, std::vector<NodeId>& walk,
                   LongestCollector& out) {
  bool extended = false;
  for (NodeId w : g.neighbors(walk.back())) {
    if (!allowed.contains(w) || used.contains(w)) continue;
    extended = true;
    used.insert(w);
    walk.push_back(w);
    extend_within(g, allowed, used, walk, out);
    walk.pop_back();
    used.erase(w);
  }
  // Maximal walks only; a longest path is never a strict prefix of another.
  if (!extended) out.offer(walk);
}

// Every simple walk from `from` into `allowed \ used`, including the empty one.
template <typename F>
void for_each_tail(const Graph& g, const NodeSet& allowed, NodeSet& used, NodeId from,
                   std::vector<NodeId>& tail, F&& visit) {
  visit(tail);
  for (NodeId w : g.neighbors(from)) {
    if (!allowed.contains(w) || used.contains(w)) continue;
    used.insert(w);
    tail.push_back(w);
    for_each_tail(g, allowed, used, w, tail, visit);
    tail.pop_back();
    used.erase(w);
  }
}

void canonicalize(std::vector<Path>& paths) {
  for (auto& p : paths) {
    Path r = p.reversed();
    if (r < p) p = std::move(r);
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
}

}  // namespace

std::vector<Path> longest_paths_in(const Graph& g, const NodeSet& z) {
  if (z.empty()) throw InputError("longest_paths_in needs a nonempty node set");
  LongestCollector collector;
  NodeSet used = g.empty_set();
  std::vector<NodeId> walk;
  z.for_each([&](NodeId start) {
    used.insert(start);
    walk.assign(1, start);
    extend_within(g, z, used, walk, collector);
    used.erase(start);
  });
  auto paths = collector.take();
  canonicalize(paths);
  return paths;
}

std::vector<Path> longest_extensions_containing(const Graph& g, const NodeSet& z, const Path& p) {
  if (p.empty()) throw InputError("longest_extensions_containing needs a nonempty path");
  const NodeSet allowed = z - node_set_of(g, p);
  NodeSet used = node_set_of(g, p);
  LongestCollector collector;
  std::vector<NodeId> left;
  std::vector<NodeId> right;
  std::vector<NodeId> joined;
  for_each_tail(g, allowed, used, p.front(), left, [&](const std::vector<NodeId>& l) {
    for_each_tail(g, allowed, used, p.back(), right, [&](const std::vector<NodeId>& r) {
      const int len = static_cast<int>(l.size() + p.nodes.size() + r.size());
      if (len < collector.best()) return;
      joined.assign(l.rbegin(), l.rend());
      joined.insert(joined.end(), p.nodes.begin(), p.nodes.end());
      joined.insert(joined.end(), r.begin(), r.end());
      collector.offer(joined);
    });
  });
  auto paths = collector.take();
  if (p.length() == 1) {
    canonicalize(paths);
  } else {
    std::sort(paths.begin(), paths.end());
  }
  return paths;
}

}  // namespace opep
