#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opep/node_set.hpp"

namespace opep {

// Raised for malformed user input: bad edge lists, settings, moves.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph on nodes 1..n.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, out-of-range ids and duplicate edges.
  Graph(int node_count, std::span<const Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges as given, normalized so that first < second.
  const std::vector<Edge>& edges() const { return edges_; }

  // Ascending neighbor ids.
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_list_[index(v)]; }
  const NodeSet& neighbor_set(NodeId v) const { return adj_set_[index(v)]; }

  bool adjacent(NodeId u, NodeId v) const { return adj_set_[index(u)].contains(v); }
  bool valid_node(NodeId v) const { return v >= 1 && v <= n_; }

  int degree(NodeId v) const;

  NodeSet empty_set() const { return NodeSet(n_); }
  NodeSet all_nodes() const;

 private:
  std::size_t index(NodeId v) const { return static_cast<std::size_t>(v); }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adj_list_;  // slot 0 unused
  std::vector<NodeSet> adj_set_;
};

Graph load_graph(std::span<const Edge> edges, int node_count);

// Edge-list text: one "u v" pair per line, '#' starts a comment. When
// node_count is 0 it is inferred as the largest id seen.
Graph parse_edge_list(std::istream& in, int node_count = 0);
Graph read_edge_file(const std::string& path, int node_count = 0);
void write_edge_list(std::ostream& out, const Graph& g);

// "board" (22 nodes / 45 edges) or "extended" (32 nodes / 66 edges).
Graph builtin_graph(std::string_view name);

// Ordered simple path; node length is the number of nodes.
struct Path {
  std::vector<NodeId> nodes;

  int length() const { return static_cast<int>(nodes.size()); }
  bool empty() const { return nodes.empty(); }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  Path reversed() const { return Path{{nodes.rbegin(), nodes.rend()}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

bool is_simple_path(const Graph& g, const Path& p);
// Throws InputError naming the first violation.
void validate_path(const Graph& g, const Path& p);
NodeSet node_set_of(const Graph& g, const Path& p);

// Nodes off the path adjacent to either end node.
NodeSet tentacles(const Graph& g, const Path& p);
int tentacle_count(const Graph& g, const Path& p);

struct TentacleBounds {
  int lower = 0;
  int upper = 0;
};
TentacleBounds tentacle_bounds(const Graph& g, const Path& p);

// Maximal components of the subgraph induced by s, ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g, const NodeSet& s);

// Components of s minus the path that touch one of its end nodes.
std::vector<NodeSet> adjacent_components(const Graph& g, const NodeSet& s, const Path& p);

// All node-longest simple paths inside z, each in its lexicographically
// smaller orientation, sorted. Throws InputError when z is empty.
std::vector<Path> longest_paths_in(const Graph& g, const NodeSet& z);

// All node-longest simple paths inside p + z that contain p contiguously and
// in order, grown on either side. Returns {p} when no node of z attaches.
std::vector<Path> longest_extensions_containing(const Graph& g, const NodeSet& z, const Path& p);

}  // namespace opep
