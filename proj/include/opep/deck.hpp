#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "opep/graph.hpp"
#include "opep/rng.hpp"

namespace opep {

// A full card deck split into the visible initial tuple and the ordered
// extension tuple. Every node appears exactly nd times across both.
struct FeasibleSetting {
  int node_count = 0;
  int nd = 1;
  std::vector<NodeId> initial;
  std::vector<NodeId> extension;

  int c() const { return static_cast<int>(initial.size()); }
  int d() const { return static_cast<int>(extension.size()); }
  // Deduplicated initial tuple.
  NodeSet initial_set() const;

  friend bool operator==(const FeasibleSetting&, const FeasibleSetting&) = default;
};

// Validates multiplicities and d = n*nd - c; throws InputError.
FeasibleSetting make_setting(std::vector<NodeId> initial, std::vector<NodeId> extension, int nd,
                             const Graph& g);

// Fisher-Yates shuffle of the n*nd-card deck, split after the first c cards.
FeasibleSetting random_setting(const Graph& g, int c, int nd, Rng& rng);

// Binary K x n matrix, K = max(d+1, n). Row 1 marks the initial set, row k+1
// marks extension card k.
class AvailabilityMatrix {
 public:
  AvailabilityMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), NodeSet(cols)) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  // 1-indexed row and column.
  bool at(int k, NodeId p) const { return rows_[static_cast<std::size_t>(k - 1)].contains(p); }
  void set(int k, NodeId p) { rows_[static_cast<std::size_t>(k - 1)].insert(p); }
  const NodeSet& row(int k) const { return rows_[static_cast<std::size_t>(k - 1)]; }

 private:
  int cols_;
  std::vector<NodeSet> rows_;
};

AvailabilityMatrix availability_matrix(const FeasibleSetting& s, const Graph& g);

// Nodes legal for the k-th selection (k = 1 is the start):
// initial set plus extension cards 1..min(k-1, d).
NodeSet revealed_set(const FeasibleSetting& s, int k);

// Precomputed cumulative reveal sets for hot loops.
class RevealSchedule {
 public:
  explicit RevealSchedule(const FeasibleSetting& s);
  const NodeSet& at(int k) const;

 private:
  std::vector<NodeSet> prefix_;  // prefix_[k-1] serves selection k
};

// One-line record: "nd=<v>; initial=<csv>; extension=<csv>".
std::string format_setting(const FeasibleSetting& s);
FeasibleSetting parse_setting(std::string_view record, const Graph& g);

void write_settings(std::ostream& out, const std::vector<FeasibleSetting>& settings);
// Blank lines and '#' lines are skipped.
std::vector<FeasibleSetting> read_settings(std::istream& in, const Graph& g);

}  // namespace opep
