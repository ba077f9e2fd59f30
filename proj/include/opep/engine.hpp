#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opep/deck.hpp"
#include "opep/graph.hpp"

namespace opep {

// How extension cards become selectable.
enum class Mode {
  // Everything revealed so far stays selectable (initial set plus j_1..j_k).
  single_player_cumulative,
  // A c-card display; taking a card removes one copy and draws the next.
  display_consuming,
};

enum class Side { front, back };

struct Extension {
  NodeId node = 0;
  Side pos = Side::back;
  friend bool operator==(const Extension&, const Extension&) = default;
};

// Extending a single-node path: both ends coincide, so back is canonical.
Extension canonical(const Path& p, Extension e);

void extend(Path& p, Extension e);

// All (node, side) moves whose node is in `available`, off the path and
// adjacent to the corresponding end. Ascending node id, front before back.
std::vector<Extension> feasible_extensions(const Graph& g, const Path& p, const NodeSet& available);

// Shared card display for display-consuming play.
class Display {
 public:
  explicit Display(const FeasibleSetting& s);

  // Cards on show, with multiplicity, in slot order.
  std::span<const NodeId> cards() const { return cards_; }
  const NodeSet& support() const { return support_; }
  bool holds(NodeId v) const { return support_.contains(v); }
  int undrawn() const { return static_cast<int>(extension_.size() - cursor_); }
  int size() const { return static_cast<int>(cards_.size()); }

  // Removes one copy of v and draws the next extension card, if any.
  void take(NodeId v);

 private:
  std::vector<NodeId> extension_;
  std::size_t cursor_ = 0;
  std::vector<NodeId> cards_;
  std::vector<int> count_;
  NodeSet support_;
};

// Everything a heuristic may look at when choosing the next node.
struct DecisionView {
  const Graph* graph = nullptr;
  const Path* path = nullptr;
  // Nodes selectable right now (revealed set, or display support).
  NodeSet available;
  // Selectable cards with multiplicity; used by index-uniform start picks.
  std::span<const NodeId> cards;
};

struct Move {
  bool start = false;
  Extension ext;
  friend bool operator==(const Move&, const Move&) = default;
};

// One online path extension run.
class OpepState {
 public:
  OpepState(const Graph& g, const FeasibleSetting& s, Mode mode);

  const Graph& graph() const { return *graph_; }
  const FeasibleSetting& setting() const { return *setting_; }
  Mode mode() const { return mode_; }
  const Path& path() const { return path_; }
  const std::vector<Move>& moves() const { return moves_; }
  // Present only in display-consuming mode.
  const Display* display() const { return display_ ? &*display_ : nullptr; }

  // Nodes selectable for the next selection.
  NodeSet available() const;
  NodeSet legal_starts() const;
  // Throws InputError before the start.
  NodeSet available_tentacles() const;
  std::vector<Extension> feasible_extensions() const;
  bool is_terminal() const;

  DecisionView view() const;

  // Throw InputError naming the violated rule.
  void apply_start(NodeId v);
  void apply_extension(Extension e);
  void apply(const Move& m);

 private:
  void take(NodeId v);

  const Graph* graph_;
  const FeasibleSetting* setting_;
  Mode mode_;
  Path path_;
  NodeSet on_path_;
  NodeSet revealed_;  // cumulative mode
  std::optional<Display> display_;
  std::vector<Move> moves_;
};

OpepState new_run(const Graph& g, const FeasibleSetting& s, Mode mode);

// Replays a move sequence from scratch; throws on the first illegal move.
OpepState replay(const Graph& g, const FeasibleSetting& s, Mode mode, std::span<const Move> moves);

// Move log: "S <v>" then "E <v> <front|back>" lines; '#' comments allowed.
std::string format_move_log(std::span<const Move> moves);
std::vector<Move> parse_move_log(std::istream& in);

}  // namespace opep
