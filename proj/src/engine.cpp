#include "opep/engine.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace opep {

Extension canonical(const Path& p, Extension e) {
  if (p.length() == 1) e.pos = Side::back;
  return e;
}

void extend(Path& p, Extension e) {
  if (e.pos == Side::front) {
    p.nodes.insert(p.nodes.begin(), e.node);
  } else {
    p.nodes.push_back(e.node);
  }
}

std::vector<Extension> feasible_extensions(const Graph& g, const Path& p, const NodeSet& available) {
  std::vector<Extension> out;
  if (p.empty()) return out;
  const NodeSet cand = tentacles(g, p) & available;
  const bool single = p.length() == 1;
  cand.for_each([&](NodeId v) {
    if (!single && g.adjacent(v, p.front())) out.push_back({v, Side::front});
    if (g.adjacent(v, p.back())) out.push_back({v, Side::back});
  });
  return out;
}

Display::Display(const FeasibleSetting& s)
    : extension_(s.extension),
      cards_(s.initial),
      count_(static_cast<std::size_t>(s.node_count) + 1, 0),
      support_(s.node_count) {
  for (NodeId v : cards_) {
    ++count_[static_cast<std::size_t>(v)];
    support_.insert(v);
  }
}

void Display::take(NodeId v) {
  auto it = std::find(cards_.begin(), cards_.end(), v);
  if (it == cards_.end()) throw InputError("node " + std::to_string(v) + " is not on display");
  cards_.erase(it);
  if (--count_[static_cast<std::size_t>(v)] == 0) support_.erase(v);
  if (cursor_ < extension_.size()) {
    const NodeId drawn = extension_[cursor_++];
    cards_.push_back(drawn);
    ++count_[static_cast<std::size_t>(drawn)];
    support_.insert(drawn);
  }
}

OpepState::OpepState(const Graph& g, const FeasibleSetting& s, Mode mode)
    : graph_(&g), setting_(&s), mode_(mode), on_path_(g.node_count()), revealed_(s.initial_set()) {
  if (s.node_count != g.node_count()) throw InputError("setting was built for a different graph");
  if (mode == Mode::display_consuming) display_.emplace(s);
}

NodeSet OpepState::available() const {
  if (display_) return display_->support();
  return revealed_;
}

NodeSet OpepState::legal_starts() const {
  if (!path_.empty()) return graph_->empty_set();
  return available();
}

NodeSet OpepState::available_tentacles() const {
  if (path_.empty()) throw InputError("available tentacles need a started path");
  return tentacles(*graph_, path_) & available();
}

std::vector<Extension> OpepState::feasible_extensions() const {
  return opep::feasible_extensions(*graph_, path_, available());
}

bool OpepState::is_terminal() const {
  if (path_.empty()) return false;
  return available_tentacles().empty();
}

DecisionView OpepState::view() const {
  DecisionView v;
  v.graph = graph_;
  v.path = &path_;
  v.available = available();
  v.cards = display_ ? display_->cards() : std::span<const NodeId>(setting_->initial);
  return v;
}

void OpepState::take(NodeId v) {
  on_path_.insert(v);
  if (display_) {
    display_->take(v);
  } else {
    // The path now has length l; selection l+1 also sees extension card l.
    const auto l = static_cast<std::size_t>(path_.length());
    if (l <= setting_->extension.size()) revealed_.insert(setting_->extension[l - 1]);
  }
}

void OpepState::apply_start(NodeId v) {
  if (!path_.empty()) throw InputError("start rejected: the path has already been started");
  if (!graph_->valid_node(v)) throw InputError("start rejected: node " + std::to_string(v) + " out of range");
  if (!available().contains(v))
    throw InputError("start rejected: node " + std::to_string(v) + " is not available");
  path_.nodes.push_back(v);
  take(v);
  moves_.push_back(Move{true, {v, Side::back}});
}

void OpepState::apply_extension(Extension e) {
  if (path_.empty()) throw InputError("extension rejected: no start node chosen yet");
  const std::string who = "extension rejected: node " + std::to_string(e.node);
  if (!graph_->valid_node(e.node)) throw InputError(who + " out of range");
  if (on_path_.contains(e.node)) throw InputError(who + " is already on the path");
  if (!available().contains(e.node)) throw InputError(who + " is not available");
  const NodeId end = e.pos == Side::front ? path_.front() : path_.back();
  if (!graph_->adjacent(e.node, end))
    throw InputError(who + " is not adjacent to the " + (e.pos == Side::front ? "first" : "last") + " path node");
  e = canonical(path_, e);
  extend(path_, e);
  take(e.node);
  moves_.push_back(Move{false, e});
}

void OpepState::apply(const Move& m) {
  if (m.start) {
    apply_start(m.ext.node);
  } else {
    apply_extension(m.ext);
  }
}

OpepState new_run(const Graph& g, const FeasibleSetting& s, Mode mode) { return OpepState(g, s, mode); }

OpepState replay(const Graph& g, const FeasibleSetting& s, Mode mode, std::span<const Move> moves) {
  OpepState st(g, s, mode);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      st.apply(moves[i]);
    } catch (const InputError& e) {
      throw InputError("move " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return st;
}

std::string format_move_log(std::span<const Move> moves) {
  std::ostringstream os;
  for (const auto& m : moves) {
    if (m.start) {
      os << "S " << m.ext.node << '\n';
    } else {
      os << "E " << m.ext.node << ' ' << (m.ext.pos == Side::front ? "front" : "back") << '\n';
    }
  }
  return os.str();
}

std::vector<Move> parse_move_log(std::istream& in) {
  std::vector<Move> moves;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    const std::string where = "move log line " + std::to_string(line_no) + ": ";
    Move m;
    if (kind == "S") {
      m.start = true;
      if (!(ls >> m.ext.node)) throw InputError(where + "expected \"S <v>\"");
    } else if (kind == "E") {
      std::string side;
      if (!(ls >> m.ext.node >> side)) throw InputError(where + "expected \"E <v> <front|back>\"");
      if (side == "front") {
        m.ext.pos = Side::front;
      } else if (side == "back") {
        m.ext.pos = Side::back;
      } else {
        throw InputError(where + "side must be front or back");
      }
    } else {
      throw InputError(where + "unknown record \"" + kind + "\"");
    }
    std::string extra;
    if (ls >> extra) throw InputError(where + "trailing text");
    moves.push_back(m);
  }
  return moves;
}

}  // namespace opep
