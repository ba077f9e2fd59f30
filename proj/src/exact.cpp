#include "opep/exact.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace opep {

namespace {

using Mask = std::uint64_t;

Mask bit_of(NodeId v) { return Mask{1} << (v - 1); }

class IdealSearch {
 public:
  IdealSearch(const Graph& g, const FeasibleSetting& s) : g_(g), n_(g.node_count()), memoize_(n_ <= 32) {
    if (n_ > 64) throw InputError("ideal_path supports graphs with at most 64 nodes");
    adj_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (NodeId v = 1; v <= n_; ++v)
      for (NodeId w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= bit_of(w);
    // reveal_[k] = nodes legal for selection k+1.
    Mask r = 0;
    for (NodeId v : s.initial) r |= bit_of(v);
    reveal_.push_back(r);
    for (NodeId v : s.extension) {
      r |= bit_of(v);
      reveal_.push_back(r);
    }
    for (NodeId v : s.initial) starts_ |= bit_of(v);
  }

  IdealResult solve() {
    IdealResult out;
    int best = 0;
    NodeId best_start = 0;
    for (Mask m = starts_; m != 0; m &= m - 1) {
      const NodeId v = std::countr_zero(m) + 1;
      const int len = 1 + (memoize_ ? best_from(v, v, bit_of(v)) : bnb_from(v, v, bit_of(v), best - 1));
      if (len > best) {
        best = len;
        best_start = v;
      }
      if (best == n_) break;
    }
    out.path.nodes.push_back(best_start);
    out.moves.push_back(Move{true, {best_start, Side::back}});
    reconstruct(best_start, best, out);
    out.states_expanded = expanded_;
    return out;
  }

 private:
  Mask available(Mask used) const {
    const auto k = static_cast<std::size_t>(std::popcount(used));  // next selection is k+1
    return reveal_[std::min(k, reveal_.size() - 1)] & ~used;
  }

  // Unused nodes reachable from either end without crossing the path.
  int reach_bound(NodeId a, NodeId b, Mask used) const {
    Mask frontier = (adj_[static_cast<std::size_t>(a)] | adj_[static_cast<std::size_t>(b)]) & ~used;
    Mask seen = frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(m) + 1)];
      next &= ~used & ~seen;
      seen |= next;
      frontier = next;
    }
    return std::popcount(seen);
  }

  template <typename F>
  void for_each_move(NodeId a, NodeId b, Mask used, F&& f) const {
    const Mask avail = available(used);
    const Mask ta = adj_[static_cast<std::size_t>(a)] & avail;
    const Mask tb = adj_[static_cast<std::size_t>(b)] & avail;
    for (Mask m = ta | tb; m != 0; m &= m - 1) {
      const NodeId v = std::countr_zero(m) + 1;
      if (a != b && (ta & bit_of(v))) {
        if (!f(v, Side::front)) return;
      }
      if (tb & bit_of(v)) {
        if (!f(v, Side::back)) return;
      }
    }
  }

  static std::uint64_t key(NodeId a, NodeId b, Mask used) {
    if (a > b) std::swap(a, b);
    return used | (static_cast<std::uint64_t>(a) << 32) | (static_cast<std::uint64_t>(b) << 40);
  }

  // Exact number of nodes that can still be added.
  int best_from(NodeId a, NodeId b, Mask used) {
    const auto k = key(a, b, used);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    ++expanded_;
    const int bound = reach_bound(a, b, used);
    int best = 0;
    if (bound > 0) {
      for_each_move(a, b, used, [&](NodeId v, Side side) {
        const Mask next = used | bit_of(v);
        const int got = 1 + (side == Side::front ? best_from(v, b, next) : best_from(a, v, next));
        best = std::max(best, got);
        return best < bound;
      });
    }
    memo_.emplace(k, static_cast<std::uint8_t>(best));
    return best;
  }

  // Incumbent-pruned search for large graphs; returns the best addition
  // found, which is exact whenever it exceeds `floor`.
  int bnb_from(NodeId a, NodeId b, Mask used, int floor) {
    ++expanded_;
    const int bound = reach_bound(a, b, used);
    if (bound <= floor) return 0;
    int best = 0;
    for_each_move(a, b, used, [&](NodeId v, Side side) {
      const Mask next = used | bit_of(v);
      const int sub_floor = std::max(floor, best) - 1;
      const int got = 1 + (side == Side::front ? bnb_from(v, b, next, sub_floor) : bnb_from(a, v, next, sub_floor));
      best = std::max(best, got);
      return best < bound;
    });
    return best;
  }

  int value(NodeId a, NodeId b, Mask used) {
    return memoize_ ? best_from(a, b, used) : bnb_from(a, b, used, -1);
  }

  void reconstruct(NodeId start, int target, IdealResult& out) {
    NodeId a = start;
    NodeId b = start;
    Mask used = bit_of(start);
    int remaining = target - 1;
    while (remaining > 0) {
      bool advanced = false;
      for_each_move(a, b, used, [&](NodeId v, Side side) {
        const Mask next = used | bit_of(v);
        const int got = side == Side::front ? value(v, b, next) : value(a, v, next);
        if (got + 1 != remaining) return true;
        Extension e{v, side};
        e = canonical(out.path, e);
        extend(out.path, e);
        out.moves.push_back(Move{false, e});
        if (side == Side::front) {
          a = v;
        } else {
          b = v;
        }
        used = next;
        --remaining;
        advanced = true;
        return false;
      });
      if (!advanced) break;
    }
  }

  const Graph& g_;
  int n_;
  bool memoize_;
  std::vector<Mask> adj_;
  std::vector<Mask> reveal_;
  Mask starts_ = 0;
  std::unordered_map<std::uint64_t, std::uint8_t> memo_;
  std::uint64_t expanded_ = 0;
};

int exhaust(const OpepState& st) {
  int best = st.path().length();
  for (const auto& e : st.feasible_extensions()) {
    OpepState next = st;
    next.apply_extension(e);
    best = std::max(best, exhaust(next));
  }
  return best;
}

}  // namespace

IdealResult ideal_path(const Graph& g, const FeasibleSetting& s) { return IdealSearch(g, s).solve(); }

int brute_force_ideal(const Graph& g, const FeasibleSetting& s) {
  if (g.node_count() * s.nd > 24) throw InputError("brute_force_ideal is limited to n*nd <= 24");
  const OpepState root(g, s, Mode::single_player_cumulative);
  int best = 0;
  root.legal_starts().for_each([&](NodeId v) {
    OpepState st = root;
    st.apply_start(v);
    best = std::max(best, exhaust(st));
  });
  return best;
}

namespace {

// Writes a linear expression, wrapping long rows.
class RowWriter {
 public:
  explicit RowWriter(std::ostream& os) : os_(os) {}

  void begin(const std::string& name) {
    os_ << ' ' << name << ':';
    terms_ = 0;
  }
  void term(int coef, const std::string& var) {
    if (terms_ > 0 && terms_ % 8 == 0) os_ << "\n  ";
    if (coef == 1) {
      os_ << (terms_ == 0 ? " " : " + ") << var;
    } else if (coef == -1) {
      os_ << " - " << var;
    } else {
      os_ << (coef < 0 ? " - " : (terms_ == 0 ? " " : " + ")) << std::abs(coef) << ' ' << var;
    }
    ++terms_;
  }
  void end(const char* sense, int rhs) { os_ << ' ' << sense << ' ' << rhs << '\n'; }

 private:
  std::ostream& os_;
  int terms_ = 0;
};

std::string var(const char* prefix, int k, NodeId p) {
  return std::string(prefix) + "_" + std::to_string(k) + "_" + std::to_string(p);
}

}  // namespace

void write_lp(std::ostream& out, const Graph& g, const FeasibleSetting& s) {
  const int n = g.node_count();
  const AvailabilityMatrix avail = availability_matrix(s, g);
  const int horizon = avail.rows();
  static constexpr const char* kEnds[] = {"Es", "Et"};

  out << "\\ Ideal TT-path model: n=" << n << " c=" << s.c() << " nd=" << s.nd << " K=" << horizon << '\n';
  out << "Maximize\n";
  RowWriter row(out);
  row.begin("length");
  for (int k = 1; k <= horizon; ++k)
    for (NodeId p = 1; p <= n; ++p) row.term(1, var("x", k, p));
  out << '\n';

  out << "Subject To\n";
  // Availability: only revealed nodes may be chosen.
  std::vector<int> cumulative(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= horizon; ++k) {
    for (NodeId p = 1; p <= n; ++p) {
      if (avail.at(k, p)) cumulative[static_cast<std::size_t>(p)] = 1;
      row.begin("avail_" + std::to_string(k) + "_" + std::to_string(p));
      row.term(1, var("x", k, p));
      row.end("<=", cumulative[static_cast<std::size_t>(p)]);
    }
  }
  // Each node chosen at most once.
  for (NodeId p = 1; p <= n; ++p) {
    row.begin("once_" + std::to_string(p));
    for (int k = 1; k <= horizon; ++k) row.term(1, var("x", k, p));
    row.end("<=", 1);
  }
  row.begin("first");
  for (NodeId p = 1; p <= n; ++p) row.term(1, var("x", 1, p));
  row.end("<=", 1);
  // No gaps: a choice at k needs one at k-1.
  for (int k = 2; k <= horizon; ++k) {
    row.begin("chain_" + std::to_string(k));
    for (NodeId p = 1; p <= n; ++p) row.term(1, var("x", k, p));
    for (NodeId p = 1; p <= n; ++p) row.term(-1, var("x", k - 1, p));
    row.end("<=", 0);
  }
  for (const char* e : kEnds) {
    for (NodeId p = 1; p <= n; ++p) {
      row.begin(std::string("init_") + e + "_" + std::to_string(p));
      row.term(1, var(e, 1, p));
      row.term(-1, var("x", 1, p));
      row.end("=", 0);
    }
  }
  for (const char* e : kEnds) {
    for (int k = 1; k <= horizon; ++k) {
      row.begin(std::string("one_") + e + "_" + std::to_string(k));
      for (NodeId p = 1; p <= n; ++p) row.term(1, var(e, k, p));
      row.end("=", 1);
    }
  }
  for (int k = 2; k <= horizon; ++k) {
    for (NodeId p = 1; p <= n; ++p) {
      row.begin("distinct_" + std::to_string(k) + "_" + std::to_string(p));
      row.term(1, var("Et", k, p));
      row.term(1, var("Es", k, p));
      row.term(-1, var("x", 1, p));
      row.end("<=", 1);
    }
  }
  for (const char* e : kEnds) {
    for (int k = 2; k <= horizon; ++k) {
      for (NodeId p = 1; p <= n; ++p) {
        row.begin(std::string("keep_") + e + "_" + std::to_string(k) + "_" + std::to_string(p));
        row.term(1, var(e, k, p));
        row.term(-1, var(e, k - 1, p));
        row.term(-1, var("x", k, p));
        row.end("<=", 0);
      }
    }
  }
  for (int k = 2; k <= horizon; ++k) {
    for (NodeId p = 1; p <= n; ++p) {
      row.begin("chosen_" + std::to_string(k) + "_" + std::to_string(p));
      row.term(1, var("x", k, p));
      row.term(-1, var("Et", k, p));
      row.term(-1, var("Es", k, p));
      row.end("<=", 0);
    }
  }
  // A new end node must neighbour the previous end node on that side.
  for (const char* e : kEnds) {
    for (int k = 2; k <= horizon; ++k) {
      for (NodeId p = 1; p <= n; ++p) {
        row.begin(std::string("adj_") + e + "_" + std::to_string(k) + "_" + std::to_string(p));
        row.term(1, var(e, k, p));
        row.term(-1, var(e, k - 1, p));
        for (NodeId q : g.neighbors(p)) row.term(-1, var(e, k - 1, q));
        row.end("<=", 0);
      }
    }
  }

  out << "Binaries\n";
  for (const char* prefix : {"x", "Es", "Et"}) {
    for (int k = 1; k <= horizon; ++k) {
      out << ' ';
      for (NodeId p = 1; p <= n; ++p) out << ' ' << var(prefix, k, p);
      out << '\n';
    }
  }
  out << "End\n";
}

std::string export_lp(const Graph& g, const FeasibleSetting& s) {
  std::ostringstream os;
  write_lp(os, g, s);
  return os.str();
}

}  // namespace opep
