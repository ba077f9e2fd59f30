#include "opep/deck.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace opep {

NodeSet FeasibleSetting::initial_set() const {
  NodeSet s(node_count);
  for (NodeId v : initial) s.insert(v);
  return s;
}

FeasibleSetting make_setting(std::vector<NodeId> initial, std::vector<NodeId> extension, int nd,
                             const Graph& g) {
  const int n = g.node_count();
  if (nd < 1) throw InputError("nd must be at least 1");
  if (initial.empty()) throw InputError("initial tuple must hold at least one card");
  const auto c = static_cast<long long>(initial.size());
  const auto d = static_cast<long long>(extension.size());
  if (c + d != static_cast<long long>(n) * nd)
    throw InputError("extension tuple has " + std::to_string(d) + " cards, expected n*nd - c = " +
                     std::to_string(static_cast<long long>(n) * nd - c));
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (const auto* tuple : {&initial, &extension}) {
    for (NodeId v : *tuple) {
      if (!g.valid_node(v)) throw InputError("card " + std::to_string(v) + " is not a node of the graph");
      ++count[static_cast<std::size_t>(v)];
    }
  }
  for (NodeId v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] != nd)
      throw InputError("node " + std::to_string(v) + " appears " + std::to_string(count[static_cast<std::size_t>(v)]) +
                       " times, expected " + std::to_string(nd));
  }
  return FeasibleSetting{n, nd, std::move(initial), std::move(extension)};
}

FeasibleSetting random_setting(const Graph& g, int c, int nd, Rng& rng) {
  const int n = g.node_count();
  if (nd < 1) throw InputError("nd must be at least 1");
  if (c < 1 || c > n * nd) throw InputError("c must lie in 1..n*nd = " + std::to_string(n * nd));
  std::vector<NodeId> deck;
  deck.reserve(static_cast<std::size_t>(n * nd));
  for (int copy = 0; copy < nd; ++copy)
    for (NodeId v = 1; v <= n; ++v) deck.push_back(v);
  for (std::size_t i = deck.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(deck[i], deck[j]);
  }
  FeasibleSetting s;
  s.node_count = n;
  s.nd = nd;
  s.initial.assign(deck.begin(), deck.begin() + c);
  s.extension.assign(deck.begin() + c, deck.end());
  return s;
}

AvailabilityMatrix availability_matrix(const FeasibleSetting& s, const Graph& g) {
  const int rows = std::max(s.d() + 1, g.node_count());
  AvailabilityMatrix m(rows, g.node_count());
  for (NodeId v : s.initial) m.set(1, v);
  for (int k = 0; k < s.d(); ++k) m.set(k + 2, s.extension[static_cast<std::size_t>(k)]);
  return m;
}

NodeSet revealed_set(const FeasibleSetting& s, int k) {
  NodeSet r = s.initial_set();
  const int upto = std::min(k - 1, s.d());
  for (int i = 0; i < upto; ++i) r.insert(s.extension[static_cast<std::size_t>(i)]);
  return r;
}

RevealSchedule::RevealSchedule(const FeasibleSetting& s) {
  prefix_.reserve(static_cast<std::size_t>(s.d()) + 1);
  prefix_.push_back(s.initial_set());
  for (NodeId v : s.extension) {
    NodeSet next = prefix_.back();
    next.insert(v);
    prefix_.push_back(std::move(next));
  }
}

const NodeSet& RevealSchedule::at(int k) const {
  const auto idx = static_cast<std::size_t>(std::max(k, 1) - 1);
  return prefix_[std::min(idx, prefix_.size() - 1)];
}

namespace {

void append_csv(std::ostream& os, const std::vector<NodeId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("setting record: bad " + std::string(what) + " value \"" + std::string(text) + "\"");
  return value;
}

std::vector<NodeId> parse_csv(std::string_view text, std::string_view what) {
  std::vector<NodeId> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma - pos), what));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_setting(const FeasibleSetting& s) {
  std::ostringstream os;
  os << "nd=" << s.nd << "; initial=";
  append_csv(os, s.initial);
  os << "; extension=";
  append_csv(os, s.extension);
  return os.str();
}

FeasibleSetting parse_setting(std::string_view record, const Graph& g) {
  int nd = 0;
  bool have_nd = false;
  bool have_initial = false;
  bool have_extension = false;
  std::vector<NodeId> initial;
  std::vector<NodeId> extension;
  std::size_t pos = 0;
  while (pos <= record.size()) {
    const auto semi = record.find(';', pos);
    const auto field = trim(record.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (!field.empty()) {
      const auto eq = field.find('=');
      if (eq == std::string_view::npos) throw InputError("setting record: field \"" + std::string(field) + "\" lacks '='");
      const auto key = trim(field.substr(0, eq));
      const auto value = field.substr(eq + 1);
      if (key == "nd") {
        nd = parse_int(value, "nd");
        have_nd = true;
      } else if (key == "initial") {
        initial = parse_csv(value, "initial");
        have_initial = true;
      } else if (key == "extension") {
        extension = parse_csv(value, "extension");
        have_extension = true;
      } else {
        throw InputError("setting record: unknown field \"" + std::string(key) + "\"");
      }
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!have_nd || !have_initial || !have_extension)
    throw InputError("setting record needs nd, initial and extension fields");
  return make_setting(std::move(initial), std::move(extension), nd, g);
}

void write_settings(std::ostream& out, const std::vector<FeasibleSetting>& settings) {
  for (const auto& s : settings) out << format_setting(s) << '\n';
}

std::vector<FeasibleSetting> read_settings(std::istream& in, const Graph& g) {
  std::vector<FeasibleSetting> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(parse_setting(t, g));
    } catch (const InputError& e) {
      throw InputError("settings line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace opep
