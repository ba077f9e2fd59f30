#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opep/engine.hpp"
#include "opep/rng.hpp"

namespace opep {

enum class StartRule { random, degree, connected, longest_path };
enum class ExtRule { random, degree, tentacles, connected, longest_path };

// One initialization rule paired with one extension rule.
struct HeuristicId {
  StartRule start = StartRule::random;
  ExtRule ext = ExtRule::random;
  friend bool operator==(const HeuristicId&, const HeuristicId&) = default;
};

inline constexpr HeuristicId kRs{StartRule::random, ExtRule::random};
inline constexpr HeuristicId kMd{StartRule::degree, ExtRule::degree};
inline constexpr HeuristicId kMt{StartRule::degree, ExtRule::tentacles};
inline constexpr HeuristicId kLcc{StartRule::connected, ExtRule::connected};
inline constexpr HeuristicId kPp{StartRule::longest_path, ExtRule::longest_path};

// rs, md, mt, lcc, pp.
std::vector<HeuristicId> named_combos();
// All 4 x 5 start/extension pairs, start-major.
std::vector<HeuristicId> all_combos();

std::string_view to_string(StartRule r);
std::string_view to_string(ExtRule r);
StartRule parse_start_rule(std::string_view s);
ExtRule parse_ext_rule(std::string_view s);

// Acronym for named combos, otherwise "<start>/<ext>".
std::string heuristic_name(HeuristicId id);
// Accepts an acronym or "<start>/<ext>"; throws InputError.
HeuristicId parse_heuristic(std::string_view s);

// Initialization rules. The view must belong to an unstarted path.
NodeId start_random(const DecisionView& v, Rng& rng);
NodeId start_degree(const DecisionView& v, Rng& rng);
NodeId start_connected(const DecisionView& v, Rng& rng);
NodeId start_longest_path(const DecisionView& v, Rng& rng);

// Extension rules; nullopt means STOP (no available tentacle).
std::optional<Extension> ext_random(const DecisionView& v, Rng& rng);
std::optional<Extension> ext_degree(const DecisionView& v, Rng& rng);
std::optional<Extension> ext_tentacles(const DecisionView& v);
std::optional<Extension> ext_connected(const DecisionView& v, Rng& rng);
std::optional<Extension> ext_longest_path(const DecisionView& v, Rng& rng);

NodeId choose_start(StartRule rule, const DecisionView& v, Rng& rng);
std::optional<Extension> choose_extension(ExtRule rule, const DecisionView& v, Rng& rng);

// Drives st to termination with the given combination.
void play_out(OpepState& st, HeuristicId id, Rng& rng);

// Full single-player cumulative run; returns the final TT-path.
Path run_combined(const Graph& g, const FeasibleSetting& s, HeuristicId id, Rng& rng);

}  // namespace opep
