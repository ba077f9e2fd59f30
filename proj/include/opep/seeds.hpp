#pragma once

#include <cstdint>

#include "opep/heuristics.hpp"
#include "opep/rng.hpp"

namespace opep {

// Stream purposes, so that instance generation and solver decisions never
// share random draws.
enum class StreamKind : std::uint64_t { setting = 1, solver = 2, match = 3 };

inline std::uint64_t heuristic_code(HeuristicId id) {
  return static_cast<std::uint64_t>(id.start) * 8 + static_cast<std::uint64_t>(id.ext);
}

// Instance i of a (c, nd) cell.
inline Rng setting_stream(std::uint64_t master, int c, int nd, std::uint64_t index) {
  return Rng::stream(master, StreamKind::setting, c, nd, index);
}

inline Rng solver_stream(std::uint64_t master, int c, int nd, std::uint64_t index, HeuristicId id) {
  return Rng::stream(master, StreamKind::solver, c, nd, index, heuristic_code(id));
}

inline std::uint64_t match_seed(std::uint64_t master, std::uint64_t index, HeuristicId first, HeuristicId second) {
  return Rng::stream(master, StreamKind::match, index, heuristic_code(first), heuristic_code(second)).next();
}

}  // namespace opep
