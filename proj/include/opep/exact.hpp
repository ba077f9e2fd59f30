#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "opep/deck.hpp"
#include "opep/engine.hpp"
#include "opep/graph.hpp"

namespace opep {

struct IdealResult {
  Path path;
  // Legal move sequence producing `path` in single-player cumulative mode.
  std::vector<Move> moves;
  std::uint64_t states_expanded = 0;
};

// Longest TT-path under complete knowledge of the deck order, by depth-first
// branch-and-bound. Requires n <= 64; memoizes states when n <= 32.
IdealResult ideal_path(const Graph& g, const FeasibleSetting& s);

// Unpruned exhaustive search through the engine. Throws InputError when
// n * nd > 24.
int brute_force_ideal(const Graph& g, const FeasibleSetting& s);

// Integer program for the ideal path in CPLEX LP text format. Variables are
// x_<k>_<p>, Es_<k>_<p>, Et_<k>_<p> for k = 1..max(d+1, n), p = 1..n.
std::string export_lp(const Graph& g, const FeasibleSetting& s);
void write_lp(std::ostream& out, const Graph& g, const FeasibleSetting& s);

}  // namespace opep
