#include <array>

#include "opep/graph.hpp"

namespace opep {

namespace {

constexpr std::array<Edge, 45> kBoardEdges{{
    {1, 2}, {1, 6}, {1, 7}, {2, 3}, {2, 7}, {3, 4}, {3, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 9},
    {4, 10}, {6, 7}, {6, 11}, {7, 8}, {7, 12}, {7, 13}, {8, 9}, {8, 13}, {8, 14}, {8, 15}, {9, 15},
    {9, 16}, {10, 17}, {11, 12}, {11, 18}, {11, 19}, {12, 13}, {12, 19}, {12, 20}, {13, 14},
    {13, 20}, {14, 15}, {14, 20}, {14, 21}, {15, 16}, {15, 21}, {15, 22}, {16, 17}, {16, 22},
    {17, 22}, {18, 19}, {19, 20}, {20, 21}, {21, 22},
}};

// Added on top of the board edges to form the extended graph.
constexpr std::array<Edge, 21> kExtensionEdges{{
    {5, 23}, {5, 24}, {17, 25}, {18, 26}, {18, 27}, {19, 27}, {19, 28}, {20, 28}, {21, 28},
    {21, 29}, {22, 29}, {22, 30}, {22, 31}, {24, 25}, {25, 32}, {26, 27}, {27, 28}, {28, 29},
    {29, 30}, {30, 32}, {31, 32},
}};

}  // namespace

Graph builtin_graph(std::string_view name) {
  if (name == "board") return Graph(22, kBoardEdges);
  if (name == "extended") {
    std::vector<Edge> edges(kBoardEdges.begin(), kBoardEdges.end());
    edges.insert(edges.end(), kExtensionEdges.begin(), kExtensionEdges.end());
    return Graph(32, edges);
  }
  throw InputError("unknown builtin graph \"" + std::string(name) + "\" (expected board or extended)");
}

}  // namespace opep
