#pragma once

// Index bookkeeping for the six internal edges. Vertices are 0-based (0..3);
// edge positions follow the fixed ordering 12, 13, 14, 34, 24, 23, so
// positions p and p+3 are opposite edges.

#include <array>

namespace hypertet {

struct Edge {
  int i, j;
};

inline constexpr std::array<Edge, 6> kEdges = {{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}, {1, 2}}};

/// Edge positions meeting at each vertex.
inline constexpr std::array<std::array<int, 3>, 4> kVertexEdges = {{
    {0, 1, 2},
    {0, 4, 5},
    {1, 3, 5},
    {2, 3, 4},
}};

inline constexpr std::array<std::array<int, 4>, 4> kEdgeIndex = {{
    {-1, 0, 1, 2},
    {0, -1, 5, 4},
    {1, 5, -1, 3},
    {2, 4, 3, -1},
}};

constexpr int edge_index(int i, int j) { return kEdgeIndex[i][j]; }

constexpr int opposite_edge(int e) { return (e + 3) % 6; }

/// The two vertices not on edge e, in increasing order.
constexpr Edge complementary_pair(int e) { return kEdges[opposite_edge(e)]; }

}  // namespace hypertet
