#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsurf/strings.hpp"

namespace qsurf {

enum class Side : int { S = 0, E = 1, N = 2, W = 3 };
enum class Step { Right, Up };

const char* side_name(Side s);

struct TileSide {
    int label = 0;
    int triangle = 0;  // triangulation triangle index
    int delta = 0;     // position j of the triangle in the sequence Delta_0..Delta_d
    bool ccw = false;  // counterclockwise from the diagonal (role y)
};

struct Tile {
    int index = 0; // 1-based
    int diagonal = 0;
    bool odd = true;
    std::array<TileSide, 4> sides{}; // indexed by Side
    int x = 0, y = 0;                // lower-left corner
};

struct SnakeEdge {
    int tile = 0; // lowest tile containing the edge
    Side side = Side::S;
    int label = 0;
    bool glue = false;
    std::array<int, 4> segment{}; // x1, y1, x2, y2
};

using PerfectMatching = std::vector<int>; // sorted edge indices

class SnakeGraph {
  public:
    StringWord word;
    std::vector<int> deltas; // Delta_0..Delta_d
    std::vector<Tile> tiles;
    std::vector<Step> shape;
    std::vector<SnakeEdge> edges;
    std::vector<std::array<int, 4>> tile_edges; // per tile, edge index per side

    size_t d() const { return tiles.size(); }
    const Tile& tile(int j) const { return tiles.at(static_cast<size_t>(j - 1)); }
    int edge_of(int j, Side s) const { return tile_edges.at(static_cast<size_t>(j - 1))[static_cast<size_t>(s)]; }
    std::string edge_name(int e) const;
    std::string matching_text(const PerfectMatching& p) const;
};

std::vector<Step> snake_from_string(const StringWord& w);
// Delta_0..Delta_d: the triangles crossed in order, including the two
// beyond the end arcs.
std::vector<int> triangle_sequence(const StringWord& w, const Surface& s);
SnakeGraph label_snake(const StringWord& w, const Surface& s);

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g);
// Checks every edge subset; meant for small graphs.
std::vector<PerfectMatching> enumerate_matchings_bruteforce(const SnakeGraph& g);
bool is_perfect_matching(const SnakeGraph& g, const PerfectMatching& p);

PerfectMatching minimal_matching(const SnakeGraph& g);
PerfectMatching maximal_matching(const SnakeGraph& g);

bool can_twist(const SnakeGraph& g, const PerfectMatching& p, int j);
PerfectMatching twist(const SnakeGraph& g, const PerfectMatching& p, int j);
bool twist_connectivity(const SnakeGraph& g);

IndexSet enclosed_tiles(const SnakeGraph& g, const PerfectMatching& p);
CanonicalSubmodule matching_to_submodule(const SnakeGraph& g, const PerfectMatching& p);

} // namespace qsurf
