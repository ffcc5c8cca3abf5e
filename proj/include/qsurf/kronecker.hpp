#pragma once

#include <map>

#include "qsurf/expansion.hpp"

namespace qsurf {

enum class Family { G, H };

// A straight snake of the annulus with one marked point on each boundary.
// Tile j (1-based) has centered index j - s - 1, running -s..s; odd tiles carry weight 1.
struct WeightedSnake {
    Family family = Family::G;
    int s = 0;
    StringWord word;
    std::vector<int> weights;

    int index_of(int tile) const { return tile - s - 1; }
    size_t size() const { return weights.size(); }
};

// The annulus with triangles (2,1,3), (2,1,4).
Surface kronecker_surface();

WeightedSnake build_weighted(const Surface& annulus, Family family, int s);
int64_t alpha_of_tile(const WeightedSnake& ws, int tile);
int64_t alpha_of_matching(const WeightedSnake& ws, const SnakeGraph& g, const PerfectMatching& p);

// Sum of q^{scale * alpha / 2} X(P). scale = 0 uses the seed d.
TorusElement r_s(const Surface& annulus, Family family, int s, int64_t scale = 0);

struct EqualityReport {
    bool equal = true;
    bool alpha_differs_from_v = false; // on some single matching
    std::vector<std::string> mismatches;
};
// Per dimension vector, the q^{alpha/2} and q^{v/2} sums agree.
EqualityReport equality_check(const Surface& annulus, Family family, int s);

struct LemmaReport {
    bool ok = true;
    // Relation name -> (holds, fails).
    std::map<std::string, std::pair<int, int>> tallies;
    std::string first_failure;
};
// Recursions relating G_s and H_s to G_{s-1}, H_{s-1}; s >= 1.
LemmaReport recursion_lemma_checks(const Surface& annulus, int s);

} // namespace qsurf
