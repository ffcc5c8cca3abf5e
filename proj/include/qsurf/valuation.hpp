#pragma once

#include <map>

#include "qsurf/snake.hpp"

namespace qsurf {

struct PairCounts {
    int minus = 0;
    int plus = 0;
    bool operator==(const PairCounts&) const = default;
};

// Diagonals labeled tau on tiles before and after tile s.
PairCounts m_pm(const SnakeGraph& g, int s, int tau);
// Edges of P labeled tau in the subgraphs before and after tile s.
PairCounts n_pm(const SnakeGraph& g, int s, const PerfectMatching& p, int tau);
int omega(const SnakeGraph& g, int s, const PerfectMatching& p);

using MatchingValuation = std::map<PerfectMatching, int64_t>;
// Propagates v(P_-) = 0 across twists and checks every twist edge.
MatchingValuation valuation_v(const SnakeGraph& g);

// Module-side counts at one position. Pair-type positions (a glue arc, or
// the ends 0 and d+1) carry a single count n; the others carry n+ and n-.
struct PositionCounts {
    bool single = false;
    int n = 0;
    int n_plus = 0;
    int n_minus = 0;
    int total() const { return single ? n : n_plus + n_minus; }
    bool operator==(const PositionCounts&) const = default;
};
using PositionTable = std::map<int, PositionCounts>;
// Drops positions whose counts are all zero.
PositionTable normalized(const PositionTable& t);

// Counts derived from the string and index set alone.
PositionTable n_module(const Surface& s, const StringWord& w, int k, const IndexSet& iset);
// The same counts read off a matching of the snake graph.
PositionTable n_snake_scan(const SnakeGraph& g, const PerfectMatching& p, int k);

struct BigCounts {
    int m_minus = 0, m_plus = 0, n_minus = 0, n_plus = 0;
    bool operator==(const BigCounts&) const = default;
};
BigCounts big_counts(const StringWord& w, const PositionTable& table, int k, int j);
BigCounts big_counts(const Surface& s, const StringWord& w, int k, int j, const IndexSet& iset);
int omega_prime(const Surface& s, const StringWord& w, int j, const IndexSet& iset);

using SubmoduleValuation = std::map<IndexSet, int64_t>;
SubmoduleValuation valuation_v_gamma(const Surface& s, const StringWord& w);

} // namespace qsurf
