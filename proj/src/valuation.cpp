#include "qsurf/valuation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qsurf {

namespace {

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

std::string index_set_text(const IndexSet& iset) {
    std::string s = "{";
    for (size_t i = 0; i < iset.size(); ++i)
        s += (i ? "," : "") + std::to_string(iset[i]);
    return s + "}";
}

} // namespace

PairCounts m_pm(const SnakeGraph& g, int s, int tau) {
    if (s < 1 || static_cast<size_t>(s) > g.d())
        throw Error(ErrorCode::IndexOutOfRange, "tile " + std::to_string(s));
    PairCounts c;
    for (const Tile& t : g.tiles) {
        if (t.diagonal != tau)
            continue;
        if (t.index < s)
            ++c.minus;
        else if (t.index > s)
            ++c.plus;
    }
    return c;
}

PairCounts n_pm(const SnakeGraph& g, int s, const PerfectMatching& p, int tau) {
    if (!can_twist(g, p, s))
        throw Error(ErrorCode::CannotTwist, "tile " + std::to_string(s) + " of " + g.matching_text(p));
    std::set<int> before, after;
    for (const Tile& t : g.tiles)
        for (int e : g.tile_edges[static_cast<size_t>(t.index - 1)]) {
            if (t.index < s)
                before.insert(e);
            else if (t.index > s)
                after.insert(e);
        }
    PairCounts c;
    for (int e : p) {
        if (g.edges[static_cast<size_t>(e)].label != tau)
            continue;
        c.minus += static_cast<int>(before.count(e));
        c.plus += static_cast<int>(after.count(e));
    }
    return c;
}

int omega(const SnakeGraph& g, int s, const PerfectMatching& p) {
    const Tile& t = g.tile(s);
    PairCounts m = m_pm(g, s, t.diagonal);
    PairCounts n = n_pm(g, s, p, t.diagonal);
    bool ccw_in = true;
    for (size_t k = 0; k < 4; ++k)
        if (t.sides[k].ccw && !contains(p, g.tile_edges[static_cast<size_t>(s - 1)][k]))
            ccw_in = false;
    int value = n.plus - m.plus - n.minus + m.minus;
    return ccw_in ? value : -value;
}

MatchingValuation valuation_v(const SnakeGraph& g) {
    MatchingValuation v;
    PerfectMatching start = minimal_matching(g);
    v[start] = 0;
    std::deque<PerfectMatching> queue{start};
    while (!queue.empty()) {
        PerfectMatching p = queue.front();
        queue.pop_front();
        for (int s = 1; s <= static_cast<int>(g.d()); ++s) {
            if (!can_twist(g, p, s))
                continue;
            PerfectMatching q = twist(g, p, s);
            int64_t value = v[p] - omega(g, s, p);
            auto it = v.find(q);
            if (it == v.end()) {
                v[q] = value;
                queue.push_back(q);
            } else if (it->second != value) {
                throw Error(ErrorCode::InconsistentValuation,
                            "twist on tile " + std::to_string(s) + " from " + g.matching_text(p) + " gives " +
                                std::to_string(value) + ", already " + std::to_string(it->second));
            }
        }
    }
    PerfectMatching top = maximal_matching(g);
    if (v.at(top) != 0)
        throw Error(ErrorCode::InconsistentValuation, "v(P_+) = " + std::to_string(v.at(top)));
    return v;
}

PositionTable normalized(const PositionTable& t) {
    PositionTable out;
    for (const auto& [i, c] : t)
        if (c.n || c.n_plus || c.n_minus)
            out[i] = c;
    return out;
}

PositionTable n_module(const Surface& s, const StringWord& w, int k, const IndexSet& iset) {
    const Triangulation& t = s.triangulation;
    const std::vector<int> deltas = triangle_sequence(w, s);
    const int d = static_cast<int>(w.length());
    auto in = [&](int i) { return contains(iset, i); };
    auto x = [&](int i) { return w.vertices[static_cast<size_t>(i - 1)]; };
    PositionTable table;
    // Positions whose vertex is tau_k.
    for (int i = 1; i <= d; ++i) {
        if (x(i) != k)
            continue;
        PositionCounts c;
        if (i < d) {
            bool direct = w.letters[static_cast<size_t>(i - 1)].direct;
            c.n_plus = direct ? !in(i + 1) : in(i + 1);
        }
        if (i > 1) {
            bool direct = w.letters[static_cast<size_t>(i - 2)].direct;
            c.n_minus = direct ? in(i - 1) : !in(i - 1);
        }
        table[i] = c;
    }
    // tau_k is the third side of the triangle between x_i and x_{i+1}.
    for (int i = 1; i < d; ++i) {
        if (t.third_side(deltas[static_cast<size_t>(i)], x(i), x(i + 1)) != k)
            continue;
        PositionCounts c;
        c.single = true;
        c.n = in(i) != in(i + 1);
        table[i] = c;
    }
    auto has = [&](int tri, int arc) {
        const auto& sd = t.triangles()[static_cast<size_t>(tri)].sides;
        return std::find(sd.begin(), sd.end(), arc) != sd.end();
    };
    // First and last tiles.
    if (x(1) != k && has(deltas[0], k)) {
        PositionCounts c;
        c.single = true;
        c.n = x(1) == t.y_side(deltas[0], k) ? !in(1) : in(1);
        table[0] = c;
    }
    if (x(d) != k && has(deltas[static_cast<size_t>(d)], k)) {
        PositionCounts c;
        c.single = true;
        c.n = x(d) == t.y_side(deltas[static_cast<size_t>(d)], k) ? !in(d) : in(d);
        table[d + 1] = c;
    }
    return table;
}

PositionTable n_snake_scan(const SnakeGraph& g, const PerfectMatching& p, int k) {
    const int d = static_cast<int>(g.d());
    PositionTable table;
    auto single = [&](int pos) -> PositionCounts& {
        PositionCounts& c = table[pos];
        c.single = true;
        return c;
    };
    // Every k-labeled edge is placed first, so positions show up with zero counts too.
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const SnakeEdge& ed = g.edges[e];
        if (ed.label != k)
            continue;
        const int taken = contains(p, static_cast<int>(e));
        if (ed.glue) {
            single(ed.tile).n += taken;
            continue;
        }
        const TileSide& side = g.tile(ed.tile).sides[static_cast<size_t>(ed.side)];
        const int pos = side.delta;
        if (pos == 0) {
            single(0).n += taken;
        } else if (pos == d) {
            single(d + 1).n += taken;
        } else if (ed.tile == pos + 1) {
            table[pos].n_plus += taken;
        } else if (ed.tile == pos) {
            table[pos + 1].n_minus += taken;
        } else {
            throw Error(ErrorCode::UnmatchedCase, "edge " + g.edge_name(static_cast<int>(e)) + " fits no position");
        }
    }
    return table;
}

BigCounts big_counts(const StringWord& w, const PositionTable& table, int k, int j) {
    const int d = static_cast<int>(w.length());
    if (j < 1 || j > d || w.vertices[static_cast<size_t>(j - 1)] != k)
        throw Error(ErrorCode::InvalidArgument, "position " + std::to_string(j) + " is not arc " + std::to_string(k));
    BigCounts c;
    for (int i = 1; i <= d; ++i) {
        if (w.vertices[static_cast<size_t>(i - 1)] != k)
            continue;
        if (i < j)
            ++c.m_minus;
        else if (i > j)
            ++c.m_plus;
    }
    for (const auto& [i, pc] : table) {
        if (i < j)
            c.n_minus += pc.total();
        else if (i > j)
            c.n_plus += pc.total();
        else {
            c.n_minus += pc.n_minus;
            c.n_plus += pc.n_plus;
        }
    }
    return c;
}

BigCounts big_counts(const Surface& s, const StringWord& w, int k, int j, const IndexSet& iset) {
    return big_counts(w, n_module(s, w, k, iset), k, j);
}

int omega_prime(const Surface& s, const StringWord& w, int j, const IndexSet& iset) {
    if (j < 1 || static_cast<size_t>(j) > w.length())
        throw Error(ErrorCode::IndexOutOfRange, "position " + std::to_string(j));
    int k = w.vertices[static_cast<size_t>(j - 1)];
    BigCounts c = big_counts(s, w, k, j, iset);
    int value = c.n_plus - c.m_plus - c.n_minus + c.m_minus;
    return contains(iset, j) ? value : -value;
}

SubmoduleValuation valuation_v_gamma(const Surface& s, const StringWord& w) {
    SubmoduleValuation v;
    v[IndexSet{}] = 0;
    std::deque<IndexSet> queue{IndexSet{}};
    const int d = static_cast<int>(w.length());
    while (!queue.empty()) {
        IndexSet n = queue.front();
        queue.pop_front();
        for (int j = 1; j <= d; ++j) {
            IndexSet m = n;
            auto it = std::lower_bound(m.begin(), m.end(), j);
            if (it != m.end() && *it == j)
                m.erase(it);
            else
                m.insert(it, j);
            if (!is_canonical_submodule(w, m))
                continue;
            int64_t value = v[n] - omega_prime(s, w, j, n);
            auto found = v.find(m);
            if (found == v.end()) {
                v[m] = value;
                queue.push_back(m);
            } else if (found->second != value) {
                throw Error(ErrorCode::InconsistentValuation, "step at " + std::to_string(j) + " from " +
                                                                  index_set_text(n) + " gives " + std::to_string(value) +
                                                                  ", already " + std::to_string(found->second));
            }
        }
    }
    for (const CanonicalSubmodule& c : enumerate_canonical_submodules(w))
        if (!v.count(c.index_set))
            throw Error(ErrorCode::UnreachableSubmodule, index_set_text(c.index_set) + " is not reachable from 0");
    return v;
}

} // namespace qsurf
