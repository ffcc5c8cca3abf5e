#include "qsurf/snake.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace qsurf {

const char* side_name(Side s) {
    switch (s) {
    case Side::S: return "S";
    case Side::E: return "E";
    case Side::N: return "N";
    case Side::W: return "W";
    }
    return "?";
}

namespace {

constexpr std::array<Side, 4> kSides{Side::S, Side::E, Side::N, Side::W};

Side ccw_next(Side s) { return static_cast<Side>((static_cast<int>(s) + 1) % 4); }
Side ccw_prev(Side s) { return static_cast<Side>((static_cast<int>(s) + 3) % 4); }

// The two sides not in pair, ordered so the second follows the first
// counterclockwise.
std::pair<Side, Side> complement(std::pair<Side, Side> pair) {
    std::vector<Side> rest;
    for (Side s : kSides)
        if (s != pair.first && s != pair.second)
            rest.push_back(s);
    if (ccw_next(rest[0]) == rest[1])
        return {rest[0], rest[1]};
    return {rest[1], rest[0]};
}

std::array<int, 4> segment_of(int x, int y, Side s) {
    switch (s) {
    case Side::S: return {x, y, x + 1, y};
    case Side::E: return {x + 1, y, x + 1, y + 1};
    case Side::N: return {x, y + 1, x + 1, y + 1};
    case Side::W: return {x, y, x, y + 1};
    }
    return {};
}

} // namespace

std::string SnakeGraph::edge_name(int e) const {
    const SnakeEdge& ed = edges.at(static_cast<size_t>(e));
    return std::to_string(ed.tile) + side_name(ed.side);
}

std::string SnakeGraph::matching_text(const PerfectMatching& p) const {
    std::string s = "{";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += edge_name(p[i]);
    }
    return s + "}";
}

std::vector<Step> snake_from_string(const StringWord& w) {
    std::vector<Step> steps;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i == 0) {
            steps.push_back(w.letters[0].direct ? Step::Right : Step::Up);
            continue;
        }
        bool same = w.letters[i].direct == w.letters[i - 1].direct;
        Step prev = steps.back();
        steps.push_back(same ? (prev == Step::Right ? Step::Up : Step::Right) : prev);
    }
    return steps;
}

std::vector<int> triangle_sequence(const StringWord& w, const Surface& s) {
    const Triangulation& t = s.triangulation;
    validate_string(s.quiver, w);
    const size_t d = w.length();
    std::vector<int> deltas(d + 1, -1);
    for (size_t j = 1; j < d; ++j) {
        int tri = s.quiver.arrow(w.letters[j - 1].arrow).triangle;
        const auto& sides = t.triangles().at(static_cast<size_t>(tri)).sides;
        auto has = [&](int a) { return std::find(sides.begin(), sides.end(), a) != sides.end(); };
        if (!has(w.vertices[j - 1]) || !has(w.vertices[j]))
            throw Error(ErrorCode::NotCrossingSequence, "vertices " + std::to_string(w.vertices[j - 1]) + " and " +
                                                            std::to_string(w.vertices[j]) + " share no triangle");
        deltas[j] = tri;
    }
    if (d == 1) {
        const auto& inc = t.triangles_of(w.vertices[0]);
        deltas[0] = inc[0];
        deltas[1] = inc[1];
    } else {
        deltas[0] = t.other_triangle(w.vertices.front(), deltas[1]);
        deltas[d] = t.other_triangle(w.vertices.back(), deltas[d - 1]);
    }
    return deltas;
}

SnakeGraph label_snake(const StringWord& w, const Surface& s) {
    const Triangulation& t = s.triangulation;
    const size_t d = w.length();
    SnakeGraph g;
    g.word = w;
    g.deltas = triangle_sequence(w, s);

    Side incoming = Side::W;
    int x = 0, y = 0;
    for (size_t j = 1; j <= d; ++j) {
        const int tau = w.vertices[j - 1];
        const bool odd = j % 2 == 1;
        // (P, Q): labels in tile-counterclockwise order; odd tiles keep the
        // surface orientation, even tiles reflect it.
        auto place = [&](int tri) {
            int xs = t.x_side(tri, tau), ys = t.y_side(tri, tau);
            return odd ? std::make_pair(xs, ys) : std::make_pair(ys, xs);
        };
        auto [p0, q0] = place(g.deltas[j - 1]);
        auto [p1, q1] = place(g.deltas[j]);
        const bool p_is_ccw = !odd;
        std::pair<Side, Side> pair0, pair1;
        if (j == 1) {
            if (d == 1) {
                pair0 = {Side::S, Side::E};
            } else {
                int glue = t.third_side(g.deltas[1], tau, w.vertices[1]);
                Side out = w.letters[0].direct ? Side::E : Side::N;
                pair1 = p1 == glue ? std::make_pair(out, ccw_next(out)) : std::make_pair(ccw_prev(out), out);
                pair0 = complement(pair1);
            }
        } else {
            int glue_prev = t.third_side(g.deltas[j - 1], tau, w.vertices[j - 2]);
            pair0 = p0 == glue_prev ? std::make_pair(incoming, ccw_next(incoming))
                                    : std::make_pair(ccw_prev(incoming), incoming);
        }
        pair1 = complement(pair0);
        Tile tile;
        tile.index = static_cast<int>(j);
        tile.diagonal = tau;
        tile.odd = odd;
        tile.x = x;
        tile.y = y;
        auto set_side = [&](Side sd, int label, size_t delta, bool ccw) {
            tile.sides[static_cast<size_t>(sd)] = TileSide{label, g.deltas[delta], static_cast<int>(delta), ccw};
        };
        set_side(pair0.first, p0, j - 1, p_is_ccw);
        set_side(pair0.second, q0, j - 1, !p_is_ccw);
        set_side(pair1.first, p1, j, p_is_ccw);
        set_side(pair1.second, q1, j, !p_is_ccw);
        if (j < d) {
            int glue = t.third_side(g.deltas[j], tau, w.vertices[j]);
            Side out = tile.sides[static_cast<size_t>(pair1.first)].label == glue ? pair1.first : pair1.second;
            if (out != Side::E && out != Side::N)
                throw Error(ErrorCode::NotCrossingSequence, "glue edge of tile " + std::to_string(j) + " lands on " +
                                                                side_name(out));
            g.shape.push_back(out == Side::E ? Step::Right : Step::Up);
            incoming = out == Side::E ? Side::W : Side::S;
            if (out == Side::E)
                ++x;
            else
                ++y;
        }
        g.tiles.push_back(tile);
    }
    if (g.shape != snake_from_string(w))
        throw Error(ErrorCode::NotCrossingSequence, "tile placement disagrees with the string shape");

    std::map<std::array<int, 4>, int> index;
    g.tile_edges.assign(d, {});
    for (const Tile& tile : g.tiles)
        for (Side sd : kSides) {
            auto seg = segment_of(tile.x, tile.y, sd);
            int label = tile.sides[static_cast<size_t>(sd)].label;
            auto it = index.find(seg);
            int e;
            if (it == index.end()) {
                e = static_cast<int>(g.edges.size());
                g.edges.push_back(SnakeEdge{tile.index, sd, label, false, seg});
                index.emplace(seg, e);
            } else {
                e = it->second;
                if (g.edges[static_cast<size_t>(e)].label != label)
                    throw Error(ErrorCode::NotCrossingSequence,
                                "glue labels disagree at tile " + std::to_string(tile.index));
                g.edges[static_cast<size_t>(e)].glue = true;
            }
            g.tile_edges[static_cast<size_t>(tile.index - 1)][static_cast<size_t>(sd)] = e;
        }
    return g;
}

namespace {

struct VertexIndex {
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> ends; // per edge
    std::vector<int> last_tile;            // per vertex

    explicit VertexIndex(const SnakeGraph& g) {
        auto id = [&](int x, int y) {
            auto [it, ins] = ids.try_emplace({x, y}, static_cast<int>(ids.size()));
            return it->second;
        };
        for (const SnakeEdge& e : g.edges)
            ends.emplace_back(id(e.segment[0], e.segment[1]), id(e.segment[2], e.segment[3]));
        last_tile.assign(ids.size(), 0);
        for (const Tile& t : g.tiles)
            for (Side sd : kSides) {
                auto [a, b] = ends[static_cast<size_t>(g.edge_of(t.index, sd))];
                last_tile[static_cast<size_t>(a)] = std::max(last_tile[static_cast<size_t>(a)], t.index);
                last_tile[static_cast<size_t>(b)] = std::max(last_tile[static_cast<size_t>(b)], t.index);
            }
    }
};

} // namespace

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g) {
    VertexIndex vi(g);
    const size_t nv = vi.ids.size();
    // Edges owned by each tile (the lowest tile containing them).
    std::vector<std::vector<int>> owned(g.d());
    for (size_t e = 0; e < g.edges.size(); ++e)
        owned[static_cast<size_t>(g.edges[e].tile - 1)].push_back(static_cast<int>(e));
    std::vector<std::vector<int>> closing(g.d()); // vertices that must be covered after each tile
    for (size_t v = 0; v < nv; ++v)
        closing[static_cast<size_t>(vi.last_tile[v] - 1)].push_back(static_cast<int>(v));

    std::vector<PerfectMatching> out;
    std::vector<char> covered(nv, 0);
    PerfectMatching chosen;
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == g.d()) {
            PerfectMatching p = chosen;
            std::sort(p.begin(), p.end());
            out.push_back(std::move(p));
            return;
        }
        const auto& own = owned[t];
        const unsigned subsets = 1u << own.size();
        for (unsigned mask = 0; mask < subsets; ++mask) {
            std::vector<int> touched;
            bool ok = true;
            for (size_t k = 0; k < own.size() && ok; ++k) {
                if (!(mask & (1u << k)))
                    continue;
                auto [a, b] = vi.ends[static_cast<size_t>(own[k])];
                if (covered[static_cast<size_t>(a)] || covered[static_cast<size_t>(b)]) {
                    ok = false;
                    break;
                }
                covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = 1;
                touched.push_back(a);
                touched.push_back(b);
            }
            if (ok)
                for (int v : closing[t])
                    if (!covered[static_cast<size_t>(v)])
                        ok = false;
            if (ok) {
                size_t before = chosen.size();
                for (size_t k = 0; k < own.size(); ++k)
                    if (mask & (1u << k))
                        chosen.push_back(own[k]);
                rec(t + 1);
                chosen.resize(before);
            }
            for (int v : touched)
                covered[static_cast<size_t>(v)] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_perfect_matching(const SnakeGraph& g, const PerfectMatching& p) {
    VertexIndex vi(g);
    std::vector<int> deg(vi.ids.size(), 0);
    for (int e : p) {
        if (e < 0 || static_cast<size_t>(e) >= g.edges.size())
            return false;
        auto [a, b] = vi.ends[static_cast<size_t>(e)];
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; });
}

std::vector<PerfectMatching> enumerate_matchings_bruteforce(const SnakeGraph& g) {
    const size_t ne = g.edges.size();
    if (ne > 24)
        throw Error(ErrorCode::InvalidArgument, "graph too large for brute force");
    std::vector<PerfectMatching> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << ne); ++mask) {
        PerfectMatching p;
        for (size_t e = 0; e < ne; ++e)
            if (mask & (uint64_t{1} << e))
                p.push_back(static_cast<int>(e));
        if (is_perfect_matching(g, p))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The boundary of a snake graph is one even cycle; its two perfect
// matchings alternate along it.
std::pair<PerfectMatching, PerfectMatching> boundary_matchings(const SnakeGraph& g) {
    VertexIndex vi(g);
    std::vector<std::vector<int>> adj(vi.ids.size());
    std::vector<int> boundary;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].glue)
            continue;
        boundary.push_back(static_cast<int>(e));
        adj[static_cast<size_t>(vi.ends[e].first)].push_back(static_cast<int>(e));
        adj[static_cast<size_t>(vi.ends[e].second)].push_back(static_cast<int>(e));
    }
    PerfectMatching a, b;
    int e = boundary.front();
    int v = vi.ends[static_cast<size_t>(e)].second;
    bool take_a = true;
    for (size_t step = 0; step < boundary.size(); ++step) {
        (take_a ? a : b).push_back(e);
        take_a = !take_a;
        const auto& nb = adj[static_cast<size_t>(v)];
        int next = nb[0] == e ? nb[1] : nb[0];
        auto [x, y] = vi.ends[static_cast<size_t>(next)];
        v = x == v ? y : x;
        e = next;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b || !is_perfect_matching(g, a) || !is_perfect_matching(g, b))
        throw Error(ErrorCode::InvalidArgument, "boundary matchings are degenerate");
    return {a, b};
}

} // namespace

PerfectMatching minimal_matching(const SnakeGraph& g) {
    auto [a, b] = boundary_matchings(g);
    // P_- avoids both counterclockwise sides of the first tile.
    const Tile& t1 = g.tile(1);
    auto avoids = [&](const PerfectMatching& p) {
        for (Side sd : kSides)
            if (t1.sides[static_cast<size_t>(sd)].ccw &&
                std::binary_search(p.begin(), p.end(), g.edge_of(1, sd)))
                return false;
        return true;
    };
    bool ra = avoids(a), rb = avoids(b);
    if (ra == rb)
        throw Error(ErrorCode::InvalidArgument, "cannot tell the minimal matching apart");
    return ra ? a : b;
}

PerfectMatching maximal_matching(const SnakeGraph& g) {
    auto [a, b] = boundary_matchings(g);
    return minimal_matching(g) == a ? b : a;
}

bool can_twist(const SnakeGraph& g, const PerfectMatching& p, int j) {
    if (j < 1 || static_cast<size_t>(j) > g.d())
        return false;
    int count = 0;
    for (Side sd : kSides)
        count += std::binary_search(p.begin(), p.end(), g.edge_of(j, sd));
    return count == 2;
}

PerfectMatching twist(const SnakeGraph& g, const PerfectMatching& p, int j) {
    if (!can_twist(g, p, j))
        throw Error(ErrorCode::CannotTwist, "tile " + std::to_string(j) + " does not hold two matching edges");
    std::set<int> r(p.begin(), p.end());
    for (Side sd : kSides) {
        int e = g.edge_of(j, sd);
        if (r.count(e))
            r.erase(e);
        else
            r.insert(e);
    }
    return PerfectMatching(r.begin(), r.end());
}

bool twist_connectivity(const SnakeGraph& g) {
    auto all = enumerate_matchings(g);
    std::set<PerfectMatching> seen{minimal_matching(g)};
    std::deque<PerfectMatching> queue{*seen.begin()};
    while (!queue.empty()) {
        PerfectMatching p = queue.front();
        queue.pop_front();
        for (int j = 1; j <= static_cast<int>(g.d()); ++j)
            if (can_twist(g, p, j)) {
                PerfectMatching q = twist(g, p, j);
                if (seen.insert(q).second)
                    queue.push_back(q);
            }
    }
    return seen.size() == all.size() && std::equal(seen.begin(), seen.end(), all.begin());
}

IndexSet enclosed_tiles(const SnakeGraph& g, const PerfectMatching& p) {
    PerfectMatching pm = minimal_matching(g);
    std::vector<int> diff;
    std::set_symmetric_difference(p.begin(), p.end(), pm.begin(), pm.end(), std::back_inserter(diff));
    IndexSet out;
    // Parity of vertical cycle edges crossed by a ray leaving the tile to the left.
    for (const Tile& t : g.tiles) {
        int crossings = 0;
        for (int e : diff) {
            const auto& s = g.edges[static_cast<size_t>(e)].segment;
            if (s[0] == s[2] && s[0] <= t.x && s[1] == t.y && s[3] == t.y + 1)
                ++crossings;
        }
        if (crossings % 2)
            out.push_back(t.index);
    }
    return out;
}

CanonicalSubmodule matching_to_submodule(const SnakeGraph& g, const PerfectMatching& p) {
    IndexSet iset = enclosed_tiles(g, p);
    if (!is_canonical_submodule(g.word, iset)) {
        std::string s;
        for (int i : iset)
            s += (s.empty() ? "" : ",") + std::to_string(i);
        throw Error(ErrorCode::BijectionViolation, "enclosed tiles {" + s + "} of " + g.matching_text(p) +
                                                       " are not a canonical submodule");
    }
    return CanonicalSubmodule{iset, interval_decomposition(iset)};
}

} // namespace qsurf
