#include "qsurf/kronecker.hpp"

#include <algorithm>

namespace qsurf {

namespace {

struct Entry {
    int64_t v = 0;
    int64_t alpha = 0;
    int64_t u = 0, w = 0; // dimension vector
};
using Table = std::map<IndexSet, Entry>;

Table make_table(const Surface& a, Family family, int s) {
    Table t;
    if (family == Family::H && s == 0) {
        t[IndexSet{}] = Entry{};
        return t;
    }
    WeightedSnake ws = build_weighted(a, family, s);
    SnakeGraph g = label_snake(ws.word, a);
    for (const auto& [p, val] : valuation_v(g)) {
        IndexSet iset = enclosed_tiles(g, p);
        Entry e;
        e.v = val;
        e.alpha = alpha_of_matching(ws, g, p);
        for (int j : iset)
            (ws.weights[static_cast<size_t>(j - 1)] == 1 ? e.u : e.w) += 1;
        t[iset] = e;
    }
    return t;
}

const char* family_name(Family f) { return f == Family::G ? "G" : "H"; }

std::string set_text(const IndexSet& s) {
    std::string r = "{";
    for (size_t i = 0; i < s.size(); ++i)
        r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

IndexSet without(IndexSet s, std::initializer_list<int> drop) {
    for (int d : drop)
        s.erase(std::remove(s.begin(), s.end(), d), s.end());
    return s;
}

} // namespace

Surface kronecker_surface() {
    std::vector<Arc> arcs{{1, ArcKind::Internal}, {2, ArcKind::Internal}, {3, ArcKind::Boundary}, {4, ArcKind::Boundary}};
    std::vector<Triangle> tris{Triangle{{2, 1, 3}}, Triangle{{2, 1, 4}}};
    return Surface::build(Triangulation(arcs, tris), SeedMode::Auto, "annulus");
}

WeightedSnake build_weighted(const Surface& a, Family family, int s) {
    if (s < 0 || (family == Family::H && s == 0))
        throw Error(ErrorCode::InvalidArgument, std::string(family_name(family)) + "_" + std::to_string(s) +
                                                    " is not defined");
    if (a.quiver.arrows.size() != 2 || a.n() != 2)
        throw Error(ErrorCode::InvalidArgument, "expected the annulus with two internal arcs");
    const Arrow& first = a.quiver.arrows[0];
    const Arrow& second = a.quiver.arrows[1];
    if (first.source != 1 || first.target != 2 || second.source != 1 || second.target != 2)
        throw Error(ErrorCode::InvalidArgument, "expected two arrows from 1 to 2");
    WeightedSnake ws;
    ws.family = family;
    ws.s = s;
    const int tiles = family == Family::G ? 2 * s + 1 : 2 * s;
    for (int j = 0; j < tiles; ++j) {
        ws.word.vertices.push_back(j % 2 == 0 ? 1 : 2);
        ws.weights.push_back(j % 2 == 0 ? 1 : 2);
        if (j + 1 < tiles)
            ws.word.letters.push_back(j % 2 == 0 ? Letter{first.id, true} : Letter{second.id, false});
    }
    validate_string(a.quiver, ws.word);
    return ws;
}

int64_t alpha_of_tile(const WeightedSnake& ws, int tile) {
    const int64_t i = ws.index_of(tile);
    const bool light = ws.weights.at(static_cast<size_t>(tile - 1)) == 1;
    if (ws.family == Family::G)
        return light ? i : -i;
    return light ? i + 1 : -i;
}

int64_t alpha_of_matching(const WeightedSnake& ws, const SnakeGraph& g, const PerfectMatching& p) {
    int64_t sum = 0;
    for (int j : enclosed_tiles(g, p))
        sum += alpha_of_tile(ws, j);
    return sum;
}

TorusElement r_s(const Surface& a, Family family, int s, int64_t scale) {
    if (scale == 0)
        scale = a.uniform_d();
    WeightedSnake ws = build_weighted(a, family, s);
    SnakeGraph g = label_snake(ws.word, a);
    TorusElement out(a.rank());
    for (const PerfectMatching& p : enumerate_matchings(g))
        out.add_term(x_of_matching(a, g, p), QPoly::monomial(scale * alpha_of_matching(ws, g, p)));
    return out;
}

EqualityReport equality_check(const Surface& a, Family family, int s) {
    EqualityReport r;
    std::map<std::pair<int64_t, int64_t>, std::pair<QPoly, QPoly>> by_dim;
    for (const auto& [iset, e] : make_table(a, family, s)) {
        auto& [pa, pv] = by_dim[{e.u, e.w}];
        pa.add_term(e.alpha, 1);
        pv.add_term(e.v, 1);
        if (e.alpha != e.v)
            r.alpha_differs_from_v = true;
    }
    for (const auto& [dim, sums] : by_dim)
        if (!(sums.first == sums.second)) {
            r.equal = false;
            r.mismatches.push_back("dimension (" + std::to_string(dim.first) + "," + std::to_string(dim.second) +
                                   "): alpha gives " + to_text(sums.first) + ", v gives " + to_text(sums.second));
        }
    return r;
}

LemmaReport recursion_lemma_checks(const Surface& a, int s) {
    if (s < 1)
        throw Error(ErrorCode::InvalidArgument, "recursions need s >= 1");
    LemmaReport r;
    const Table g = make_table(a, Family::G, s), h = make_table(a, Family::H, s);
    const Table g1 = make_table(a, Family::G, s - 1), h1 = make_table(a, Family::H, s - 1);
    auto tally = [&](const std::string& name, bool holds, const std::string& where) {
        auto& t = r.tallies[name];
        (holds ? t.first : t.second) += 1;
        if (!holds && r.ok) {
            r.ok = false;
            r.first_failure = name + " fails at " + where;
        }
    };
    const int n = 2 * s + 1;
    for (const auto& [iset, x] : g) {
        std::string where = "G_" + std::to_string(s) + " " + set_text(iset);
        if (!std::binary_search(iset.begin(), iset.end(), n)) {
            const Entry& y = h.at(iset);
            tally("G, last tile outside: alpha", x.alpha == y.alpha - x.u, where);
            tally("G, last tile outside: v", x.v == y.v - x.u, where);
        } else {
            const Entry& y = g1.at(without(iset, {n - 1, n}));
            tally("G, last tile inside: alpha", x.alpha == y.alpha - x.u + x.w + 1, where);
            tally("G, last tile inside: v", x.v == y.v - x.u + x.w + 1, where);
        }
    }
    tally("G, v of the last two tiles is 1", g.at(IndexSet{n - 1, n}).v == 1, "G_" + std::to_string(s));
    const int m = 2 * s;
    for (const auto& [iset, x] : h) {
        std::string where = "H_" + std::to_string(s) + " " + set_text(iset);
        if (std::binary_search(iset.begin(), iset.end(), m)) {
            const Entry& y = g1.at(without(iset, {m}));
            tally("H, last tile inside: alpha", x.alpha == y.alpha - s + x.w, where);
            tally("H, last tile inside: v", x.v == y.v + s - x.w, where);
        } else {
            const Entry& y = h1.at(iset);
            tally("H, last tile outside: alpha", x.alpha == y.alpha - x.u + x.w, where);
            tally("H, last tile outside: v", x.v == y.v + x.u - x.w, where);
        }
    }
    tally("H, v of the last tile is s-1", h.at(IndexSet{m}).v == s - 1, "H_" + std::to_string(s));
    return r;
}

} // namespace qsurf
