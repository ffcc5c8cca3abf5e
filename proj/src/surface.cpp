#include "qsurf/surface.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qsurf {

using json = nlohmann::json;
using Rational = boost::multiprecision::cpp_rational;

// ---- Triangulation

Triangulation::Triangulation(std::vector<Arc> arcs, std::vector<Triangle> triangles,
                             std::optional<IntMatrix> lambda)
    : arcs_(std::move(arcs)), triangles_(std::move(triangles)), lambda_(std::move(lambda)) {
    validate();
}

static std::string tri_label(size_t i) { return "triangle " + std::to_string(i); }

void Triangulation::validate() {
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (arcs_[i].id != static_cast<int>(i) + 1)
            throw Error(ErrorCode::InvalidTriangulation,
                        "arc ids must be exactly 1..m without repeats; expected " + std::to_string(i + 1) +
                            ", found " + std::to_string(arcs_[i].id));
    }
    n_ = 0;
    while (n_ < arcs_.size() && arcs_[n_].kind == ArcKind::Internal)
        ++n_;
    for (size_t i = n_; i < arcs_.size(); ++i)
        if (arcs_[i].kind != ArcKind::Boundary)
            throw Error(ErrorCode::InvalidTriangulation,
                        "internal arcs must be numbered 1..n before boundary arcs; arc " +
                            std::to_string(arcs_[i].id) + " is internal");
    if (n_ == 0)
        throw Error(ErrorCode::InvalidTriangulation, "no internal arcs");

    incidence_.assign(arcs_.size() + 1, {});
    for (size_t t = 0; t < triangles_.size(); ++t) {
        const auto& s = triangles_[t].sides;
        for (int a : s)
            if (a < 1 || static_cast<size_t>(a) > arcs_.size())
                throw Error(ErrorCode::InvalidTriangulation,
                            tri_label(t) + " references unknown arc " + std::to_string(a));
        if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2])
            throw Error(ErrorCode::InvalidTriangulation, tri_label(t) + " repeats a side (self-folded)");
        for (int a : s)
            incidence_[static_cast<size_t>(a)].push_back(static_cast<int>(t));
    }
    for (const Arc& a : arcs_) {
        const auto& inc = incidence_[static_cast<size_t>(a.id)];
        size_t want = a.kind == ArcKind::Internal ? 2 : 1;
        if (inc.size() != want) {
            std::string where = inc.empty() ? "no triangle" : tri_label(static_cast<size_t>(inc.back()));
            throw Error(ErrorCode::InvalidTriangulation,
                        "arc " + std::to_string(a.id) + " lies in " + std::to_string(inc.size()) +
                            " triangles, expected " + std::to_string(want) + " (at " + where + ")");
        }
    }

    // Marked points are classes of triangle corners; corner i sits between
    // sides i-1 and i, side i runs from corner i to corner i+1. Gluing along
    // an internal arc reverses its direction.
    const size_t corners = triangles_.size() * 3;
    std::vector<size_t> parent(corners);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    auto corner = [](size_t t, size_t i) { return t * 3 + (i % 3); };
    for (size_t a = 1; a <= n_; ++a) {
        const auto& inc = incidence_[a];
        size_t t0 = static_cast<size_t>(inc[0]), t1 = static_cast<size_t>(inc[1]);
        auto pos = [&](size_t t) {
            const auto& s = triangles_[t].sides;
            return static_cast<size_t>(std::find(s.begin(), s.end(), static_cast<int>(a)) - s.begin());
        };
        size_t i = pos(t0), j = pos(t1);
        unite(corner(t0, i), corner(t1, j + 1));
        unite(corner(t0, i + 1), corner(t1, j));
    }
    std::vector<bool> touches(corners, false);
    for (size_t t = 0; t < triangles_.size(); ++t)
        for (size_t i = 0; i < 3; ++i) {
            int before = triangles_[t].sides[(i + 2) % 3];
            int after = triangles_[t].sides[i];
            if (!is_internal(before) || !is_internal(after))
                touches[find(corner(t, i))] = true;
        }
    for (size_t t = 0; t < triangles_.size(); ++t)
        for (size_t i = 0; i < 3; ++i)
            if (!touches[find(corner(t, i))])
                throw Error(ErrorCode::InvalidTriangulation,
                            tri_label(t) + " has a corner at an interior marked point (puncture) between arcs " +
                                std::to_string(triangles_[t].sides[(i + 2) % 3]) + " and " +
                                std::to_string(triangles_[t].sides[i]));

    if (lambda_) {
        size_t k = lambda_->size();
        if (k != n_ && k != arcs_.size())
            throw Error(ErrorCode::InvalidTriangulation, "lambda must be n x n or m x m");
        for (const auto& row : *lambda_)
            if (row.size() != k)
                throw Error(ErrorCode::InvalidTriangulation, "lambda is not square");
    }
}

const std::vector<int>& Triangulation::triangles_of(int arc) const {
    if (arc < 1 || static_cast<size_t>(arc) > arcs_.size())
        throw Error(ErrorCode::IndexOutOfRange, "unknown arc " + std::to_string(arc));
    return incidence_[static_cast<size_t>(arc)];
}

int Triangulation::other_triangle(int arc, int tri) const {
    const auto& inc = triangles_of(arc);
    if (inc.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "arc " + std::to_string(arc) + " is not internal");
    return inc[0] == tri ? inc[1] : inc[0];
}

std::array<int, 3> Triangulation::rotated(int tri, int arc) const {
    const auto& s = triangles_.at(static_cast<size_t>(tri)).sides;
    for (size_t i = 0; i < 3; ++i)
        if (s[i] == arc)
            return {s[i], s[(i + 1) % 3], s[(i + 2) % 3]};
    throw Error(ErrorCode::InvalidArgument,
                "arc " + std::to_string(arc) + " is not a side of " + tri_label(static_cast<size_t>(tri)));
}

int Triangulation::third_side(int tri, int a, int b) const {
    for (int s : triangles_.at(static_cast<size_t>(tri)).sides)
        if (s != a && s != b)
            return s;
    throw Error(ErrorCode::InvalidArgument, "no third side");
}

bool Triangulation::is_internal_triangle(int tri) const {
    for (int s : triangles_.at(static_cast<size_t>(tri)).sides)
        if (!is_internal(s))
            return false;
    return true;
}

static IntMatrix parse_matrix(const json& j, const std::string& field) {
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, field + ": expected an array of rows");
    IntMatrix m;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array())
            throw Error(ErrorCode::ParseError, field + "[" + std::to_string(i) + "]: expected an array");
        IntVector row;
        for (size_t k = 0; k < j[i].size(); ++k) {
            if (!j[i][k].is_number_integer())
                throw Error(ErrorCode::ParseError,
                            field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]: expected an integer");
            row.push_back(j[i][k].get<int64_t>());
        }
        m.push_back(std::move(row));
    }
    return m;
}

Triangulation Triangulation::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "top level must be an object");
    if (!j.contains("arcs") || !j["arcs"].is_array())
        throw Error(ErrorCode::ParseError, "arcs: missing or not an array");
    if (!j.contains("triangles") || !j["triangles"].is_array())
        throw Error(ErrorCode::ParseError, "triangles: missing or not an array");
    std::vector<Arc> arcs;
    for (size_t i = 0; i < j["arcs"].size(); ++i) {
        const json& a = j["arcs"][i];
        std::string where = "arcs[" + std::to_string(i) + "]";
        if (!a.is_object() || !a.contains("id") || !a["id"].is_number_integer())
            throw Error(ErrorCode::ParseError, where + ".id: expected an integer");
        if (!a.contains("kind") || !a["kind"].is_string())
            throw Error(ErrorCode::ParseError, where + ".kind: expected a string");
        std::string kind = a["kind"].get<std::string>();
        if (kind != "internal" && kind != "boundary")
            throw Error(ErrorCode::ParseError, where + ".kind: expected 'internal' or 'boundary'");
        arcs.push_back(Arc{a["id"].get<int>(), kind == "internal" ? ArcKind::Internal : ArcKind::Boundary});
    }
    std::vector<Triangle> tris;
    for (size_t i = 0; i < j["triangles"].size(); ++i) {
        const json& t = j["triangles"][i];
        if (!t.is_array() || t.size() != 3)
            throw Error(ErrorCode::ParseError, "triangles[" + std::to_string(i) + "]: expected three arc ids");
        Triangle tri;
        for (size_t k = 0; k < 3; ++k) {
            if (!t[k].is_number_integer())
                throw Error(ErrorCode::ParseError,
                            "triangles[" + std::to_string(i) + "][" + std::to_string(k) + "]: expected an integer");
            tri.sides[k] = t[k].get<int>();
        }
        tris.push_back(tri);
    }
    std::optional<IntMatrix> lambda;
    if (j.contains("lambda"))
        lambda = parse_matrix(j["lambda"], "lambda");
    return Triangulation(std::move(arcs), std::move(tris), std::move(lambda));
}

Triangulation Triangulation::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

// ---- quiver

bool QuiverWithRelations::is_relation(int first, int second) const {
    for (const auto& r : relations)
        if (r.size() == 2 && r[0] == first && r[1] == second)
            return true;
    return false;
}

std::optional<int> QuiverWithRelations::arrow_by_name(const std::string& name) const {
    for (const Arrow& a : arrows)
        if (a.name == name)
            return a.id;
    return std::nullopt;
}

std::string arrow_name(int index) {
    std::string s(1, static_cast<char>('a' + index % 26));
    if (index >= 26)
        s += std::to_string(index / 26);
    return s;
}

QuiverWithRelations build_quiver(const Triangulation& t) {
    QuiverWithRelations q;
    for (size_t v = 1; v <= t.n(); ++v)
        q.vertices.push_back(static_cast<int>(v));
    for (size_t ti = 0; ti < t.triangles().size(); ++ti) {
        const auto& s = t.triangles()[ti].sides;
        // For a counterclockwise triangle (s1,s2,s3): s2->s1, s3->s2, s1->s3.
        for (size_t i = 0; i < 3; ++i) {
            int to = s[i], from = s[(i + 1) % 3];
            if (t.is_internal(from) && t.is_internal(to)) {
                int id = static_cast<int>(q.arrows.size());
                q.arrows.push_back(Arrow{id, from, to, static_cast<int>(ti), arrow_name(id)});
            }
        }
    }
    for (size_t ti = 0; ti < t.triangles().size(); ++ti) {
        if (!t.is_internal_triangle(static_cast<int>(ti)))
            continue;
        for (const Arrow& x : q.arrows)
            for (const Arrow& y : q.arrows)
                if (x.triangle == static_cast<int>(ti) && y.triangle == static_cast<int>(ti) && x.target == y.source)
                    q.relations.push_back({x.id, y.id});
    }
    return q;
}

GentleReport check_gentle(const QuiverWithRelations& q) {
    auto fail = [](std::string r) { return GentleReport{false, std::move(r)}; };
    for (const auto& r : q.relations) {
        if (r.size() != 2)
            return fail("relation of length " + std::to_string(r.size()) + " (relations must have length 2)");
        for (int a : r)
            if (a < 0 || static_cast<size_t>(a) >= q.arrows.size())
                return fail("relation references unknown arrow");
        if (q.arrow(r[0]).target != q.arrow(r[1]).source)
            return fail("relation " + q.arrow(r[0]).name + q.arrow(r[1]).name + " is not a path");
    }
    for (int v : q.vertices) {
        int in = 0, out = 0;
        for (const Arrow& a : q.arrows) {
            in += a.target == v;
            out += a.source == v;
        }
        if (in > 2 || out > 2)
            return fail("vertex " + std::to_string(v) + " has " + std::to_string(in) + " incoming and " +
                        std::to_string(out) + " outgoing arrows");
    }
    for (const Arrow& b : q.arrows) {
        int pre_free = 0, pre_rel = 0, post_free = 0, post_rel = 0;
        for (const Arrow& a : q.arrows) {
            if (a.target == b.source)
                (q.is_relation(a.id, b.id) ? pre_rel : pre_free)++;
            if (b.target == a.source)
                (q.is_relation(b.id, a.id) ? post_rel : post_free)++;
        }
        if (pre_free > 1 || post_free > 1)
            return fail("arrow " + b.name + " has more than one relation-free neighbour on one side");
        if (pre_rel > 1 || post_rel > 1)
            return fail("arrow " + b.name + " lies in more than one relation on one side");
    }
    return {};
}

IntMatrix b_matrix(const Triangulation& t, bool frozen_rows) {
    const size_t n = t.n();
    const size_t rows = frozen_rows ? t.m() : n;
    IntMatrix b(rows, IntVector(n, 0));
    auto row_ok = [&](int a) { return static_cast<size_t>(a) <= rows; };
    for (const Triangle& tri : t.triangles()) {
        for (size_t i = 0; i < 3; ++i) {
            int to = tri.sides[i], from = tri.sides[(i + 1) % 3];
            // arrow from -> to: b_{to,from} += 1, b_{from,to} -= 1
            if (t.is_internal(from) && row_ok(to))
                b[static_cast<size_t>(to - 1)][static_cast<size_t>(from - 1)] += 1;
            if (t.is_internal(to) && row_ok(from))
                b[static_cast<size_t>(from - 1)][static_cast<size_t>(to - 1)] -= 1;
        }
    }
    return b;
}

ArcNeighborhood neighborhood(const Triangulation& t, int k) {
    if (!t.is_internal(k))
        throw Error(ErrorCode::InvalidArgument, "arc " + std::to_string(k) + " is not internal");
    const auto& tris = t.triangles_of(k);
    ArcNeighborhood nb;
    nb.arc = k;
    nb.t1 = tris[0];
    nb.t2 = tris[1];
    nb.a1 = t.x_side(nb.t1, k);
    nb.a2 = t.y_side(nb.t1, k);
    nb.a3 = t.x_side(nb.t2, k);
    nb.a4 = t.y_side(nb.t2, k);
    return nb;
}

// ---- find_lambda

namespace {

struct Candidate {
    int64_t max_abs = 0;
    int64_t sum_abs = 0;
    IntVector values;
    bool operator<(const Candidate& o) const {
        return std::tie(max_abs, sum_abs, values) < std::tie(o.max_abs, o.sum_abs, o.values);
    }
};

} // namespace

LambdaSolution find_lambda(const IntMatrix& b_tilde, int64_t bound, int64_t max_d) {
    const size_t m = b_tilde.size();
    const size_t n = m == 0 ? 0 : b_tilde[0].size();
    if (m == 0 || n == 0)
        throw Error(ErrorCode::NoCompatibleLambda, "empty exchange matrix");
    // Unknowns: upper-triangular entries of lambda.
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            unknowns.emplace_back(i, j);
    const size_t u = unknowns.size();
    // Rows: (lambda * b)_{ij} = -delta_ij, solved for d = 1 then scaled.
    std::vector<std::vector<Rational>> a;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rational> row(u + 1, 0);
            for (size_t k = 0; k < u; ++k) {
                auto [r, c] = unknowns[k];
                // lambda_{rc} = x, lambda_{cr} = -x
                if (r == i)
                    row[k] += b_tilde[c][j];
                if (c == i)
                    row[k] -= b_tilde[r][j];
            }
            row[u] = i == j ? -1 : 0;
            a.push_back(std::move(row));
        }
    // Reduced row echelon form.
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < u && rank < a.size(); ++col) {
        size_t p = rank;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[rank]);
        Rational inv = 1 / a[rank][col];
        for (auto& x : a[rank])
            x *= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col] == 0)
                continue;
            Rational f = a[r][col];
            for (size_t c = 0; c <= u; ++c)
                a[r][c] -= f * a[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < a.size(); ++r)
        if (a[r][u] != 0)
            throw Error(ErrorCode::NoCompatibleLambda, "lambda * B = -D has no solution");
    std::vector<size_t> free_cols;
    for (size_t c = 0, p = 0; c < u; ++c) {
        if (p < pivots.size() && pivots[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    const size_t f = free_cols.size();
    for (int64_t d = 1; d <= max_d; ++d) {
        std::optional<Candidate> best;
        for (int64_t radius = 0; radius <= 2 && !best; ++radius) {
            double combos = std::pow(2.0 * static_cast<double>(radius) + 1.0, static_cast<double>(f));
            if (combos > 5e6)
                break;
            IntVector freev(f, -radius);
            while (true) {
                IntVector vals(u, 0);
                bool ok = true;
                for (size_t k = 0; k < f; ++k)
                    vals[free_cols[k]] = freev[k];
                for (size_t r = 0; r < rank && ok; ++r) {
                    Rational x = a[r][u] * d;
                    for (size_t k = 0; k < f; ++k)
                        x -= a[r][free_cols[k]] * freev[k];
                    if (denominator(x) != 1) {
                        ok = false;
                        break;
                    }
                    vals[pivots[r]] = static_cast<int64_t>(numerator(x));
                }
                if (ok) {
                    Candidate c;
                    for (int64_t v : vals) {
                        c.max_abs = std::max(c.max_abs, std::abs(v));
                        c.sum_abs += std::abs(v);
                    }
                    c.values = vals;
                    if (c.max_abs <= bound && (!best || c < *best))
                        best = c;
                }
                size_t k = 0;
                while (k < f && freev[k] == radius)
                    freev[k++] = -radius;
                if (k == f)
                    break;
                ++freev[k];
            }
        }
        if (best) {
            LambdaSolution s;
            s.lambda.assign(m, IntVector(m, 0));
            for (size_t k = 0; k < u; ++k) {
                auto [r, c] = unknowns[k];
                s.lambda[r][c] = best->values[k];
                s.lambda[c][r] = -best->values[k];
            }
            s.d = check_compatible(b_tilde, s.lambda);
            return s;
        }
    }
    throw Error(ErrorCode::NoCompatibleLambda, "no integer solution within the search bounds");
}

// ---- Surface

int Surface::lattice_index(int arc) const {
    if (triangulation.is_internal(arc))
        return arc - 1;
    return frozen ? arc - 1 : -1;
}

int64_t Surface::uniform_d() const {
    for (int64_t x : pair.d)
        if (x != pair.d[0])
            throw Error(ErrorCode::InvalidArgument, "D is not a multiple of the identity");
    return pair.d.at(0);
}

Surface Surface::build(const Triangulation& t, SeedMode mode, const std::string& name) {
    Surface s{name, t, build_quiver(t), false, {}};
    GentleReport g = check_gentle(s.quiver);
    if (!g.ok)
        throw Error(ErrorCode::InvalidTriangulation, "quiver is not gentle: " + g.reason);
    if (t.lambda()) {
        bool frozen = t.lambda()->size() == t.m() && t.m() != t.n();
        if ((mode == SeedMode::Frozen && !frozen) || (mode == SeedMode::Principal && frozen))
            throw Error(ErrorCode::InvalidArgument, "supplied lambda does not match the requested seed mode");
        s.frozen = frozen;
        s.pair.b_tilde = b_matrix(t, frozen);
        s.pair.lambda = *t.lambda();
        s.pair.d = check_compatible(s.pair.b_tilde, s.pair.lambda);
        return s;
    }
    auto solve = [&](bool frozen) {
        s.frozen = frozen;
        s.pair.b_tilde = b_matrix(t, frozen);
        LambdaSolution sol = find_lambda(s.pair.b_tilde);
        s.pair.lambda = sol.lambda;
        s.pair.d = sol.d;
    };
    if (mode == SeedMode::Frozen) {
        solve(true);
    } else if (mode == SeedMode::Principal) {
        solve(false);
    } else {
        try {
            solve(false);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoCompatibleLambda)
                throw;
            solve(true);
        }
    }
    return s;
}

Surface load_surface(const std::string& path, SeedMode mode) {
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos)
        name = name.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos)
        name = name.substr(0, dot);
    return Surface::build(Triangulation::from_file(path), mode, name);
}

} // namespace qsurf
