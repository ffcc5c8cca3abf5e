#include "qsurf/strings.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace qsurf {

StringWord trivial_string(int vertex) { return StringWord{{vertex}, {}}; }

StringWord inverse(const StringWord& w) {
    StringWord r;
    r.vertices.assign(w.vertices.rbegin(), w.vertices.rend());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(Letter{it->arrow, !it->direct});
    return r;
}

StringWord substring(const StringWord& w, size_t i, size_t j) {
    if (i > j || j >= w.length())
        throw Error(ErrorCode::IndexOutOfRange, "substring bounds");
    StringWord r;
    r.vertices.assign(w.vertices.begin() + static_cast<long>(i), w.vertices.begin() + static_cast<long>(j) + 1);
    r.letters.assign(w.letters.begin() + static_cast<long>(i), w.letters.begin() + static_cast<long>(j));
    return r;
}

StringWord concat(const StringWord& left, std::optional<Letter> letter, const StringWord& right) {
    if (left.vertices.empty())
        return right;
    if (right.vertices.empty())
        return left;
    if (!letter)
        throw Error(ErrorCode::InvalidArgument, "concatenating strings needs a letter");
    StringWord r = left;
    r.letters.push_back(*letter);
    r.vertices.insert(r.vertices.end(), right.vertices.begin(), right.vertices.end());
    r.letters.insert(r.letters.end(), right.letters.begin(), right.letters.end());
    return r;
}

StringWord canonical_orientation(const StringWord& w) {
    StringWord i = inverse(w);
    return i < w ? i : w;
}

static std::string position_text(size_t i) { return "letter " + std::to_string(i + 1); }

void validate_string(const QuiverWithRelations& q, const StringWord& w) {
    if (w.vertices.empty())
        throw Error(ErrorCode::NotComposable, "empty string");
    if (w.letters.size() + 1 != w.vertices.size())
        throw Error(ErrorCode::NotComposable, "letter count does not match vertex count");
    for (int v : w.vertices)
        if (std::find(q.vertices.begin(), q.vertices.end(), v) == q.vertices.end())
            throw Error(ErrorCode::NotComposable, "vertex " + std::to_string(v) + " is not in the quiver");
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const Letter& l = w.letters[i];
        if (l.arrow < 0 || static_cast<size_t>(l.arrow) >= q.arrows.size())
            throw Error(ErrorCode::NotComposable, position_text(i) + " uses an unknown arrow");
        const Arrow& a = q.arrow(l.arrow);
        int from = l.direct ? a.source : a.target;
        int to = l.direct ? a.target : a.source;
        if (from != w.vertices[i] || to != w.vertices[i + 1])
            throw Error(ErrorCode::NotComposable, position_text(i) + " (" + a.name + ") does not join vertices " +
                                                      std::to_string(w.vertices[i]) + " and " +
                                                      std::to_string(w.vertices[i + 1]));
        if (i == 0)
            continue;
        const Letter& p = w.letters[i - 1];
        if (p.arrow == l.arrow && p.direct != l.direct)
            throw Error(ErrorCode::NotReduced, position_text(i) + " cancels the previous letter");
        if (p.direct == l.direct) {
            bool rel = l.direct ? q.is_relation(p.arrow, l.arrow) : q.is_relation(l.arrow, p.arrow);
            if (rel)
                throw Error(ErrorCode::RelationViolated, "letters " + std::to_string(i) + " and " +
                                                             std::to_string(i + 1) + " form a relation");
        }
    }
}

bool is_valid_string(const QuiverWithRelations& q, const StringWord& w) {
    try {
        validate_string(q, w);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::string format_string(const QuiverWithRelations& q, const StringWord& w) {
    std::string s = std::to_string(w.vertices.at(0));
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const std::string& name = q.arrow(w.letters[i].arrow).name;
        s += w.letters[i].direct ? " >" + name + "> " : " <" + name + "< ";
        s += std::to_string(w.vertices[i + 1]);
    }
    return s;
}

StringWord parse_string(const QuiverWithRelations& q, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
    };
    auto read_int = [&]() {
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            ++pos;
        if (start == pos)
            fail("expected a vertex number");
        return std::stoi(t.substr(start, pos - start));
    };
    std::vector<int> verts{read_int()};
    std::vector<bool> dirs;
    std::vector<std::string> names;
    while (pos < t.size()) {
        char sym = t[pos];
        if (sym != '>' && sym != '<')
            fail("expected '>' or '<'");
        ++pos;
        // Arrow names start with a letter; "1 > 2" leaves the arrow unnamed.
        std::string name;
        if (pos < t.size() && std::isalpha(static_cast<unsigned char>(t[pos]))) {
            size_t start = pos;
            while (pos < t.size() && std::isalnum(static_cast<unsigned char>(t[pos])))
                ++pos;
            name = t.substr(start, pos - start);
            if (pos >= t.size() || t[pos] != sym)
                fail(std::string("expected closing '") + sym + "'");
            ++pos;
        }
        dirs.push_back(sym == '>');
        names.push_back(name);
        verts.push_back(read_int());
    }
    // Candidate arrows per letter.
    std::vector<std::vector<int>> cands(dirs.size());
    for (size_t i = 0; i < dirs.size(); ++i) {
        int from = dirs[i] ? verts[i] : verts[i + 1];
        int to = dirs[i] ? verts[i + 1] : verts[i];
        for (const Arrow& a : q.arrows) {
            if (!names[i].empty() && a.name != names[i])
                continue;
            if (a.source == from && a.target == to)
                cands[i].push_back(a.id);
        }
        if (cands[i].empty()) {
            if (!names[i].empty() && !q.arrow_by_name(names[i]))
                throw Error(ErrorCode::ParseError, "unknown arrow '" + names[i] + "'");
            throw Error(ErrorCode::NotComposable, "no arrow for " + position_text(i));
        }
    }
    std::vector<StringWord> valid;
    std::optional<Error> first_error;
    StringWord cur;
    cur.vertices = verts;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == dirs.size()) {
            try {
                validate_string(q, cur);
                valid.push_back(cur);
            } catch (const Error& e) {
                if (!first_error)
                    first_error = e;
            }
            return;
        }
        for (int a : cands[i]) {
            cur.letters.push_back(Letter{a, dirs[i]});
            rec(i + 1);
            cur.letters.pop_back();
        }
    };
    rec(0);
    if (valid.empty())
        throw *first_error;
    StringWord canon = canonical_orientation(valid.front());
    for (const StringWord& w : valid)
        if (canonical_orientation(w) != canon)
            throw Error(ErrorCode::ParseError, "ambiguous string \"" + text + "\"; name the arrows");
    return valid.front();
}

std::vector<StringWord> enumerate_strings(const QuiverWithRelations& q, size_t max_length) {
    std::set<StringWord> seen;
    std::function<void(StringWord&)> rec = [&](StringWord& w) {
        seen.insert(canonical_orientation(w));
        if (w.length() >= max_length)
            return;
        int cur = w.vertices.back();
        for (const Arrow& a : q.arrows)
            for (bool direct : {true, false}) {
                if ((direct ? a.source : a.target) != cur)
                    continue;
                w.letters.push_back(Letter{a.id, direct});
                w.vertices.push_back(direct ? a.target : a.source);
                if (is_valid_string(q, w))
                    rec(w);
                w.letters.pop_back();
                w.vertices.pop_back();
            }
    };
    for (int v : q.vertices) {
        StringWord w = trivial_string(v);
        rec(w);
    }
    std::vector<StringWord> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const StringWord& a, const StringWord& b) { return a.length() < b.length(); });
    return out;
}

std::vector<std::pair<int, int>> interval_decomposition(const IndexSet& iset) {
    std::vector<int> s = iset;
    std::sort(s.begin(), s.end());
    std::vector<std::pair<int, int>> out;
    for (int i : s) {
        if (!out.empty() && out.back().second + 1 == i)
            out.back().second = i;
        else
            out.emplace_back(i, i);
    }
    return out;
}

bool is_canonical_submodule(const StringWord& w, const IndexSet& iset) {
    const int d = static_cast<int>(w.length());
    for (int i : iset)
        if (i < 1 || i > d)
            return false;
    for (auto [i, j] : interval_decomposition(iset)) {
        if (i > 1 && !w.letters[static_cast<size_t>(i - 2)].direct)
            return false;
        if (j < d && w.letters[static_cast<size_t>(j - 1)].direct)
            return false;
    }
    return true;
}

bool is_canonical_submodule_bruteforce(const QuiverWithRelations& q, const StringWord& w, const IndexSet& iset) {
    const size_t d = w.length();
    std::vector<bool> in(d, false);
    for (int i : iset) {
        if (i < 1 || static_cast<size_t>(i) > d)
            return false;
        in[static_cast<size_t>(i - 1)] = true;
    }
    for (const Arrow& a : q.arrows) {
        // act[r][c] = 1 when the arrow sends basis vector c to basis vector r.
        std::vector<std::vector<int>> act(d, std::vector<int>(d, 0));
        for (size_t i = 0; i + 1 < d; ++i) {
            if (w.letters[i].arrow != a.id)
                continue;
            if (w.letters[i].direct)
                act[i + 1][i] = 1;
            else
                act[i][i + 1] = 1;
        }
        for (size_t c = 0; c < d; ++c) {
            if (!in[c])
                continue;
            for (size_t r = 0; r < d; ++r)
                if (act[r][c] != 0 && !in[r])
                    return false;
        }
    }
    return true;
}

std::vector<CanonicalSubmodule> enumerate_canonical_submodules(const StringWord& w) {
    const size_t d = w.length();
    // Grow index sets left to right; the closure condition only links
    // neighbouring positions, so prefixes can be pruned letter by letter.
    std::vector<std::pair<IndexSet, bool>> cur{{{}, false}, {{1}, true}};
    for (size_t i = 1; i < d; ++i) {
        std::vector<std::pair<IndexSet, bool>> next;
        const Letter& l = w.letters[i - 1];
        for (const auto& [set, has_prev] : cur)
            for (bool take : {false, true}) {
                // direct: prev in => next in; inverse: next in => prev in
                if (l.direct && has_prev && !take)
                    continue;
                if (!l.direct && take && !has_prev)
                    continue;
                IndexSet s = set;
                if (take)
                    s.push_back(static_cast<int>(i + 1));
                next.emplace_back(std::move(s), take);
            }
        cur = std::move(next);
    }
    std::vector<IndexSet> all;
    for (auto& [s, last] : cur)
        all.push_back(s);
    std::sort(all.begin(), all.end(), [](const IndexSet& a, const IndexSet& b) {
        return std::make_tuple(a.size(), a) < std::make_tuple(b.size(), b);
    });
    std::vector<CanonicalSubmodule> out;
    for (auto& s : all)
        out.push_back(CanonicalSubmodule{s, interval_decomposition(s)});
    return out;
}

IntVector dimension_vector(const StringWord& w, const IndexSet& iset, size_t n) {
    IntVector dim(n, 0);
    for (int i : iset) {
        int v = w.vertices.at(static_cast<size_t>(i - 1));
        dim.at(static_cast<size_t>(v - 1)) += 1;
    }
    return dim;
}

IntVector full_dimension_vector(const StringWord& w, size_t n) {
    IntVector dim(n, 0);
    for (int v : w.vertices)
        dim.at(static_cast<size_t>(v - 1)) += 1;
    return dim;
}

namespace {

std::vector<size_t> letter_positions(const StringWord& v, bool direct) {
    std::vector<size_t> out;
    for (size_t i = 0; i < v.letters.size(); ++i)
        if (v.letters[i].direct == direct)
            out.push_back(i);
    return out;
}

} // namespace

Truncations truncations(const StringWord& v) {
    const size_t last = v.length() - 1;
    auto dirs = letter_positions(v, true);
    auto invs = letter_positions(v, false);
    Truncations t;
    t.head_h = dirs.empty() ? trivial_string(v.vertices.back()) : substring(v, dirs.front() + 1, last);
    t.head_c = invs.empty() ? trivial_string(v.vertices.back()) : substring(v, invs.front() + 1, last);
    t.tail_h = invs.empty() ? trivial_string(v.vertices.front()) : substring(v, 0, invs.back());
    t.tail_c = dirs.empty() ? trivial_string(v.vertices.front()) : substring(v, 0, dirs.back());
    return t;
}

bool ArcRef::operator==(const ArcRef& o) const {
    if (kind != o.kind)
        return false;
    return kind == Kind::Arc ? arc == o.arc : canonical_orientation(word) == canonical_orientation(o.word);
}

std::string format_arc_ref(const Surface& s, const ArcRef& r) {
    if (r.kind == ArcRef::Kind::String)
        return format_string(s.quiver, r.word);
    return (s.triangulation.is_internal(r.arc) ? "arc " : "boundary arc ") + std::to_string(r.arc);
}

Segment make_segment(const Surface& s, const StringWord& w, int t_start, int t_end) {
    const Triangulation& t = s.triangulation;
    Segment g{w, t_start, t_end};
    if (w.length() > 1) {
        if (g.t_start < 0)
            g.t_start = t.other_triangle(w.vertices.front(), s.quiver.arrow(w.letters.front().arrow).triangle);
        if (g.t_end < 0)
            g.t_end = t.other_triangle(w.vertices.back(), s.quiver.arrow(w.letters.back().arrow).triangle);
    } else {
        if (g.t_start < 0 && g.t_end >= 0)
            g.t_start = t.other_triangle(w.vertices.front(), g.t_end);
        if (g.t_end < 0 && g.t_start >= 0)
            g.t_end = t.other_triangle(w.vertices.front(), g.t_start);
    }
    return g;
}

Segment segment_inverse(const Segment& g) { return Segment{inverse(g.word), g.t_end, g.t_start}; }

Segment segment_sub(const Surface& s, const Segment& g, size_t i, size_t j) {
    int a = i == 0 ? g.t_start : s.quiver.arrow(g.word.letters[i - 1].arrow).triangle;
    int b = j + 1 == g.word.length() ? g.t_end : s.quiver.arrow(g.word.letters[j].arrow).triangle;
    return Segment{substring(g.word, i, j), a, b};
}

ArcRef arc_truncation(const Surface& s, const Segment& g, TruncKind kind) {
    const StringWord& v = g.word;
    const size_t last = v.length() - 1;
    auto dirs = letter_positions(v, true);
    auto invs = letter_positions(v, false);
    auto side = [&](int tri, int arc, bool x) {
        if (tri < 0)
            throw Error(ErrorCode::InvalidArgument, "segment end triangle unknown");
        return ArcRef::of_arc(x ? s.triangulation.x_side(tri, arc) : s.triangulation.y_side(tri, arc));
    };
    switch (kind) {
    case TruncKind::HeadH:
        if (dirs.empty())
            return side(g.t_end, v.vertices.back(), true);
        return ArcRef::of_string(segment_sub(s, g, dirs.front() + 1, last).word);
    case TruncKind::HeadC:
        if (invs.empty())
            return side(g.t_end, v.vertices.back(), false);
        return ArcRef::of_string(segment_sub(s, g, invs.front() + 1, last).word);
    case TruncKind::TailH:
        if (invs.empty())
            return side(g.t_start, v.vertices.front(), true);
        return ArcRef::of_string(segment_sub(s, g, 0, invs.back()).word);
    case TruncKind::TailC:
        if (dirs.empty())
            return side(g.t_start, v.vertices.front(), false);
        return ArcRef::of_string(segment_sub(s, g, 0, dirs.back()).word);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown truncation");
}

std::vector<ArrowExtension> arrow_extensions(const Surface& s, const StringWord& v, const StringWord& w) {
    const QuiverWithRelations& q = s.quiver;
    std::map<std::tuple<StringWord, int, StringWord>, ArrowExtension> out;
    for (const StringWord& vv : {v, inverse(v)})
        for (const StringWord& ww : {w, inverse(w)})
            for (const Arrow& a : q.arrows) {
                if (a.source != vv.vertices.front() || a.target != ww.vertices.back())
                    continue;
                StringWord u = concat(ww, Letter{a.id, false}, vv);
                if (!is_valid_string(q, u))
                    continue;
                auto key = std::make_tuple(ww, a.id, vv);
                if (out.count(key))
                    continue;
                ArrowExtension e;
                e.arrow = a.id;
                e.v = vv;
                e.w = ww;
                e.u1 = u;
                e.u2_candidates = {trivial_string(a.source), trivial_string(a.target)};
                Truncations tv = truncations(vv);
                e.u3 = tv.head_c;
                e.u4 = tv.tail_h;
                e.u2_arc = ArcRef::of_arc(s.triangulation.third_side(a.triangle, a.source, a.target));
                Segment sv = make_segment(s, vv, a.triangle, -1);
                Segment sw = make_segment(s, ww, -1, a.triangle);
                e.u3_arc = arc_truncation(s, sv, TruncKind::HeadC);
                e.u4_arc = arc_truncation(s, segment_inverse(sw), TruncKind::HeadH);
                out.emplace(key, std::move(e));
            }
    std::vector<ArrowExtension> r;
    for (auto& [k, e] : out)
        r.push_back(std::move(e));
    return r;
}

namespace {

// The unique valid string x f^{+-1} y^{-1}.
StringWord join_through_arrow(const Surface& s, const StringWord& x, const StringWord& y, const char* which) {
    const QuiverWithRelations& q = s.quiver;
    StringWord yi = inverse(y);
    std::vector<StringWord> found;
    for (const Arrow& a : q.arrows)
        for (bool direct : {true, false}) {
            int from = direct ? a.source : a.target;
            int to = direct ? a.target : a.source;
            if (from != x.vertices.back() || to != yi.vertices.front())
                continue;
            StringWord u = concat(x, Letter{a.id, direct}, yi);
            if (is_valid_string(q, u))
                found.push_back(u);
        }
    if (found.size() != 1)
        throw Error(ErrorCode::AmbiguousConnector, std::string("connector ") + which + " has " +
                                                       std::to_string(found.size()) + " candidates between " +
                                                       format_string(q, x) + " and " + format_string(q, y));
    return found.front();
}

using OverlapKey = std::tuple<StringWord, size_t, size_t, StringWord, size_t, size_t>;

} // namespace

std::vector<OverlapExtension> overlap_extensions(const Surface& s, const StringWord& v, const StringWord& w) {
    const QuiverWithRelations& q = s.quiver;
    std::map<OverlapKey, OverlapExtension> out;
    auto tri = [&](int arrow) { return q.arrow(arrow).triangle; };
    for (const StringWord& vv : {v, inverse(v)})
        for (const StringWord& ww : {w, inverse(w)}) {
            const size_t nv = vv.length(), nw = ww.length();
            for (size_t i = 0; i < nv; ++i)
                for (size_t j = i; j < nv; ++j) {
                    // v = v_L b m a^{-1} v_R
                    if (i > 0 && !vv.letters[i - 1].direct)
                        continue;
                    if (j + 1 < nv && vv.letters[j].direct)
                        continue;
                    StringWord m = substring(vv, i, j);
                    const size_t len = j - i;
                    for (size_t k = 0; k + len < nw; ++k) {
                        const size_t l = k + len;
                        // w = w_L d^{-1} m c w_R
                        if (substring(ww, k, l) != m)
                            continue;
                        if (k > 0 && ww.letters[k - 1].direct)
                            continue;
                        if (l + 1 < nw && !ww.letters[l].direct)
                            continue;
                        std::optional<int> b, a, d, c;
                        if (i > 0)
                            b = vv.letters[i - 1].arrow;
                        if (j + 1 < nv)
                            a = vv.letters[j].arrow;
                        if (k > 0)
                            d = ww.letters[k - 1].arrow;
                        if (l + 1 < nw)
                            c = ww.letters[l].arrow;
                        if (!a && !c)
                            continue;
                        if (!b && !d)
                            continue;
                        if (i == j) {
                            if (a && c && !q.is_relation(*a, *c))
                                continue;
                            if (b && d && !q.is_relation(*b, *d))
                                continue;
                        }
                        StringWord vl = i > 0 ? substring(vv, 0, i - 1) : StringWord{};
                        StringWord vr = j + 1 < nv ? substring(vv, j + 1, nv - 1) : StringWord{};
                        StringWord wl = k > 0 ? substring(ww, 0, k - 1) : StringWord{};
                        StringWord wr = l + 1 < nw ? substring(ww, l + 1, nw - 1) : StringWord{};
                        StringWord u1 = b ? concat(vl, Letter{*b, true}, m) : m;
                        u1 = c ? concat(u1, Letter{*c, true}, wr) : u1;
                        StringWord u2 = d ? concat(wl, Letter{*d, false}, m) : m;
                        u2 = a ? concat(u2, Letter{*a, false}, vr) : u2;
                        // A missing letter can leave a relation across the join.
                        if (!is_valid_string(q, u1) || !is_valid_string(q, u2))
                            continue;
                        OverlapKey k1{vv, i, j, ww, k, l};
                        OverlapKey k2{inverse(vv), nv - 1 - j, nv - 1 - i, inverse(ww), nw - 1 - l, nw - 1 - k};
                        OverlapKey key = std::min(k1, k2);
                        if (out.count(key))
                            continue;

                        Segment sv = nv == 1 ? make_segment(s, vv, b ? tri(*b) : -1, a ? tri(*a) : -1)
                                             : make_segment(s, vv);
                        Segment sw = nw == 1 ? make_segment(s, ww, d ? tri(*d) : -1, c ? tri(*c) : -1)
                                             : make_segment(s, ww);
                        OverlapExtension e;
                        e.v = vv;
                        e.w = ww;
                        e.m = m;
                        e.a = a;
                        e.b = b;
                        e.c = c;
                        e.d = d;
                        e.v_begin = i;
                        e.v_end = j;
                        e.w_begin = k;
                        e.w_end = l;
                        e.u1 = u1;
                        e.u2 = u2;
                        if (b && d)
                            e.u3 = ArcRef::of_string(join_through_arrow(s, vl, wl, "f"));
                        else if (!b)
                            e.u3 = arc_truncation(s, segment_sub(s, sw, 0, k - 1), TruncKind::TailH);
                        else
                            e.u3 = arc_truncation(s, segment_sub(s, sv, 0, i - 1), TruncKind::TailC);
                        if (a && c)
                            e.u4 = ArcRef::of_string(join_through_arrow(s, inverse(vr), inverse(wr), "e"));
                        else if (!a)
                            e.u4 = arc_truncation(s, segment_sub(s, sw, l + 1, nw - 1), TruncKind::HeadH);
                        else
                            e.u4 = arc_truncation(s, segment_sub(s, sv, j + 1, nv - 1), TruncKind::HeadC);
                        out.emplace(key, std::move(e));
                    }
                }
        }
    std::vector<OverlapExtension> r;
    for (auto& [k, e] : out)
        r.push_back(std::move(e));
    return r;
}

} // namespace qsurf
