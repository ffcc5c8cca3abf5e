#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsurf/surface.hpp"

namespace qsurf {

struct Letter {
    int arrow = 0;
    bool direct = true;
    auto operator<=>(const Letter&) const = default;
};

// A direct letter at position i is an arrow v_i -> v_{i+1}, an inverse one
// an arrow v_{i+1} -> v_i.
struct StringWord {
    std::vector<int> vertices;
    std::vector<Letter> letters;

    size_t length() const { return vertices.size(); }
    bool is_trivial() const { return vertices.size() == 1; }
    auto operator<=>(const StringWord&) const = default;
};

// 1-based positions into a string.
using IndexSet = std::vector<int>;

StringWord trivial_string(int vertex);
StringWord inverse(const StringWord& w);
// Vertices i..j, 0-based inclusive.
StringWord substring(const StringWord& w, size_t i, size_t j);
StringWord concat(const StringWord& left, std::optional<Letter> letter, const StringWord& right);
// The lexicographically smaller of w and its inverse.
StringWord canonical_orientation(const StringWord& w);

void validate_string(const QuiverWithRelations& q, const StringWord& w);
bool is_valid_string(const QuiverWithRelations& q, const StringWord& w);

std::string format_string(const QuiverWithRelations& q, const StringWord& w);
StringWord parse_string(const QuiverWithRelations& q, const std::string& text);

// All strings with at most max_length vertices, one per inverse pair,
// ordered by length then lexicographically.
std::vector<StringWord> enumerate_strings(const QuiverWithRelations& q, size_t max_length);

std::vector<std::pair<int, int>> interval_decomposition(const IndexSet& iset);
bool is_canonical_submodule(const StringWord& w, const IndexSet& iset);
// Closure of the span under the explicit arrow action matrices.
bool is_canonical_submodule_bruteforce(const QuiverWithRelations& q, const StringWord& w, const IndexSet& iset);

struct CanonicalSubmodule {
    IndexSet index_set;
    std::vector<std::pair<int, int>> intervals;
};
std::vector<CanonicalSubmodule> enumerate_canonical_submodules(const StringWord& w);

IntVector dimension_vector(const StringWord& w, const IndexSet& iset, size_t n);
IntVector full_dimension_vector(const StringWord& w, size_t n);

struct Truncations {
    StringWord head_h; // _h v
    StringWord head_c; // _c v
    StringWord tail_h; // v_h
    StringWord tail_c; // v_c
};
// Degenerate branches return the trivial string at the end vertex.
Truncations truncations(const StringWord& v);

// A smoothing arc: either the arc of a string, or an arc of the
// triangulation itself (an initial or boundary arc).
struct ArcRef {
    enum class Kind { String, Arc };
    Kind kind = Kind::String;
    StringWord word;
    int arc = 0;

    static ArcRef of_string(StringWord w) { return ArcRef{Kind::String, std::move(w), 0}; }
    static ArcRef of_arc(int a) { return ArcRef{Kind::Arc, {}, a}; }
    bool operator==(const ArcRef& o) const;
};
std::string format_arc_ref(const Surface& s, const ArcRef& r);

// A string with the triangles just before its first and after its last
// vertex. These fix which side of the end arcs a degenerate truncation uses.
struct Segment {
    StringWord word;
    int t_start = -1;
    int t_end = -1;
};
Segment make_segment(const Surface& s, const StringWord& w, int t_start = -1, int t_end = -1);
Segment segment_inverse(const Segment& g);
Segment segment_sub(const Surface& s, const Segment& g, size_t i, size_t j);

enum class TruncKind { HeadH, HeadC, TailH, TailC };
// Degenerate branches return a side of the end triangle.
ArcRef arc_truncation(const Surface& s, const Segment& g, TruncKind kind);

struct ArrowExtension {
    int arrow = 0;
    StringWord v, w;
    StringWord u1; // w a^{-1} v
    std::array<StringWord, 2> u2_candidates; // trivial strings at s(a), e(a)
    StringWord u3, u4;                       // _c v and v_h
    ArcRef u2_arc, u3_arc, u4_arc;           // geometric smoothings
};

struct OverlapExtension {
    StringWord v, w, m;
    std::optional<int> a, b, c, d;
    size_t v_begin = 0, v_end = 0, w_begin = 0, w_end = 0; // position of m, 0-based inclusive
    StringWord u1, u2;
    ArcRef u3, u4;
};

std::vector<ArrowExtension> arrow_extensions(const Surface& s, const StringWord& v, const StringWord& w);
std::vector<OverlapExtension> overlap_extensions(const Surface& s, const StringWord& v, const StringWord& w);

} // namespace qsurf
