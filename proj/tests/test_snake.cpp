#include <doctest.h>

#include <algorithm>
#include <set>

#include "common.hpp"

using namespace qsurf;
using qtest::str;

TEST_CASE("snake shapes") {
    Surface a = qtest::corpus("annulus");
    CHECK(snake_from_string(str(a, "1 >a> 2 <b< 1")) == std::vector<Step>{Step::Right, Step::Right});
    Surface f = qtest::corpus("hexagon_fan");
    CHECK(snake_from_string(str(f, "1 >a> 2 >b> 3")) == std::vector<Step>{Step::Right, Step::Up});
    CHECK(snake_from_string(trivial_string(1)).empty());
}

TEST_CASE("labeled snake graphs") {
    Surface a = qtest::corpus("annulus");
    SnakeGraph g = label_snake(str(a, "1 >a> 2 <b< 1"), a);
    REQUIRE(g.d() == 3);
    CHECK(g.tile(1).diagonal == 1);
    CHECK(g.tile(2).diagonal == 2);
    CHECK(g.tile(3).diagonal == 1);
    CHECK(g.deltas.size() == 4);

    Surface sq = qtest::corpus("square");
    SnakeGraph one = label_snake(trivial_string(1), sq);
    REQUIRE(one.d() == 1);
    ArcNeighborhood n = neighborhood(sq.triangulation, 1);
    std::multiset<int> labels, expected{n.a1, n.a2, n.a3, n.a4};
    for (const TileSide& ts : one.tile(1).sides)
        labels.insert(ts.label);
    CHECK(labels == expected);
    CHECK(label_snake(qtest::str(qtest::corpus("pentagon"), "1 >a> 2"), qtest::corpus("pentagon")).d() == 2);
}

TEST_CASE("matching counts") {
    Surface a = qtest::corpus("annulus");
    Surface sq = qtest::corpus("square");
    Surface p = qtest::corpus("pentagon");
    CHECK(enumerate_matchings(label_snake(trivial_string(1), sq)).size() == 2);
    CHECK(enumerate_matchings(label_snake(str(a, "1 >a> 2 <b< 1"), a)).size() == 5);
    CHECK(enumerate_matchings(label_snake(str(p, "1 >a> 2"), p)).size() == 3);
}

TEST_CASE("transfer enumeration agrees with brute force on the corpus") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 5)) {
            SnakeGraph g = label_snake(w, s);
            auto fast = enumerate_matchings(g);
            CHECK(fast == enumerate_matchings_bruteforce(g));
            for (const auto& m : fast)
                CHECK(is_perfect_matching(g, m));
            CHECK(fast.size() == enumerate_canonical_submodules(w).size());
        }
    }
}

TEST_CASE("single tile twists") {
    Surface sq = qtest::corpus("square");
    SnakeGraph g = label_snake(trivial_string(1), sq);
    PerfectMatching sn{g.edge_of(1, Side::S), g.edge_of(1, Side::N)};
    PerfectMatching we{g.edge_of(1, Side::W), g.edge_of(1, Side::E)};
    std::sort(sn.begin(), sn.end());
    std::sort(we.begin(), we.end());
    std::set<PerfectMatching> ends{minimal_matching(g), maximal_matching(g)};
    CHECK(ends == std::set<PerfectMatching>{sn, we});
    CHECK(twist(g, sn, 1) == we);
    CHECK(twist(g, we, 1) == sn);
    CHECK(twist_connectivity(g));
    PerfectMatching lo = minimal_matching(g);
    // P_- avoids the counterclockwise sides of the first tile.
    for (int e : lo)
        for (int side = 0; side < 4; ++side)
            if (g.edge_of(1, static_cast<Side>(side)) == e)
                CHECK_FALSE(g.tile(1).sides[static_cast<size_t>(side)].ccw);
}

TEST_CASE("twist connectivity and enclosed tiles") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 5)) {
            SnakeGraph g = label_snake(w, s);
            CHECK(twist_connectivity(g));
            PerfectMatching lo = minimal_matching(g);
            CHECK(enclosed_tiles(g, lo).empty());
            IndexSet all;
            for (int j = 1; j <= static_cast<int>(g.d()); ++j) {
                all.push_back(j);
                if (can_twist(g, lo, j))
                    CHECK(enclosed_tiles(g, twist(g, lo, j)) == IndexSet{j});
                else
                    CHECK_THROWS_AS(twist(g, lo, j), Error);
            }
            CHECK(enclosed_tiles(g, maximal_matching(g)) == all);
        }
    }
}

TEST_CASE("matchings biject onto canonical submodules") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 5)) {
            SnakeGraph g = label_snake(w, s);
            std::set<IndexSet> image;
            for (const auto& m : enumerate_matchings(g))
                image.insert(matching_to_submodule(g, m).index_set);
            std::set<IndexSet> subs;
            for (const auto& c : enumerate_canonical_submodules(w))
                subs.insert(c.index_set);
            CHECK(image == subs);
        }
    }
}
