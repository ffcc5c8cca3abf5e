#include <doctest.h>

#include <algorithm>

#include "common.hpp"

using namespace qsurf;
using qtest::str;

TEST_CASE("diagonal counts") {
    Surface a = qtest::corpus("annulus");
    SnakeGraph g = label_snake(str(a, "1 >a> 2 <b< 1"), a);
    CHECK(m_pm(g, 2, 1) == PairCounts{1, 1});
    CHECK(m_pm(g, 1, 1).minus == 0);
    CHECK(m_pm(g, 2, 7) == PairCounts{0, 0});
    Surface sq = qtest::corpus("square");
    SnakeGraph one = label_snake(trivial_string(1), sq);
    for (const auto& p : enumerate_matchings(one)) {
        CHECK(n_pm(one, 1, p, 1) == PairCounts{0, 0});
        CHECK(omega(one, 1, p) == 0);
    }
}

TEST_CASE("omega flips under twist") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 5)) {
            SnakeGraph g = label_snake(w, s);
            for (const auto& p : enumerate_matchings(g))
                for (int j = 1; j <= static_cast<int>(g.d()); ++j)
                    if (can_twist(g, p, j))
                        CHECK(omega(g, j, twist(g, p, j)) == -omega(g, j, p));
                    else
                        CHECK_THROWS_AS(omega(g, j, p), Error);
        }
    }
}

TEST_CASE("valuation on the Kronecker string") {
    Surface a = qtest::corpus("annulus");
    StringWord w = str(a, "1 >a> 2 <b< 1");
    SnakeGraph g = label_snake(w, a);
    MatchingValuation v = valuation_v(g);
    CHECK(v.size() == 5);
    CHECK(v.at(minimal_matching(g)) == 0);
    CHECK(v.at(maximal_matching(g)) == 0);
    std::vector<int64_t> mid;
    for (const auto& [p, val] : v)
        if (dimension_vector(w, matching_to_submodule(g, p).index_set, 2) == IntVector{1, 1})
            mid.push_back(val);
    std::sort(mid.begin(), mid.end());
    CHECK(mid == std::vector<int64_t>{-1, 1});

    SubmoduleValuation vg = valuation_v_gamma(a, w);
    CHECK(vg.at({}) == 0);
    for (const auto& [p, val] : v)
        CHECK(vg.at(matching_to_submodule(g, p).index_set) == val);
}

TEST_CASE("big counts") {
    Surface a = qtest::corpus("annulus");
    StringWord w = str(a, "1 >a> 2 <b< 1");
    BigCounts c = big_counts(a, w, 2, 2, {1, 2, 3});
    CHECK(c.m_minus == 0);
    CHECK(c.m_plus == 0);
    CHECK(big_counts(a, w, 1, 1, {1, 2, 3}).m_plus == 1);
    CHECK(omega_prime(a, trivial_string(1), 1, {1}) == 0);
    CHECK(omega_prime(a, w, 2, {2}) == -omega_prime(a, w, 2, {}));
}

TEST_CASE("trivial strings") {
    Surface sq = qtest::corpus("square");
    SubmoduleValuation vg = valuation_v_gamma(sq, trivial_string(1));
    CHECK(vg == SubmoduleValuation{{{}, 0}, {{1}, 0}});
    MatchingValuation v = valuation_v(label_snake(trivial_string(1), sq));
    for (const auto& [p, val] : v)
        CHECK(val == 0);
}

TEST_CASE("module-side counts equal the snake graph counts on the corpus") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 6)) {
            SnakeGraph g = label_snake(w, s);
            MatchingValuation v = valuation_v(g);
            SubmoduleValuation vg = valuation_v_gamma(s, w);
            REQUIRE(v.size() == vg.size());
            for (const auto& [p, val] : v) {
                IndexSet iset = matching_to_submodule(g, p).index_set;
                CHECK(vg.at(iset) == val);
                for (int k = 1; k <= static_cast<int>(s.n()); ++k)
                    CHECK(normalized(n_module(s, w, k, iset)) == normalized(n_snake_scan(g, p, k)));
                for (int j = 1; j <= static_cast<int>(g.d()); ++j) {
                    if (!can_twist(g, p, j))
                        continue;
                    const int tau = g.tile(j).diagonal;
                    BigCounts b = big_counts(s, w, tau, j, iset);
                    PairCounts m = m_pm(g, j, tau);
                    PairCounts n = n_pm(g, j, p, tau);
                    CHECK(b == BigCounts{m.minus, m.plus, n.minus, n.plus});
                    CHECK(omega_prime(s, w, j, iset) == omega(g, j, p));
                }
            }
        }
    }
}
