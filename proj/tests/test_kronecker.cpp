#include <doctest.h>

#include "common.hpp"

using namespace qsurf;
using qtest::mono;

TEST_CASE("weighted snakes") {
    Surface a = kronecker_surface();
    CHECK(build_weighted(a, Family::G, 1).weights == std::vector<int>{1, 2, 1});
    CHECK(build_weighted(a, Family::H, 1).weights == std::vector<int>{1, 2});
    CHECK(build_weighted(a, Family::G, 0).weights == std::vector<int>{1});
    CHECK(build_weighted(a, Family::G, 3).size() == 7);
    CHECK_THROWS_AS(build_weighted(a, Family::H, 0), Error);
    WeightedSnake g1 = build_weighted(a, Family::G, 1);
    CHECK(g1.index_of(1) == -1);
    CHECK(g1.index_of(3) == 1);
}

TEST_CASE("alpha on G_1") {
    Surface a = kronecker_surface();
    WeightedSnake ws = build_weighted(a, Family::G, 1);
    SnakeGraph g = label_snake(ws.word, a);
    CHECK(alpha_of_matching(ws, g, minimal_matching(g)) == 0);
    CHECK(alpha_of_matching(ws, g, maximal_matching(g)) == 0);
    for (const auto& p : enumerate_matchings(g))
        if (enclosed_tiles(g, p) == IndexSet{1, 2})
            CHECK(alpha_of_matching(ws, g, p) == -1);
}

TEST_CASE("r_s") {
    Surface a = kronecker_surface();
    CHECK(r_s(a, Family::G, 0, 1).term_count() == 2);
    TorusElement r1 = r_s(a, Family::G, 1, 1);
    CHECK(r1 == mono({-2, -1}) + mono({-2, 1}, -1) + mono({-2, 1}, 1) + mono({-2, 3}) + mono({0, -1}));
    for (int s = 0; s <= 4; ++s) {
        std::vector<size_t> seq;
        for (int i = 0; i <= s; ++i)
            seq.push_back(i % 2 == 0 ? 1 : 2);
        QuantumSeed m = mutation_sequence(QuantumSeed::initial(a.pair), seq);
        CHECK(r_s(a, Family::G, s) == m.cluster[seq.back() - 1]);
    }
}

TEST_CASE("equality of alpha and v sums") {
    Surface a = kronecker_surface();
    CHECK(equality_check(a, Family::G, 0).equal);
    bool differs = false;
    for (int s = 1; s <= 6; ++s)
        for (Family f : {Family::G, Family::H}) {
            EqualityReport r = equality_check(a, f, s);
            CHECK(r.equal);
            CHECK(r.mismatches.empty());
            differs = differs || r.alpha_differs_from_v;
        }
    CHECK(differs);
}

TEST_CASE("recursions") {
    Surface a = kronecker_surface();
    for (int s = 1; s <= 5; ++s) {
        LemmaReport r = recursion_lemma_checks(a, s);
        CHECK_MESSAGE(r.ok, r.first_failure);
        for (const auto& [name, tally] : r.tallies) {
            CHECK_MESSAGE(tally.second == 0, name);
            CHECK(tally.first > 0);
        }
    }
    CHECK_THROWS_AS(recursion_lemma_checks(a, 0), Error);
}

TEST_CASE("bundled annulus is the Kronecker surface") {
    Surface a = kronecker_surface();
    Surface b = qtest::corpus("annulus");
    CHECK(a.pair.b_tilde == b.pair.b_tilde);
    CHECK(a.pair.lambda == b.pair.lambda);
}
