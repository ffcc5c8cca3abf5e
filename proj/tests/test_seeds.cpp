#include <doctest.h>

#include "common.hpp"

using namespace qsurf;
using qtest::mono;

namespace {
CompatiblePair kronecker_pair() { return make_compatible_pair({{0, 2}, {-2, 0}}, {{0, 1}, {-1, 0}}); }

bool same_seed(const QuantumSeed& a, const QuantumSeed& b) {
    return a.pair.b_tilde == b.pair.b_tilde && a.pair.lambda == b.pair.lambda && a.cluster == b.cluster;
}

IntVector denominator(const TorusElement& x) {
    LaurentPoly c = specialize_q1(x);
    IntVector d(x.rank(), 0);
    for (const auto& [g, coef] : c.terms())
        for (size_t i = 0; i < g.size(); ++i)
            d[i] = std::max(d[i], -g[i]);
    return d;
}
} // namespace

TEST_CASE("matrix and form mutation") {
    CHECK(mutate_matrix({{0, 2}, {-2, 0}}, 1) == IntMatrix{{0, -2}, {2, 0}});
    // Column 2 vanishes except at row 1; only row and column 1 flip.
    CHECK(mutate_matrix({{0, 0}, {0, 0}, {1, 0}}, 1) == IntMatrix{{0, 0}, {0, 0}, {-1, 0}});
    // A3 path 1 -> 2 -> 3 mutated at 2 gains the composite 1 -> 3 ... reversed.
    IntMatrix a3{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    CHECK(mutate_matrix(a3, 2) == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    CHECK(mutate_lambda({{0, 1}, {-1, 0}}, {{0, 2}, {-2, 0}}, 1) == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("seed mutation") {
    QuantumSeed s0 = QuantumSeed::initial(kronecker_pair());
    QuantumSeed s1 = mutate_seed(s0, 1);
    CHECK(s1.cluster[0] == mono({-1, 0}) + mono({-1, 2}));
    CHECK(s1.cluster[1] == s0.cluster[1]);
    CHECK(same_seed(mutate_seed(s1, 1), s0));

    QuantumSeed a1 = QuantumSeed::initial(make_compatible_pair({{0}, {1}}, {{0, -1}, {1, 0}}));
    CHECK(mutate_seed(a1, 1).cluster[0] == mono({-1, 0}) + mono({-1, 1}));
}

TEST_CASE("mutation sequences") {
    QuantumSeed s0 = QuantumSeed::initial(kronecker_pair());
    CHECK(same_seed(mutation_sequence(s0, {}), s0));
    CHECK(same_seed(mutation_sequence(s0, {2, 2}), s0));
    CHECK(denominator(mutation_sequence(s0, {1}).cluster[0]) == IntVector{1, 0});
    CHECK(denominator(mutation_sequence(s0, {1, 2}).cluster[1]) == IntVector{2, 1});
    CHECK(denominator(mutation_sequence(s0, {1, 2, 1}).cluster[0]) == IntVector{3, 2});
    CHECK_THROWS_AS(mutation_sequence(s0, std::vector<size_t>(13, 1)), Error);
    CHECK_THROWS_AS(mutation_sequence(s0, {3}), Error);
}

TEST_CASE("mutated variables stay Laurent, bar-invariant and positive") {
    std::vector<CompatiblePair> pairs{kronecker_pair(), qtest::corpus("pentagon").pair,
                                      qtest::corpus("hexagon_zigzag").pair};
    for (const CompatiblePair& p : pairs) {
        const size_t n = p.n();
        std::vector<std::vector<size_t>> level{{}};
        for (size_t depth = 0; depth < 6; ++depth) {
            std::vector<std::vector<size_t>> next;
            for (const auto& seq : level)
                for (size_t k = 1; k <= n; ++k)
                    if (seq.empty() || seq.back() != k) {
                        auto s = seq;
                        s.push_back(k);
                        next.push_back(s);
                    }
            level = next;
        }
        for (const auto& seq : level) {
            QuantumSeed s = mutation_sequence(QuantumSeed::initial(p), seq);
            check_compatible(s.pair.b_tilde, s.pair.lambda);
            for (const auto& x : s.cluster) {
                CHECK(x.is_bar_invariant());
                CHECK(x.nonnegative());
            }
        }
    }
}

TEST_CASE("classical mutation matches the q = 1 specialization") {
    CompatiblePair p = qtest::corpus("hexagon_fan").pair;
    QuantumSeed q = QuantumSeed::initial(p);
    ClassicalSeed c = ClassicalSeed::initial(p.b_tilde);
    for (size_t k : {1, 2, 3, 1, 2, 1}) {
        q = mutate_seed(q, k);
        c = classical_mutate(c, k);
    }
    for (size_t i = 0; i < c.cluster.size(); ++i)
        CHECK(specialize_q1(q.cluster[i]) == c.cluster[i]);
}
