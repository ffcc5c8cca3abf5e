#include <doctest.h>

#include "common.hpp"

using namespace qsurf;
using qtest::mono;
using qtest::str;

namespace {
IntVector add(IntVector a, const IntMatrix& b, const IntVector& dim) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < dim.size(); ++j)
            a[i] += b[i][j] * dim[j];
    return a;
}
} // namespace

TEST_CASE("crossing monomials and weights") {
    Surface a = qtest::corpus("annulus");
    StringWord w = str(a, "1 >a> 2 <b< 1");
    CHECK(crossing_monomial_exponent(a, w) == IntVector{2, 1});
    CHECK(crossing_monomial_exponent(a, trivial_string(2)) == IntVector{0, 1});
    SnakeGraph g = label_snake(w, a);
    IntVector g_vec = x_of_matching(a, g, minimal_matching(g));
    CHECK(x_of_matching(a, g, maximal_matching(g)) == add(g_vec, a.pair.b_tilde, {2, 1}));
    // A polygon arc with only boundary neighbors has zero weight.
    Surface sq = qtest::corpus("square", SeedMode::Frozen);
    SnakeGraph one = label_snake(trivial_string(1), sq);
    IntVector wt = weight_exponent(sq, one, minimal_matching(one));
    CHECK(wt[0] == 0);
}

TEST_CASE("factorization through the B matrix") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 6)) {
            SnakeGraph g = label_snake(w, s);
            IntVector base = x_of_matching(s, g, minimal_matching(g));
            for (const auto& p : enumerate_matchings(g)) {
                IndexSet iset = matching_to_submodule(g, p).index_set;
                CHECK(x_of_matching(s, g, p) == add(base, s.pair.b_tilde, dimension_vector(w, iset, s.n())));
            }
        }
    }
}

TEST_CASE("Kronecker G_1 expansion") {
    Surface a = qtest::corpus("annulus");
    ExpansionResult r = quantum_expansion(a, str(a, "1 >a> 2 <b< 1"));
    CHECK(r.terms.size() == 5);
    CHECK(r.scale == 2);
    TorusElement expected = mono({-2, -1}) + mono({-2, 1}, -2) + mono({-2, 1}, 2) + mono({-2, 3}) + mono({0, -1});
    CHECK(r.element == expected);
    ExpansionResult unit = quantum_expansion(a, str(a, "1 >a> 2 <b< 1"), 1);
    CHECK(unit.element == mono({-2, -1}) + mono({-2, 1}, -1) + mono({-2, 1}, 1) + mono({-2, 3}) + mono({0, -1}));
    LaurentPoly c = classical_specialization(r);
    CHECK(c.terms().size() == 4);
    CHECK(c.terms().at(IntVector{-2, 1}) == 2);
    CHECK(c.positive());
}

TEST_CASE("square exchange binomial") {
    Surface sq = qtest::corpus("square");
    ExpansionResult r = quantum_expansion(sq, trivial_string(1));
    CHECK(r.terms.size() == 2);
    CHECK(classical_specialization(r).terms().size() == 2);
    QuantumSeed s = mutate_seed(QuantumSeed::initial(sq.pair), 1);
    CHECK(r.element == s.cluster[0]);
}

TEST_CASE("expansions agree with mutation") {
    Surface a = qtest::corpus("annulus");
    CHECK(oracle_compare(a, str(a, "1"), {1}).equal);
    CHECK(oracle_compare(a, str(a, "1 >a> 2 <b< 1"), {1, 2}).equal);
    OracleReport bad = oracle_compare(a, str(a, "1 >a> 2 <b< 1"), {1});
    CHECK_FALSE(bad.equal);
    CHECK_FALSE(bad.detail.empty());
    Surface p = qtest::corpus("pentagon");
    CHECK(oracle_compare(p, str(p, "1"), {1}).equal);
    CHECK(oracle_compare(p, str(p, "2"), {2}).equal);
    CHECK(oracle_compare(p, str(p, "1 >a> 2"), {1, 2}).equal);
    CHECK(oracle_compare(p, str(p, "1 >a> 2"), {2, 1}).equal);
}

TEST_CASE("expansion invariants on the corpus") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        for (const StringWord& w : enumerate_strings(s.quiver, 6)) {
            ExpansionResult r = quantum_expansion(s, w);
            CHECK(r.element.is_bar_invariant());
            CHECK(r.element.nonnegative());
            CHECK(r.terms.size() == enumerate_canonical_submodules(w).size());
            LaurentPoly sum(s.rank());
            SnakeGraph g = label_snake(w, s);
            for (const auto& p : enumerate_matchings(g))
                sum.add_term(x_of_matching(s, g, p), 1);
            CHECK(classical_specialization(r) == sum);
        }
    }
}

TEST_CASE("first difference") {
    CHECK(first_difference(mono({1, 0}), mono({1, 0})).empty());
    CHECK_FALSE(first_difference(mono({1, 0}), mono({1, 0}, 1)).empty());
}
