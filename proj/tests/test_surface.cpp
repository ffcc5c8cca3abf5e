#include <doctest.h>

#include "common.hpp"

using namespace qsurf;

namespace {
ErrorCode error_of(const std::string& json) {
    try {
        Surface::build(Triangulation::from_json_text(json), SeedMode::Auto);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Mismatch;
}

std::string message_of(const std::string& json) {
    try {
        Triangulation::from_json_text(json);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const char* kAnnulus = R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"internal"},
    {"id":3,"kind":"boundary"},{"id":4,"kind":"boundary"}],"triangles":[[2,1,3],[2,1,4]]})";
} // namespace

TEST_CASE("annulus quiver and seed") {
    Surface s = Surface::build(Triangulation::from_json_text(kAnnulus), SeedMode::Auto);
    REQUIRE(s.quiver.arrows.size() == 2);
    for (const Arrow& a : s.quiver.arrows) {
        CHECK(a.source == 1);
        CHECK(a.target == 2);
    }
    CHECK(s.quiver.relations.empty());
    CHECK_FALSE(s.frozen);
    CHECK(s.pair.b_tilde == IntMatrix{{0, -2}, {2, 0}});
    CHECK(s.pair.lambda == IntMatrix{{0, -1}, {1, 0}});
    CHECK(s.pair.d == IntVector{2, 2});
}

TEST_CASE("corpus quivers are gentle") {
    for (const auto& name : qtest::corpus_names()) {
        Surface s = qtest::corpus(name);
        CHECK(check_gentle(s.quiver).ok);
        CHECK(check_compatible(s.pair.b_tilde, s.pair.lambda) == s.pair.d);
    }
    CHECK(qtest::corpus("square").quiver.arrows.empty());
    CHECK(qtest::corpus("hexagon_zigzag").quiver.arrows.size() == 2);
    CHECK(qtest::corpus("hexagon_zigzag").quiver.relations.empty());
    CHECK(qtest::corpus("hexagon_triangle").quiver.relations.size() == 3);
}

TEST_CASE("gentleness violations") {
    QuiverWithRelations q;
    q.vertices = {1, 2, 3, 4};
    q.arrows = {{0, 1, 2, 0, "a"}, {1, 1, 3, 0, "b"}, {2, 1, 4, 0, "c"}};
    CHECK_FALSE(check_gentle(q).ok);
    QuiverWithRelations p;
    p.vertices = {1, 2, 3, 4};
    p.arrows = {{0, 1, 2, 0, "a"}, {1, 2, 3, 0, "b"}, {2, 3, 4, 0, "c"}};
    CHECK(check_gentle(p).ok);
    p.relations = {{0, 1, 2}};
    CHECK_FALSE(check_gentle(p).ok);
}

TEST_CASE("b matrices") {
    CHECK(b_matrix(qtest::corpus("square").triangulation, false) == IntMatrix{{0}});
    IntMatrix b = qtest::corpus("pentagon").pair.b_tilde;
    CHECK((b == IntMatrix{{0, 1}, {-1, 0}} || b == IntMatrix{{0, -1}, {1, 0}}));
    // Frozen rows follow the same arrow count.
    Surface f = qtest::corpus("pentagon", SeedMode::Frozen);
    CHECK(f.pair.b_tilde.size() == 7);
    CHECK(f.pair.b_tilde[0] == b[0]);
}

TEST_CASE("arc neighborhoods") {
    Triangulation t = Triangulation::from_json_text(kAnnulus);
    ArcNeighborhood n = neighborhood(t, 2);
    std::vector<int> sides{n.a1, n.a2, n.a3, n.a4};
    CHECK(std::count(sides.begin(), sides.end(), 1) == 2);
    CHECK(std::count(sides.begin(), sides.end(), 3) == 1);
    CHECK(std::count(sides.begin(), sides.end(), 4) == 1);
    ArcNeighborhood sq = neighborhood(qtest::corpus("square").triangulation, 1);
    for (int a : {sq.a1, sq.a2, sq.a3, sq.a4})
        CHECK_FALSE(qtest::corpus("square").triangulation.is_internal(a));
}

TEST_CASE("finding a compatible form") {
    LambdaSolution k = find_lambda({{0, 2}, {-2, 0}});
    CHECK(k.lambda == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(k.d == IntVector{2, 2});
    LambdaSolution f = find_lambda({{0}, {1}});
    CHECK(f.lambda == IntMatrix{{0, -1}, {1, 0}});
    CHECK(f.d == IntVector{1});
    CHECK_THROWS_AS(find_lambda({{0}}), Error);
}

TEST_CASE("seed modes") {
    CHECK(qtest::corpus("square").frozen);
    CHECK_FALSE(qtest::corpus("pentagon").frozen);
    CHECK(qtest::corpus("pentagon", SeedMode::Frozen).frozen);
    CHECK_THROWS_AS(qtest::corpus("square", SeedMode::Principal), Error);
    Surface p = qtest::corpus("pentagon");
    CHECK(p.lattice_index(5) == -1);
    CHECK(qtest::corpus("pentagon", SeedMode::Frozen).lattice_index(5) == 4);
}

TEST_CASE("triangulation validation") {
    CHECK(message_of(R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"boundary"},
        {"id":3,"kind":"boundary"}],"triangles":[[1,2,3],[1,2,9]]})")
              .find("triangle 1 references unknown arc 9") != std::string::npos);
    CHECK(error_of(R"({"arcs":[{"id":1,"kind":"internal"}],"triangles":[[1,1,1]]})") ==
          ErrorCode::InvalidTriangulation);
    // Once-punctured digon: two triangles glued along both internal arcs the other way round.
    CHECK(error_of(R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"internal"},
        {"id":3,"kind":"boundary"},{"id":4,"kind":"boundary"}],"triangles":[[1,2,3],[2,1,4]]})") ==
          ErrorCode::InvalidTriangulation);
    CHECK(error_of(R"({"arcs":[{"id":2,"kind":"internal"}],"triangles":[]})") == ErrorCode::InvalidTriangulation);
    CHECK(error_of("{\"arcs\": 3}") == ErrorCode::ParseError);
    CHECK(error_of("not json") == ErrorCode::ParseError);
    // A boundary arc in two triangles.
    CHECK(error_of(R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"boundary"},{"id":3,"kind":"boundary"},
        {"id":4,"kind":"boundary"}],"triangles":[[1,2,3],[1,4,2]]})") == ErrorCode::InvalidTriangulation);
}

TEST_CASE("supplied lambda") {
    std::string ok = R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"internal"},
        {"id":3,"kind":"boundary"},{"id":4,"kind":"boundary"}],"triangles":[[2,1,3],[2,1,4]],
        "lambda":[[0,-2],[2,0]]})";
    Surface s = Surface::build(Triangulation::from_json_text(ok), SeedMode::Auto);
    CHECK(s.pair.d == IntVector{4, 4});
    std::string bad = R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"internal"},
        {"id":3,"kind":"boundary"},{"id":4,"kind":"boundary"}],"triangles":[[2,1,3],[2,1,4]],
        "lambda":[[0,1],[1,0]]})";
    CHECK(error_of(bad) == ErrorCode::NotSkew);
}
