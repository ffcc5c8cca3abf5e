#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "qsurf/cli.hpp"

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = qsurf::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QSURF_DATA_DIR) + "/" + name + ".json"; }

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("qsurf_test_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}
} // namespace

TEST_CASE("validate") {
    Run r = run({"validate", "--surface", data("annulus")});
    CHECK(r.code == 0);
    CHECK(r.out.find("a: 1 -> 2") != std::string::npos);
    CHECK(r.out.find("d = (2,2)") != std::string::npos);
    CHECK(r.out.substr(r.out.size() - 3) == "ok\n");

    std::string bad = temp_file("unknown_arc", R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"boundary"},
        {"id":3,"kind":"boundary"}],"triangles":[[1,2,3],[1,2,9]]})");
    r = run({"validate", "--surface", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("triangle 1") != std::string::npos);

    r = run({"validate", "--surface", data("square"), "--principal"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NoCompatibleLambda") != std::string::npos);
}

TEST_CASE("expand") {
    Run r = run({"expand", "--surface", data("annulus"), "--string", "1 >a> 2 <b< 1", "--unit"});
    CHECK(r.code == 0);
    CHECK(r.out.find("q^{1/2} X[(-2,1)]") != std::string::npos);
    CHECK(r.out.find("q^{-1/2} X[(-2,1)]") != std::string::npos);
    r = run({"expand", "--surface", data("annulus"), "--string", "1 >a> 2 <a< 1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotReduced") != std::string::npos);
    r = run({"--format", "structured", "expand", "--surface", data("pentagon"), "--string", "1 >a> 2"});
    CHECK(r.code == 0);
    CHECK(r.out.front() == '{');
}

TEST_CASE("verify") {
    Run r = run({"verify", "--surface", data("pentagon"), "--max-length", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run({"verify", "--surface", data("annulus"), "--max-length", "5", "--kronecker", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kronecker equality: pass") != std::string::npos);

    std::string corrupt = temp_file("corrupt_lambda", R"({"arcs":[{"id":1,"kind":"internal"},{"id":2,"kind":"internal"},
        {"id":3,"kind":"boundary"},{"id":4,"kind":"boundary"}],"triangles":[[2,1,3],[2,1,4]],
        "lambda":[[0,1],[1,0]]})");
    r = run({"verify", "--surface", corrupt});
    CHECK(r.code == 1);
    CHECK(r.out.find("compatible pair: FAIL") != std::string::npos);
    CHECK(r.out.find("triangulation: pass") != std::string::npos);
}

TEST_CASE("output does not depend on the job count") {
    std::vector<std::string> args{"verify", "--surface", data("hexagon_triangle"), "--max-length", "5",
                                  "--mutation-depth", "3"};
    Run one = run([&] {
        auto a = args;
        a.insert(a.begin(), {"--jobs", "1"});
        return a;
    }());
    Run four = run([&] {
        auto a = args;
        a.insert(a.begin(), {"--jobs", "4"});
        return a;
    }());
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("other subcommands") {
    CHECK(run({"matchings", "--surface", data("annulus"), "--string", "1 >a> 2 <b< 1"}).code == 0);
    Run s = run({"submodules", "--surface", data("annulus"), "--string", "1 >a> 2 <b< 1", "--valuations"});
    CHECK(s.code == 0);
    CHECK(s.out.find("{2,3}") != std::string::npos);
    Run m = run({"mutate", "--surface", data("annulus"), "--seq", "1"});
    CHECK(m.code == 0);
    CHECK(m.out.find("X1 = X[(-1,0)] + X[(-1,2)]") != std::string::npos);
    Run k = run({"kronecker", "--s", "3", "--check"});
    CHECK(k.code == 0);
    Run sk = run({"skein-multiply", "--surface", data("pentagon"), "--v", "1", "--w", "2"});
    CHECK(sk.code == 0);
    CHECK(sk.out.find("identity: exact") != std::string::npos);
    CHECK(run({"skein-multiply", "--surface", data("annulus"), "--v", "1", "--w", "2"}).code == 1);
}

TEST_CASE("argument errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"expand", "--surface", data("annulus")}).code == 2);
    CHECK(run({"--jobs", "0", "validate", "--surface", data("annulus")}).code == 2);
    CHECK(run({"mutate", "--surface", data("annulus"), "--seq", "1,x"}).code != 0);
    CHECK(run({"validate", "--surface", "/nonexistent.json"}).code == 1);
}
