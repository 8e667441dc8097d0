#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwig/cli.hpp"
#include "superwig/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace sw;

namespace {
struct Run {
    int code;
    std::string out, err;
};
Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    return {code, o.str(), e.str()};
}
} // namespace

TEST_CASE("rwc output") {
    auto r = run({"rwc", "--direction", "covariant", "--m", "1", "--n", "1", "--Lambda", "1,0", "--lambda", "1", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"sign\":1,\"radicand\":\"1/2\"}");
}

TEST_CASE("branch output") {
    auto r = run({"branch", "--m", "1", "--n", "1", "--Lambda", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "[[0],[1]]");
    auto o = run({"branch", "--m", "1", "--n", "1", "--Lambda", "1,0", "--rule", "oracle"});
    CHECK(o.out == "[[0],[1]]");
}

TEST_CASE("roots and patterns") {
    auto r = run({"roots", "--m", "1", "--n", "1", "--Lambda", "1,0"});
    CHECK(r.out == "{\"barred\":[\"-1/1\",\"1/1\"],\"unbarred\":[\"0/1\",\"0/1\"]}");
    auto p = run({"patterns", "--m", "1", "--n", "1", "--Lambda", "1,0"});
    CHECK(p.out == "[{\"rows\":[[1,0],[0]],\"parity\":1},{\"rows\":[[1,0],[1]],\"parity\":0}]");
}

TEST_CASE("wc output") {
    auto r = run({"wc", "--m", "1", "--n", "1", "--source", "1,0;0", "--p", "1", "--target", "2,0;1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"sign\":-1,\"radicand\":\"1/2\"}");
    auto all = run({"wc", "--m", "1", "--n", "1", "--source", "1,0;0", "--p", "1"});
    CHECK(Json::parse(all.out).size() == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"rwc", "--m", "1"}).code == 2);
    CHECK(run({"branch", "--m", "1", "--n", "1", "--Lambda", "1,x"}).code == 2);
    CHECK(run({"branch", "--m", "1", "--n", "1", "--Lambda", "1,0,0"}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
}

TEST_CASE("domain errors exit with 1 and a machine-readable code") {
    auto r = run({"rwc", "--m", "1", "--n", "1", "--Lambda", "1,0", "--lambda", "3", "--r", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("\"error\":\"InvalidBranch\"") != std::string::npos);
    auto d = run({"rwc", "--m", "1", "--n", "2", "--Lambda", "0,0,0", "--lambda", "0,0", "--r", "1"});
    CHECK(d.code == 1);
    CHECK(d.err.find("\"error\":\"DegenerateRoots\"") != std::string::npos);
}

TEST_CASE("table formats and cache") {
    auto dir = std::filesystem::temp_directory_path() / "superwig-cache-test";
    std::filesystem::remove_all(dir);
    setenv("SUPERWIG_CACHE_DIR", dir.c_str(), 1);
    auto a = run({"table", "--m", "1", "--n", "1", "--bound", "2", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("source,p,target,sign,radicand\n", 0) == 0);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
    auto b = run({"table", "--m", "1", "--n", "1", "--bound", "2", "--format", "csv"});
    CHECK(a.out == b.out);
    auto j = run({"table", "--m", "1", "--n", "1", "--bound", "1"});
    CHECK(Json::parse(j.out).size() == 2);
    auto t = run({"table", "--m", "1", "--n", "1", "--bound", "1", "--format", "table"});
    CHECK(t.out.rfind("| source |", 0) == 0);
    unsetenv("SUPERWIG_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("json helpers") {
    CHECK(to_json(CoefficientValue(-1, Rational(2, 3))).dump() == "{\"sign\":-1,\"radicand\":\"2/3\"}");
    CHECK(to_json(Weight({1, 1}, {1, 0})).dump() == "{\"m\":1,\"n\":1,\"labels\":[1,0]}");
    CHECK(parse_pattern({1, 1}, "1,0;1").level(1).labels == std::vector<long>{1});
}
