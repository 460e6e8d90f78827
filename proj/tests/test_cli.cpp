// End-to-end checks of the command-line surface: spawns the real binary.
// Usage: test_cli <path-to-cli>

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "polydiag/json_io.hpp"

using namespace polydiag;

namespace {

std::string cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/polydiag_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("byte-identical reruns") {
    for (const std::string& args :
         {std::string("count table --max-n 8"), std::string("enumerate chains --n 4"),
          std::string("enumerate nests --n 5 --format json"),
          std::string("poly u --m 2 --n 4"), std::string("theta schedule --n 7")}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("documented examples") {
    CHECK(run("poly brick --m 1 --lambda 1,1,1").out == "u^2+4u+1\n");
    CHECK(run("poly brick --m 1 --lambda 1,1,1 --var t").out == "t^4+4t^2+1\n");
    CHECK(run("poly u --m 1 --n 2").out == "x^2\n");
    CHECK(run("count strata --n 4 --codim 3").out == "18\n");
    CHECK(run("theta fiber --tree " +
              write_temp("cherries.json",
                         R"({"n":4,"vertices":[
                              {"label":[1,2,3,4],"parent":null},
                              {"label":[1,2],"parent":0},
                              {"label":[3,4],"parent":0}]})"))
              .out == "3\n");
}

TEST_CASE("stratum tables") {
    auto table = run("enumerate strata --n 3 --m 1");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("{} | codim 0 | base X<3> | poly x^3+ux") != std::string::npos);
    CHECK(table.out.find("{1,2,3} | codim 1 | base X<1> | fibers M^1_(2) | poly (u+1)x") !=
          std::string::npos);
    // One row per chain.
    CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 8);

    // Open-stratum polynomials over all chains sum to the whole space; the
    // json rows carry everything needed to recompute that.
    auto rows = run("enumerate strata --n 4 --m 2 --open --format json");
    std::istringstream lines(rows.out);
    std::string line;
    XPoly sum;
    long count = 0;
    while (std::getline(lines, line)) {
        json j = json::parse(line);
        sum += xpoly_from_json(j["poly"]);
        CHECK(j["codim"] == chain_from_json(j["chain"]).length());
        ++count;
    }
    CHECK(count == 64);
    CHECK(sum == HodgeContext(2).u_poly(4));
}

TEST_CASE("json outputs round-trip through the parsers") {
    auto chains = run("enumerate chains --n 4 --format json");
    CHECK(chains.exit_code == 0);
    std::istringstream lines(chains.out);
    std::string line;
    long count = 0;
    while (std::getline(lines, line)) {
        Chain c = chain_from_json(json::parse(line));
        CHECK(c.n() == 4);
        ++count;
    }
    CHECK(count == 64);

    auto parts = run("enumerate partitions --n 5 --k 2 --format json");
    std::istringstream plines(parts.out);
    count = 0;
    while (std::getline(plines, line)) {
        CHECK(partition_from_json(json::parse(line)).block_count() == 2);
        ++count;
    }
    CHECK(count == 15);
}

TEST_CASE("classification from profile and curve files") {
    std::string profile = write_temp("s1a.json", R"({"n":4,"exponents":[
        [null,"3","1","1"],["3",null,"1","1"],
        ["1","1",null,"2"],["1","1","2",null]]})");
    auto direct = run("classify --profile " + profile);
    CHECK(direct.exit_code == 0);
    CHECK(direct.out == "chain: {1,2,3,4} < {1,2|3,4} < {1,2|3|4}\n"
                        "nest: {1,2,3,4|1,2|3,4}\n");

    std::string curves = write_temp("curves.json", R"({"n":4,"m":2,"curves":[
        [["0"],["0"]],
        [["0","0","0","1"],["0"]],
        [["0","1"],["0"]],
        [["0","1","1"],["0"]]]})");
    auto from_curves = run("classify --curves " + curves + " --format json");
    CHECK(from_curves.exit_code == 0);
    json j = json::parse(from_curves.out);
    CHECK(chain_from_json(j["chain"]).length() == 3);
    CHECK(nest_from_json(j["nest"]) == Nest(4, {{1, 2, 3, 4}, {1, 2}, {3, 4}}));

    auto dot = run("classify --profile " + profile + " --dot");
    CHECK(dot.out.find("graph leveled_tree") != std::string::npos);
}

TEST_CASE("error paths use exit code 1 and say which field") {
    RunResult r = run("count strata --n 4 --codim 9");
    CHECK(r.exit_code == 1);
    r = run("enumerate partitions --n 9");
    CHECK(r.exit_code == 1);
    r = run("poly brick --m 1 --lambda 0,1");
    CHECK(r.exit_code == 1);
    r = run("classify --profile /tmp/definitely_missing_file.json");
    CHECK(r.exit_code == 1);
    r = run("classify");
    CHECK(r.exit_code == 1);
    std::string bad = write_temp("bad.json", "{not json");
    r = run("tree --chain " + bad + " --dot");
    CHECK(r.exit_code == 1);
    // Ultrametric violation is a validation failure too.
    std::string broken = write_temp("broken.json", R"({"n":3,"exponents":[
        [null,"2","0"],["2",null,"2"],["0","2",null]]})");
    r = run("classify --profile " + broken);
    CHECK(r.exit_code == 1);
}

TEST_CASE("lambda input is sorted with a warning, output stays clean") {
    auto sorted = run("poly brick --m 1 --lambda 1,2");
    auto unsorted = run("poly brick --m 1 --lambda 2,1");
    CHECK(sorted.exit_code == 0);
    CHECK(sorted.out == unsorted.out);
}

int main(int argc, char** argv) {
    cli_path = argc > 1 ? argv[argc - 1] : "./tools/polydiag";
    doctest::Context context;
    return context.run();
}
