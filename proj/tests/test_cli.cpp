#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "refdyn/cli.hpp"

using namespace refdyn;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

// Both printed bounds agree with the truncated decimal.
bool agrees_with(const json& value, const std::string& decimal) {
    return value["enclosure"][0].get<std::string>().rfind(decimal, 0) == 0 &&
           value["enclosure"][1].get<std::string>().rfind(decimal, 0) == 0;
}

std::vector<std::string> csv_last_row(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, last;
    while (std::getline(in, line)) {
        if (!line.empty()) last = line;
    }
    std::vector<std::string> cells;
    std::istringstream ls(last);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("reproduce general") {
    CHECK(run_json({"reproduce", "general", "--n", "5"})["outputs"]["tuple"] == "(1, 32, 32, 32, 1)");
    CHECK(run_json({"reproduce", "general", "--n", "1"})["outputs"]["tuple"] == "(1, 1, 1, 1, 1)");
    for (int n = 2; n <= 10; ++n) {
        const json j = run_json({"reproduce", "general", "--n", std::to_string(n)});
        CHECK(j["passed"] == true);
        const std::string v = n <= 2 ? "1" : std::to_string(1 << n);
        CHECK(j["outputs"]["tuple"] == "(1, " + v + ", " + v + ", " + v + ", 1)");
    }
    CHECK(run({"reproduce", "general"}).code == 2);
    CHECK(run({"reproduce", "general", "--n", "0"}).code == 2);
}

TEST_CASE("reproduce conic-line and triangle") {
    const json cl = run_json({"reproduce", "conic-line"});
    CHECK(cl["outputs"]["lambda_1"]["polynomial"] == "x^2 - 5*x - 2");
    CHECK(agrees_with(cl["outputs"]["lambda_1"], "5.372281323"));
    CHECK(cl["outputs"]["lambda_2"]["status"] == "open");
    CHECK(cl["outputs"]["delta_sequence"][4] == "1056");

    const json tr = run_json({"reproduce", "triangle"});
    CHECK(tr["outputs"]["lambda_1"]["polynomial"] == "x^2 - 4*x - 1");
    CHECK(agrees_with(tr["outputs"]["lambda_1"], "4.236067977"));
    CHECK(tr["outputs"]["stated_polynomial_is_minimal"] == false);

    const json fine = run_json({"reproduce", "conic-line", "--precision", "20"});
    CHECK(fine["outputs"]["lambda_1"]["enclosure"][0].get<std::string>().size() == 23);
}

TEST_CASE("deterministic reports and file output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"billiard", "build", "--seed", "7"},
             {"germ", "evolve", "--steps", "12", "--seed", "3", "--format", "csv"},
             {"reproduce", "triangle", "--seed", "2"}}) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const std::string path = "test_cli_out.json";
    CHECK(run({"billiard", "build", "--seed", "7", "--out", path}).out.empty());
    std::ifstream in(path);
    const json cfg = json::parse(in)["outputs"]["configuration"];
    CHECK(cfg["seed"] == 7);
    in.close();

    std::ofstream c("test_cli_cfg.json");
    c << cfg.dump();
    c.close();
    const Run orbit = run({"billiard", "orbit", "--config", "test_cli_cfg.json", "--steps", "3", "--format", "csv"});
    CHECK(orbit.code == 0);
    CHECK(orbit.out == run({"billiard", "orbit", "--seed", "7", "--steps", "3", "--format", "csv"}).out);
    std::remove(path.c_str());
    std::remove("test_cli_cfg.json");
}

TEST_CASE("billiard check") {
    const json j = run_json({"billiard", "check", "--seed-range", "0..3", "--horizon", "300"});
    CHECK(j["outputs"]["seed"] == 0);
    CHECK(j["outputs"]["check"]["status"] == "success");
    const Run bad = run({"billiard", "check", "--seed-range", "3..3", "--horizon", "300"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["outputs"]["seed"].is_null());
    CHECK(run({"billiard", "check", "--seed-range", "5..2"}).code == 2);
    CHECK(run({"billiard", "orbit", "--seed", "7", "--start", "(1, 2, 3, 4)"}).code == 2);
}

TEST_CASE("sequence commands") {
    const Run g = run({"transition", "growth", "--system", "conic-line", "--steps", "20", "--format", "csv"});
    CHECK(g.code == 0);
    CHECK(g.out.rfind("step,phase,v0,v1,v2,ratio\n", 0) == 0);
    CHECK(csv_last_row(g.out).back().rfind("5.37228", 0) == 0);

    std::ofstream f("test_cli_sys.json");
    f << R"({"matrices": [[[0,1,0],[-3,0,5],[-4,0,6]]], "start": [0,0,1]})";
    f.close();
    const Run file = run({"transition", "growth", "--matrix-file", "test_cli_sys.json", "--steps", "20", "--format", "csv"});
    CHECK(file.out == g.out);
    std::remove("test_cli_sys.json");

    const Run ev = run({"germ", "evolve", "--steps", "30", "--format", "csv"});
    CHECK(ev.code == 0);
    const auto last = csv_last_row(ev.out);
    CHECK(last[0] == "30");
    CHECK(last[2] == "1089155");

    const Run orbit = run({"elliptic", "orbit", "--n", "3", "--format", "csv"});
    CHECK(csv_last_row(orbit.out) == std::vector<std::string>{"6", "1", "1", "0", "0"});
    CHECK(run({"reproduce", "conic-line", "--format", "csv"}).code == 2);
}

TEST_CASE("certificate exit status") {
    CHECK(run({"elliptic", "check", "--n", "4", "--horizon", "500"}).code == 0);
    CHECK(run({"elliptic", "check", "--n", "4", "--horizon", "8"}).code == 1);
    CHECK(run({"elliptic", "check", "--n", "5", "--horizon", "200"}).code == 0);
    CHECK(run({"elliptic", "check", "--n", "2"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"reproduce", "general", "--n", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("seed ranges") {
    CHECK(parse_seed_range("0..999") == std::pair<std::uint64_t, std::uint64_t>{0, 999});
    CHECK(parse_seed_range("4..4") == std::pair<std::uint64_t, std::uint64_t>{4, 4});
    CHECK_THROWS_AS(parse_seed_range("4-9"), Error);
    CHECK_THROWS_AS(parse_seed_range("..9"), Error);
    CHECK_THROWS_AS(parse_seed_range("9..4"), Error);
}
