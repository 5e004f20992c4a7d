// End-to-end checks of the command-line surface. The binary path arrives in
// the ODDSUB_CLI environment variable (set by ctest).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oddsub/generate.hpp"
#include "oddsub/graph.hpp"

using namespace oddsub;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("ODDSUB_CLI");
    return p ? p : "";
}

RunResult run(const std::string& args, const std::string& stdin_text = {}) {
    std::string in_path = "/tmp/oddsub_cli_in.txt";
    {
        std::ofstream f(in_path);
        f << stdin_text;
    }
    std::string cmd = cli_path() + " " + args + " < " + in_path + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli solve") {
    REQUIRE(!cli_path().empty());
    RunResult r = run("solve", to_graph6(k7_minus_hamilton()) + "\n");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("optimum") == 2);
    CHECK(j.at("optimal") == true);
    CHECK(j.at("witness").size() == 2);

    // C4 via graph6
    r = run("solve", "Cl\n");
    CHECK(json::parse(r.out).at("optimum") == 2);

    // edge-list input
    r = run("solve --format edgelist", "2\n0 1\n");
    CHECK(json::parse(r.out).at("optimum") == 2);

    // parse failure
    r = run("solve", "this is not graph6\n");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli construct") {
    RunResult r = run("construct", to_graph6(cycle_graph(9)) + "\n");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("input_n") == 9);
    CHECK(7 * j.at("final_set").size() >= 18);

    // precondition failure: degree 5
    r = run("construct", to_graph6(star_graph(6)) + "\n");
    CHECK(r.exit_code == 2);

    // isolated vertex
    r = run("construct --format edgelist", "3\n0 1\n");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli gallai") {
    RunResult r = run("gallai", "Cl\n");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("part_one").size() + j.at("part_two").size() == 4);
}

TEST_CASE("cli gen determinism") {
    std::string spec = R"({"family":"random_regular","n":10,"d":3})";
    RunResult a = run("gen --spec '" + spec + "' --count 3 --seed 7");
    RunResult b = run("gen --spec '" + spec + "' --count 3 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // three graph6 lines of ten vertices each
    int lines = 0;
    for (char c : a.out)
        if (c == '\n') ++lines;
    CHECK(lines == 3);

    RunResult k7 = run("gen --spec '{\"family\":\"k7_minus_hamilton\"}'");
    CHECK(k7.out == to_graph6(k7_minus_hamilton()) + "\n");

    RunResult bad = run("gen --spec '{\"family\":\"random_regular\",\"n\":9,\"d\":3}'");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli enum") {
    RunResult r = run("enum --n 3");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 4);

    CHECK(run("enum --n 9").exit_code == 2);
}

TEST_CASE("cli verify") {
    std::string cfg_path = "/tmp/oddsub_cli_cfg.json";
    std::string report_path = "/tmp/oddsub_cli_report.json";
    std::remove(report_path.c_str());
    std::remove((report_path + ".ledger.jsonl").c_str());
    {
        std::ofstream f(cfg_path);
        f << R"({
            "mode": "exhaustive",
            "checks": ["bound"],
            "bound": {"numerator": 2, "denominator": 7},
            "exhaustive": {"n_min": 2, "n_max": 5, "max_degree": 4}
        })";
    }
    RunResult r = run("verify --config " + cfg_path + " --output " + report_path);
    CHECK(r.exit_code == 0);
    std::ifstream rf(report_path);
    REQUIRE(rf.good());
    json report = json::parse(rf);
    CHECK(report.at("instances_tested") == 814);
    CHECK(report.at("violations").empty());

    // rerun resumes from the ledger and reproduces the report
    RunResult r2 = run("verify --config " + cfg_path + " --output " + report_path);
    CHECK(r2.exit_code == 0);

    // violating campaign exits 1 but still writes the report
    std::string bad_cfg = "/tmp/oddsub_cli_badcfg.json";
    {
        std::ofstream f(bad_cfg);
        f << R"({
            "mode": "exhaustive",
            "checks": ["bound"],
            "bound": {"numerator": 1, "denominator": 1},
            "exhaustive": {"n_min": 2, "n_max": 4, "max_degree": 4}
        })";
    }
    std::string bad_report = "/tmp/oddsub_cli_badreport.json";
    std::remove(bad_report.c_str());
    std::remove((bad_report + ".ledger.jsonl").c_str());
    RunResult rb = run("verify --config " + bad_cfg + " --output " + bad_report);
    CHECK(rb.exit_code == 1);
    std::ifstream bf(bad_report);
    CHECK(!json::parse(bf).at("violations").empty());

    CHECK(run("verify --config /tmp/does_not_exist.json").exit_code == 2);
    std::remove((report_path + ".ledger.jsonl").c_str());
    std::remove((bad_report + ".ledger.jsonl").c_str());
}
