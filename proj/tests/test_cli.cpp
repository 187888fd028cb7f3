#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/canonical.hpp"
#include "srg/graph6.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("srg_lab_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `srg-lab <args>` through the shell; `prefix` goes before the binary
// (environment assignments or the left side of a pipe).
Run cli(const std::string& args, const std::string& prefix = "")
{
    const auto out = scratch() / "stdout";
    const auto err = scratch() / "stderr";
    const std::string cmd = prefix + "'" SRG_LAB_BIN "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string fixture(const std::string& name) { return "'" SRG_LAB_FIXTURES "/" + name + "'"; }

} // namespace

TEST_CASE("feasible")
{
    const auto table = cli("feasible --lambda 1 --mu 2 --kmax 1000");
    CHECK(table.code == 0);
    CHECK(table.out.find("500 parameter sets, 6 pass") != std::string::npos);

    const auto small = cli("feasible --lambda 1 --mu 2 --kmax 6 --format json");
    REQUIRE(small.code == 0);
    const auto j = json::parse(small.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0] == json{{"k", 2}, {"n", 3}, {"pass", true}, {"reason", "ok"}});

    const auto empty = cli("feasible --lambda 1 --mu 2 --kmax 1");
    CHECK(empty.code == 0);
    CHECK(empty.out.find("0 parameter sets") != std::string::npos);

    CHECK(cli("feasible --lambda 1 --mu 2 --kmax 2000000").code == 2);
    CHECK(cli("feasible --lambda 1 --kmax 10").code == 2);
    CHECK(cli("feasible --lambda 1 --mu 2 --kmax 6 --format xml").code == 2);
    CHECK(cli("").code == 2);
    CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("check")
{
    const auto ok = cli("check " + fixture("paley9.g6") + " --n 9 --k 4 --lambda 1 --mu 2");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    const auto wrong = cli("check " + fixture("paley9.g6") + " --n 9 --k 4 --lambda 1 --mu 3 --format json");
    CHECK(wrong.code == 1);
    const auto j = json::parse(wrong.out);
    CHECK(j["results"][0]["reason"] == "identity_violation");
    CHECK(j["graphs_checked"] == 1);

    const auto empty = cli("check " + fixture("empty.g6") + " --n 9 --k 4 --lambda 1 --mu 2");
    CHECK(empty.code == 0);
    CHECK(empty.err.find("warning") != std::string::npos);
    CHECK(empty.out.find("0 graphs checked") != std::string::npos);

    const auto broken = cli("check " + fixture("truncated.g6") + " --n 9 --k 4 --lambda 1 --mu 2");
    CHECK(broken.code == 2);
    CHECK(broken.err.find("line 1, byte 2") != std::string::npos);

    const auto mixed = cli("check --n 13 --k 6 --lambda 2 --mu 3", "(cat " + fixture("paley13.g6") + "; printf 'Dhc\\n') | ");
    CHECK(mixed.code == 1);
    CHECK(mixed.out.find("line 2: FAIL") != std::string::npos);
    CHECK(mixed.out.find("order_mismatch") != std::string::npos);

    CHECK(cli("check /nonexistent/file.g6 --n 9 --k 4 --lambda 1 --mu 2").code == 2);
}

TEST_CASE("gen")
{
    const auto c5 = cli("gen paley --q 5");
    CHECK(c5.code == 0);
    CHECK(c5.out == "Dhc\n");
    CHECK(cli("gen paley --q 7").code == 2);
    CHECK(cli("gen paley --q 9 --format json").out.find("\"graph6\"") != std::string::npos);

    const auto piped = cli("check --n 9 --k 4 --lambda 1 --mu 2", "'" SRG_LAB_BIN "' gen paley --q 9 | ");
    CHECK(piped.code == 0);
}

TEST_CASE("prove19 and replay")
{
    const auto trace = scratch() / "trace.json";
    const auto run = cli("prove19 --trace '" + trace.string() + "'");
    CHECK(run.code == 0);
    CHECK(run.out.find("2 cases") != std::string::npos);
    CHECK(run.out.find("surviving completions: 0") != std::string::npos);

    CHECK(cli("replay '" + trace.string() + "'").code == 0);

    // edit one witness of the first leaf in the second case
    json j = json::parse(slurp(trace));
    auto& witnesses = j["cases"][1]["leaves"][0]["certificate"]["witnesses"];
    witnesses[witnesses.size() - 1] = 18;
    const auto tampered = scratch() / "tampered.json";
    std::ofstream(tampered) << j.dump();
    const auto bad = cli("replay '" + tampered.string() + "'");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("case 1 (C12) leaf 0") != std::string::npos);

    std::ofstream(scratch() / "garbage.json") << "{\"cases\": 3";
    CHECK(cli("replay '" + (scratch() / "garbage.json").string() + "'").code == 2);
    CHECK(cli("replay /nonexistent.json").code == 2);
    CHECK(cli("prove19 --trace /nonexistent/dir/t.json").code == 2);
}

TEST_CASE("search")
{
    const auto paley = cli("search --n 9 --k 4 --lambda 1 --mu 2");
    REQUIRE(paley.code == 0);
    const auto j = json::parse(paley.out);
    REQUIRE(j["solutions"].size() == 1);
    const auto gen = cli("gen paley --q 9");
    CHECK(j["solutions"][0] == srg::canonical_form(srg::parse_graph6(gen.out)));

    const auto guard = cli("search --n 99 --k 14 --lambda 1 --mu 2");
    CHECK(guard.code == 2);
    CHECK(guard.err.find("19") != std::string::npos);
    CHECK(cli("search --n 9 --k 4 --lambda 1 --mu 3").code == 2);
    CHECK(cli("search --n 9 --k 4 --lambda 1 --mu 2 --jobs 0").code == 2);
}

TEST_CASE("json mode prints only json")
{
    const std::vector<std::string> commands{
        "feasible --lambda 1 --mu 2 --kmax 30 --format json",
        "gen paley --q 13 --format json",
        "prove19 --format json",
        "search --n 10 --k 3 --lambda 0 --mu 1 --seeded --jobs 2",
        "check " + fixture("paley9.g6") + " --n 9 --k 4 --lambda 1 --mu 2 --format json",
    };
    for (const auto& args : commands) {
        CAPTURE(args);
        const auto r = cli(args, "SRG_LAB_COLOR=always ");
        CHECK(r.code == 0);
        CHECK(json::accept(r.out));
        CHECK(r.out.find('\033') == std::string::npos);
    }
}

TEST_CASE("colour control")
{
    const std::string args = "check " + fixture("paley9.g6") + " --n 9 --k 4 --lambda 1 --mu 2";
    CHECK(cli(args, "SRG_LAB_COLOR=always ").out.find("\033[32mPASS") != std::string::npos);
    CHECK(cli(args, "SRG_LAB_COLOR=never ").out.find('\033') == std::string::npos);
    // stdout is a file here, so auto means plain
    CHECK(cli(args, "SRG_LAB_COLOR=auto ").out.find('\033') == std::string::npos);
    const auto odd = cli(args, "SRG_LAB_COLOR=sometimes ");
    CHECK(odd.code == 0);
    CHECK(odd.err.find("SRG_LAB_COLOR") != std::string::npos);
}
