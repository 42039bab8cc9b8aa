#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef CLI_BINARY
#error "CLI_BINARY must point at the built command-line executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("decompose emits summands and chain") {
    const RunResult r = run("decompose --family A --rank 2 --weight 1,1,0 --delta 0 --n 0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lambda"]["omega"] == nlohmann::json({1, 1, 0}));
    CHECK(j["lambda"]["delta"] == 0);
    CHECK(j["summands"].size() == 2);
    CHECK(j["chain"].size() == 3);
    for (const auto& s : j["summands"]) {
        CHECK(s["multiplicity"] == 1);
        CHECK(s.contains("mu"));
        CHECK(s["weight"].contains("omega"));
    }
    // Round-trip: re-serializing the parsed document is the identity.
    CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("decompose rejects out-of-scope input with exit 2") {
    const RunResult r = run("decompose --family A --rank 2 --weight 0,0,0 --delta 5");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("multiple of delta") != std::string::npos);
}

TEST_CASE("malformed weight vector exits 1") {
    CHECK(run("decompose --family A --rank 2 --weight 1,x,0").exit_code == 1);
    CHECK(run("decompose --family A --rank 2 --weight 1,0").exit_code == 1);
    CHECK(run("decompose --family A --rank 2").exit_code == 1);
    CHECK(run("decompose --family Q --rank 2 --weight 1,0,0").exit_code == 1);
    CHECK(run("decompose --family B --rank 1 --weight 1,0").exit_code == 2);
}

TEST_CASE("text format") {
    const RunResult r =
        run("decompose --family A --rank 2 --weight 1,1,0 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("summands") != std::string::npos);
    CHECK(r.out.find("chain:") != std::string::npos);
}

TEST_CASE("varpi input is embedded") {
    // varpi_1 embeds with n_0 = -1, which is not dominant: scope error.
    CHECK(run("chain --family A --rank 2 --varpi 1,0").exit_code == 2);
    // Adding omega_0 by hand through --weight works.
    CHECK(run("chain --family A --rank 2 --weight 0,1,0").exit_code == 0);
}

TEST_CASE("criteria verdicts") {
    auto r = run("criteria --family A --rank 2 --weight 2,0,0");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["thmB_trivial"] == false);
    CHECK(j["thmC_reducible"] == true);
    CHECK(j["verdict"] == "reducible (Thm C)");

    r = run("criteria --family A --rank 2 --weight 0,1,0");
    j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "undetermined");
}

TEST_CASE("verify-relations") {
    const RunResult r =
        run("verify-relations --family C --rank 2 --window-lo -1 --window-hi 1");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["failures"].empty());
}

TEST_CASE("crystal graph output") {
    const RunResult dot = run("crystal-graph --family A --rank 2");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    const RunResult js = run("crystal-graph --family B --rank 3 --format json");
    CHECK(js.exit_code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["vertices"] == 7);
    CHECK(j["edges"].size() == 8);
}

TEST_CASE("selftest determinism and seed override") {
    const RunResult a = run("selftest --seed 7 --samples 5");
    const RunResult b = run("selftest --seed 7 --samples 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed=7") != std::string::npos);
    const RunResult d = run("selftest --samples 5 --corrupt");
    CHECK(d.exit_code == 3);
    CHECK(d.out.find("FAIL defining-relations") != std::string::npos);
}

TEST_CASE("AFK_SEED overrides --seed") {
    const std::string cmd = std::string("AFK_SEED=9 ") + CLI_BINARY + " selftest --seed 7 --samples 5";
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out.find("seed=9") != std::string::npos);
}
