// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the command-line front end: exit codes, determinism,
// file shapes, and config/env precedence.

#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kExe = TSTFNBP_CLI_EXE;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("tstfnbp-cli-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

int run(const std::string& args, const std::string& extra_env = "") {
    std::string cmd = extra_env + kExe + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l)) {
        if (!l.empty() && l.back() == '\r') l.pop_back();
        if (!l.empty()) out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("pmf command emits a normalized table with manifest reference") {
    TempDir d;
    REQUIRE(run("pmf --n-max 10 --grid 1 --out " + d.path.string()) == 0);
    auto rows = lines(slurp(d.path / "pmf.csv"));
    REQUIRE(rows.size() == 12);  // header + 11 counts
    CHECK(rows[0] == "time,n,probability,tail_bound,manifest");
    double sum = 0.0, tail = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream ss(rows[i]);
        std::string t, n, p, tb, m;
        std::getline(ss, t, ',');
        std::getline(ss, n, ',');
        std::getline(ss, p, ',');
        std::getline(ss, tb, ',');
        std::getline(ss, m, ',');
        sum += std::stod(p);
        tail = std::stod(tb);
        CHECK(m == "pmf-manifest.json");
    }
    CHECK(std::fabs(sum + tail - 1.0) < 1e-8);
    json manifest = json::parse(slurp(d.path / "pmf-manifest.json"));
    CHECK(manifest["command"] == "pmf");
    CHECK(manifest["config"]["seed"] == 42);
    CHECK(manifest.contains("library_version"));
    CHECK(manifest.contains("wall_seconds"));
}

TEST_CASE("simulate: row shape and bit-identical reruns") {
    TempDir d1, d2;
    std::string args = "simulate --samples 3 --grid 0.5 1 2 --seed 9 --workers 2 --out ";
    REQUIRE(run(args + d1.path.string()) == 0);
    REQUIRE(run(args + d2.path.string()) == 0);
    auto rows = lines(slurp(d1.path / "simulate.csv"));
    REQUIRE(rows.size() == 10);  // header + 3 paths x 3 times
    CHECK(rows[0] == "path_id,time,M_value,Q_count,manifest");
    CHECK(slurp(d1.path / "simulate.csv") == slurp(d2.path / "simulate.csv"));
}

TEST_CASE("config file: values load, flags win, unknown keys rejected") {
    TempDir d;
    {
        std::ofstream cfg(d.path / "cfg.json");
        cfg << R"({"lambda": 0.25, "seed": 77, "n_max": 4, "grid": [1.0]})";
    }
    std::string out = (d.path / "o1").string();
    REQUIRE(run("pmf --config " + (d.path / "cfg.json").string() + " --out " + out) == 0);
    json m = json::parse(slurp(fs::path(out) / "pmf-manifest.json"));
    CHECK(m["config"]["lambda"] == 0.25);
    CHECK(m["config"]["seed"] == 77);
    // Flag overrides the file.
    std::string out2 = (d.path / "o2").string();
    REQUIRE(run("pmf --config " + (d.path / "cfg.json").string() + " --seed 5 --out " + out2) ==
            0);
    json m2 = json::parse(slurp(fs::path(out2) / "pmf-manifest.json"));
    CHECK(m2["config"]["seed"] == 5);
    // Unknown key is a config error.
    {
        std::ofstream cfg(d.path / "bad.json");
        cfg << R"({"lambda": 0.25, "typo_key": 1})";
    }
    CHECK(run("pmf --config " + (d.path / "bad.json").string()) == 2);
}

TEST_CASE("TSTFNBP_SEED env overrides config; flag beats env") {
    TempDir d;
    std::string out = (d.path / "a").string();
    REQUIRE(run("pmf --n-max 2 --out " + out, "TSTFNBP_SEED=1234 ") == 0);
    CHECK(json::parse(slurp(fs::path(out) / "pmf-manifest.json"))["config"]["seed"] == 1234);
    std::string out2 = (d.path / "b").string();
    REQUIRE(run("pmf --n-max 2 --seed 8 --out " + out2, "TSTFNBP_SEED=1234 ") == 0);
    CHECK(json::parse(slurp(fs::path(out2) / "pmf-manifest.json"))["config"]["seed"] == 8);
}

TEST_CASE("config errors exit with code 2") {
    // Non-increasing grid.
    CHECK(run("pmf --grid 1 0.5") == 2);
    // lambda1 <= mu^alpha for a pdf-series command.
    CHECK(run("pmf --lambda1 1 --mu 1 --alpha 0.5") == 2);
    // Levy jump measure needs beta = 1.
    CHECK(run("levy --beta 0.5") == 2);
    // Invalid parameter domain.
    CHECK(run("pmf --alpha 1.5") == 2);
    // Unknown subcommand / missing subcommand.
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    // Missing config file.
    CHECK(run("pmf --config /nonexistent/cfg.json") == 2);
}

TEST_CASE("fpt and levy commands emit plausible tables") {
    TempDir d;
    REQUIRE(run("fpt --k 3 --grid 0.5 1 2 --out " + d.path.string()) == 0);
    auto rows = lines(slurp(d.path / "fpt.csv"));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "time,k,survival,cdf,density,density_error,manifest");

    TempDir d2;
    REQUIRE(run("levy --beta 1 --lambda 2 --mu 1 --n-max 5 --out " + d2.path.string()) == 0);
    auto lrows = lines(slurp(d2.path / "levy.csv"));
    REQUIRE(lrows.size() == 6);
    CHECK(lrows[0] == "k,D,manifest");
}

TEST_CASE("json output format") {
    TempDir d;
    REQUIRE(run("pmf --n-max 3 --format json --out " + d.path.string()) == 0);
    json doc = json::parse(slurp(d.path / "pmf.json"));
    CHECK(doc["manifest"] == "pmf-manifest.json");
    CHECK(doc["rows"].size() == 4);
}
