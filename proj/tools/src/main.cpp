// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: parameter/config parsing, Monte Carlo orchestration
// with worker streams, verification suite, and CSV/JSON emission of tables.
//
// Exit codes: 0 success; 2 configuration error; 3 numerical failure;
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "tstfnbp/analytics.hpp"
#include "tstfnbp/moments.hpp"
#include "tstfnbp/monte_carlo.hpp"
#include "tstfnbp/samplers.hpp"
#include "tstfnbp/verification.hpp"

#ifndef TSTFNBP_VERSION
#define TSTFNBP_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace tstfnbp;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerify = 4;

struct RunConfig {
    // Default parameter set keeps the alternating pmf series well inside the
    // double-precision cancellation budget (small lambda, mu = 1).
    ProcessParams params{0.5, 0.5, 1.0, 2.0, 1.0, 0.5};
    std::uint64_t seed = 42;
    unsigned workers = 1;
    std::size_t n_samples = 100000;
    std::vector<double> grid{1.0};
    std::string format = "csv";
    std::string out = ".";
    long n_max = 10;  // pmf / levy table length
    long k = 3;       // first-passage level
    std::vector<double> q_list{0.3, 0.5, 1.0, 1.7};  // fractional moment orders
    double s = 1.0;   // fixed earlier time for lrd
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not found: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    const std::vector<std::string> known = {"alpha", "beta",  "beta1",  "lambda1", "mu",
                                            "lambda", "seed",  "workers", "samples", "grid",
                                            "format", "out",   "n_max",  "k",       "q",
                                            "s"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ConfigError("unknown config key: " + it.key());
    }
    try {
        if (j.contains("alpha")) cfg.params.alpha = j["alpha"].get<double>();
        if (j.contains("beta")) cfg.params.beta = j["beta"].get<double>();
        if (j.contains("beta1")) cfg.params.beta1 = j["beta1"].get<double>();
        if (j.contains("lambda1")) cfg.params.lambda1 = j["lambda1"].get<double>();
        if (j.contains("mu")) cfg.params.mu = j["mu"].get<double>();
        if (j.contains("lambda")) cfg.params.lambda = j["lambda"].get<double>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("workers")) cfg.workers = j["workers"].get<unsigned>();
        if (j.contains("samples")) cfg.n_samples = j["samples"].get<std::size_t>();
        if (j.contains("grid")) cfg.grid = j["grid"].get<std::vector<double>>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("out")) cfg.out = j["out"].get<std::string>();
        if (j.contains("n_max")) cfg.n_max = j["n_max"].get<long>();
        if (j.contains("k")) cfg.k = j["k"].get<long>();
        if (j.contains("q")) cfg.q_list = j["q"].get<std::vector<double>>();
        if (j.contains("s")) cfg.s = j["s"].get<double>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config value error: ") + e.what());
    }
}

void validate_config(const RunConfig& cfg, const std::string& command) {
    cfg.params.validate();
    if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
    if (cfg.n_samples < 1) throw ConfigError("samples must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be csv or json");
    if (cfg.grid.empty()) throw ConfigError("grid must not be empty");
    if (!(cfg.grid.front() > 0))
        throw ConfigError("grid entries must be positive; offending entry: " +
                          std::to_string(cfg.grid.front()));
    for (std::size_t i = 1; i < cfg.grid.size(); ++i) {
        if (!(cfg.grid[i] > cfg.grid[i - 1]))
            throw ConfigError("grid must be strictly increasing; offending entries: " +
                              std::to_string(cfg.grid[i - 1]) + ", " +
                              std::to_string(cfg.grid[i]));
    }
    if (cfg.n_max < 0) throw ConfigError("n_max must be >= 0");
    if (cfg.k < 1) throw ConfigError("k must be >= 1");
    if (!(cfg.s > 0)) throw ConfigError("s must be positive");
    // Commands that evaluate the subordinator pdf / Levy-density series need
    // the strict lambda1 > mu^alpha condition.
    if (command == "pmf" || command == "fpt" || command == "levy") {
        if (!cfg.params.pdf_constraint_met())
            throw ConfigError("lambda1 > mu^alpha required for the " + command +
                              " command (lambda1 = " + std::to_string(cfg.params.lambda1) +
                              ", mu^alpha = " +
                              std::to_string(std::pow(cfg.params.mu, cfg.params.alpha)) + ")");
    }
    if (command == "levy" && cfg.params.beta != 1.0)
        throw ConfigError("the levy command requires beta = 1 (discrete jump measure)");
}

// ---------------------------------------------------------------------------
// Output plumbing: every table goes out as CSV (RFC-4180 quoting) or JSON,
// and every row carries a reference to the run manifest.
// ---------------------------------------------------------------------------

struct Table {
    std::string name;  // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::string command)
        : cfg_(cfg), command_(std::move(command)),
          start_(std::chrono::steady_clock::now()) {
        std::filesystem::create_directories(cfg_.out);
        manifest_name_ = command_ + "-manifest.json";
    }

    void write(const Table& t) {
        std::string file =
            t.name + (cfg_.format == "csv" ? ".csv" : ".json");
        std::ofstream out(std::filesystem::path(cfg_.out) / file);
        if (!out) throw std::runtime_error("cannot open output file: " + file);
        if (cfg_.format == "csv") {
            for (std::size_t c = 0; c < t.columns.size(); ++c)
                out << csv_quote(t.columns[c]) << ",";
            out << "manifest\r\n";
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out << csv_quote(row[c]) << ",";
                out << csv_quote(manifest_name_) << "\r\n";
            }
        } else {
            json rows = json::array();
            for (const auto& row : t.rows) {
                json r;
                for (std::size_t c = 0; c < t.columns.size(); ++c) r[t.columns[c]] = row[c];
                rows.push_back(r);
            }
            json doc{{"manifest", manifest_name_}, {"rows", rows}};
            out << doc.dump(2) << "\n";
        }
        outputs_.push_back(file);
    }

    void finish(const json& extra = json::object()) {
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                          .count();
        json m{{"command", command_},
               {"library_version", TSTFNBP_VERSION},
               {"wall_seconds", wall},
               {"outputs", outputs_},
               {"config",
                {{"alpha", cfg_.params.alpha},
                 {"beta", cfg_.params.beta},
                 {"beta1", cfg_.params.beta1},
                 {"lambda1", cfg_.params.lambda1},
                 {"mu", cfg_.params.mu},
                 {"lambda", cfg_.params.lambda},
                 {"seed", cfg_.seed},
                 {"workers", cfg_.workers},
                 {"samples", cfg_.n_samples},
                 {"grid", cfg_.grid},
                 {"format", cfg_.format},
                 {"out", cfg_.out},
                 {"n_max", cfg_.n_max},
                 {"k", cfg_.k},
                 {"q", cfg_.q_list},
                 {"s", cfg_.s}}}};
        for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
        std::ofstream out(std::filesystem::path(cfg_.out) / manifest_name_);
        out << m.dump(2) << "\n";
    }

    const std::string& manifest_name() const { return manifest_name_; }

private:
    const RunConfig& cfg_;
    std::string command_;
    std::string manifest_name_;
    std::vector<std::string> outputs_;
    std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

int cmd_simulate(const RunConfig& cfg) {
    Emitter em(cfg, "simulate");
    Table t{"simulate", {"path_id", "time", "M_value", "Q_count"}, {}};
    // One stream per path: output is identical for any worker count.
    for (std::size_t i = 0; i < cfg.n_samples; ++i) {
        RngStream rng(cfg.seed, i);
        SamplePath tmllp;
        SamplePath q = sample_tstfnbp_path(cfg.params, cfg.grid, rng, &tmllp);
        for (std::size_t g = 0; g < cfg.grid.size(); ++g)
            t.rows.push_back({std::to_string(i), num(cfg.grid[g]), num(tmllp.values[g + 1]),
                              num(q.values[g + 1])});
    }
    em.write(t);
    em.finish();
    return kExitOk;
}

int cmd_pmf(const RunConfig& cfg) {
    Emitter em(cfg, "pmf");
    Table t{"pmf", {"time", "n", "probability", "tail_bound"}, {}};
    SeriesControl ctrl;
    for (double tt : cfg.grid) {
        QuadratureMomentSource src(tt, cfg.params);
        PmfVector v = tstfnbp_pmf_vector(cfg.n_max, tt, cfg.params, ctrl, src);
        for (long n = 0; n <= cfg.n_max; ++n)
            t.rows.push_back({num(tt), std::to_string(n), num(v.probs[n]), num(v.tail_bound)});
    }
    em.write(t);
    em.finish();
    return kExitOk;
}

int cmd_moments(const RunConfig& cfg) {
    Emitter em(cfg, "moments");
    Table t{"moments", {"time", "mean", "variance", "dispersion_gap"}, {}};
    for (double tt : cfg.grid) {
        QuadratureMomentSource src(tt, cfg.params);
        t.rows.push_back({num(tt), num(tstfnbp_mean(tt, cfg.params, src)),
                          num(tstfnbp_variance(tt, cfg.params, src)),
                          num(dispersion_gap(tt, cfg.params, src))});
    }
    em.write(t);
    Table tm{"tmllp-moments", {"time", "q", "moment"}, {}};
    for (double tt : cfg.grid)
        for (double q : cfg.q_list)
            tm.rows.push_back({num(tt), num(q), num(tmllp_fractional_moment(q, tt, cfg.params))});
    em.write(tm);
    em.finish();
    return kExitOk;
}

int cmd_lrd(const RunConfig& cfg) {
    Emitter em(cfg, "lrd");
    RngStream rng(cfg.seed, 0);
    LrdEstimate e = lrd_slope(cfg.s, cfg.grid, cfg.params, rng, cfg.n_samples);
    Table t{"lrd", {"s", "slope", "std_error", "noise_exceeds_fit"}, {}};
    t.rows.push_back({num(cfg.s), num(e.slope), num(e.std_error),
                      e.noise_exceeds_fit ? "true" : "false"});
    em.write(t);
    em.finish();
    return kExitOk;
}

int cmd_fpt(const RunConfig& cfg) {
    Emitter em(cfg, "fpt");
    SeriesControl ctrl;
    Table t{"fpt", {"time", "k", "survival", "cdf", "density", "density_error"}, {}};
    for (double tt : cfg.grid) {
        double surv = first_passage(cfg.k, tt, cfg.params, ctrl, FirstPassageMode::survival);
        double cdf = first_passage(cfg.k, tt, cfg.params, ctrl, FirstPassageMode::cdf);
        double disc = 0.0;
        double dens =
            first_passage(cfg.k, tt, cfg.params, ctrl, FirstPassageMode::density, &disc);
        t.rows.push_back(
            {num(tt), std::to_string(cfg.k), num(surv), num(cdf), num(dens), num(disc)});
    }
    em.write(t);
    em.finish();
    return kExitOk;
}

int cmd_levy(const RunConfig& cfg) {
    Emitter em(cfg, "levy");
    SeriesControl ctrl;
    Table t{"levy", {"k", "D"}, {}};
    for (long k = 1; k <= std::max(cfg.n_max, 1L); ++k)
        t.rows.push_back({std::to_string(k), num(levy_measure_beta1(k, cfg.params, ctrl))});
    em.write(t);
    em.finish();
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    Emitter em(cfg, "verify");
    VerifyConfig vc{cfg.seed, cfg.workers};
    auto results = run_acceptance_suite(vc);
    bool all = true;
    json checks = json::array();
    for (const auto& r : results) {
        std::printf("[%s] %-24s (%.1fs) %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        all = all && r.passed;
        checks.push_back({{"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
    }
    std::ofstream out(std::filesystem::path(cfg.out) / "verify-report.json");
    out << json{{"all_passed", all}, {"checks", checks}, {"manifest", em.manifest_name()}}
               .dump(2)
        << "\n";
    out.close();
    em.finish(json{{"all_passed", all}});
    std::printf("%s\n", all ? "verification PASSED" : "verification FAILED");
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // Precedence: built-in defaults < config file < TSTFNBP_SEED env < flags.
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc)
            config_path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0)
            config_path = a.substr(9);
    }
    try {
        if (!config_path.empty()) load_config_file(config_path, cfg);
        if (const char* env = std::getenv("TSTFNBP_SEED")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0')
                throw ConfigError(std::string("TSTFNBP_SEED is not an integer: ") + env);
            cfg.seed = v;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    }

    CLI::App app{"Tempered space-time fractional negative binomial process toolkit"};
    app.require_subcommand(1);
    std::string ignored_config;
    app.add_option("--config", ignored_config, "JSON config file (flags override it)");
    app.add_option("--alpha", cfg.params.alpha, "stability index in (0,1)");
    app.add_option("--beta", cfg.params.beta, "fractional counting index in (0,1]");
    app.add_option("--beta1", cfg.params.beta1, "gamma subordinator shape rate");
    app.add_option("--lambda1", cfg.params.lambda1, "gamma subordinator rate");
    app.add_option("--mu", cfg.params.mu, "tempering parameter");
    app.add_option("--lambda", cfg.params.lambda, "Poisson intensity");
    app.add_option("--seed", cfg.seed, "RNG seed (beats TSTFNBP_SEED)");
    app.add_option("--workers", cfg.workers, "Monte Carlo worker streams");
    app.add_option("--samples", cfg.n_samples, "Monte Carlo sample / path count");
    app.add_option("--grid", cfg.grid, "strictly increasing evaluation times");
    app.add_option("--out", cfg.out, "output directory");
    app.add_option("--format", cfg.format, "csv or json");
    app.add_option("--n-max", cfg.n_max, "largest count (pmf) / jump size (levy)");
    app.add_option("--k", cfg.k, "first-passage level");
    app.add_option("--q", cfg.q_list, "fractional moment orders (moments)");
    app.add_option("--s", cfg.s, "fixed earlier time for lrd correlation");

    const char* names[] = {"simulate", "pmf", "moments", "lrd", "fpt", "levy", "verify"};
    const char* descs[] = {"sample TSTFNBP paths on the time grid",
                           "analytic pmf table of Q(t)",
                           "mean/variance/dispersion and TMLLP fractional moments",
                           "long-range dependence slope fit",
                           "first-passage survival/cdf/density of level k",
                           "Levy jump measure D(k) of the beta=1 process",
                           "run the full cross-verification suite"};
    // Shared flags live on the root app; let each subcommand pass them back up
    // so "tstfnbp pmf --n-max 10" parses.
    for (int i = 0; i < 7; ++i) app.add_subcommand(names[i], descs[i])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    std::string command = app.get_subcommands().front()->get_name();

    try {
        validate_config(cfg, command);
        if (command == "simulate") return cmd_simulate(cfg);
        if (command == "pmf") return cmd_pmf(cfg);
        if (command == "moments") return cmd_moments(cfg);
        if (command == "lrd") return cmd_lrd(cfg);
        if (command == "fpt") return cmd_fpt(cfg);
        if (command == "levy") return cmd_levy(cfg);
        if (command == "verify") return cmd_verify(cfg);
        std::fprintf(stderr, "unknown command: %s\n", command.c_str());
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const ConstraintError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        // Truncation, cancellation, quadrature, or rejection-budget failures.
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumeric;
    }
}
