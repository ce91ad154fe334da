#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swbesov/error.hpp"
#include "swbesov/harness/artifacts.hpp"
#include "swbesov/harness/config.hpp"
#include "swbesov/harness/scenarios.hpp"
#include "swbesov/parallel.hpp"

namespace fs = std::filesystem;
using namespace swbesov;
using namespace swbesov::harness;

namespace {

constexpr int kPass = 0, kFail = 1, kInvalid = 2;

Config load_with_overrides(const std::string& path, const std::vector<std::string>& sets) {
    Config cfg = Config::load(path);
    for (const auto& s : sets) cfg.set(s);
    return cfg;
}

void print_result(const ScenarioResult& r) {
    for (const auto& c : r.checks)
        std::cout << (c.pass ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    for (const auto& [k, v] : r.metrics) std::cout << "  " << k << " = " << format_number(v) << "\n";
    std::cout << r.scenario << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
}

int cmd_run(const std::string& path, const std::vector<std::string>& sets, bool deterministic, std::string out) {
    Config cfg = load_with_overrides(path, sets);
    set_deterministic(deterministic);
    validate_config(cfg);
    if (out.empty()) out = cfg.text("output_dir", "out/" + cfg.scenario());
    const auto t0 = std::chrono::steady_clock::now();
    const ScenarioResult r = run_scenario(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto manifest = emit_artifacts(r, cfg, out, deterministic, secs);
    print_result(r);
    std::cout << "artifacts: " << out << " (" << manifest.size() << " files)\n";
    return r.pass ? kPass : kFail;
}

std::vector<int> parse_resolutions(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(ErrorKind::config_invariant, "bad resolution '" + tok + "'");
        }
    }
    return out;
}

int cmd_sweep(const std::string& path, const std::vector<std::string>& sets, const std::string& resolutions,
              bool deterministic, std::string out) {
    Config cfg = load_with_overrides(path, sets);
    set_deterministic(deterministic);
    const auto res = parse_resolutions(resolutions);
    if (res.size() < 2) throw Error(ErrorKind::config_invariant, "violated at least two resolutions");
    for (int n : res) {
        Config c = cfg;
        c.set("grid.points", n);
        validate_config(c);
    }
    if (out.empty()) out = cfg.text("output_dir", "out/" + cfg.scenario()) + "_sweep";
    const auto t0 = std::chrono::steady_clock::now();
    const ConvergenceTable table = compare_resolutions(cfg, res);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ScenarioResult r;
    r.scenario = cfg.scenario() + "_sweep";
    r.tables.push_back(table.as_table());
    for (std::size_t m = 0; m < table.metrics.size(); ++m) {
        std::cout << "  " << table.metrics[m] << ":";
        for (const auto& row : table.values) std::cout << " " << format_number(row[m]);
        std::cout << "\n";
    }
    emit_artifacts(r, cfg, out, deterministic, secs);
    std::cout << "artifacts: " << out << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swbesov: Littlewood-Paley diagnostics and shallow-water experiments"};
    app.require_subcommand(1);

    std::string config, out, resolutions = "64,128,256";
    std::vector<std::string> sets;
    bool deterministic = false;

    auto* run = app.add_subcommand("run", "run one scenario and write artifacts");
    run->add_option("config", config, "scenario JSON file")->required()->check(CLI::ExistingFile);
    run->add_option("--set", sets, "override a key, e.g. physics.kappa=0.1")->allow_extra_args(false);
    run->add_flag("--deterministic", deterministic, "single thread, no wall-clock fields in artifacts");
    run->add_option("--out", out, "output directory");

    auto* sweep = app.add_subcommand("sweep", "rerun a scenario across grid resolutions");
    sweep->add_option("config", config, "scenario JSON file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--resolutions", resolutions, "comma separated points per dimension");
    sweep->add_option("--set", sets, "override a key")->allow_extra_args(false);
    sweep->add_flag("--deterministic", deterministic);
    sweep->add_option("--out", out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInvalid;
    }

    try {
        if (*run) return cmd_run(config, sets, deterministic, out);
        return cmd_sweep(config, sets, resolutions, deterministic, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool invalid = e.kind() == ErrorKind::config_invariant || e.kind() == ErrorKind::validation;
        return invalid ? kInvalid : kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
