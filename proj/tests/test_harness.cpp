#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "swbesov/error.hpp"
#include "swbesov/harness/artifacts.hpp"
#include "swbesov/harness/config.hpp"
#include "swbesov/harness/persistence.hpp"
#include "swbesov/harness/scenarios.hpp"
#include "swbesov/parallel.hpp"
#include "swbesov/random_fields.hpp"

namespace fs = std::filesystem;
using namespace swbesov;
using namespace swbesov::harness;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("swbesov_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Config small_partition() {
    Config c(nlohmann::json::parse(R"({"scenario": "partition_check", "seed": 3,
        "check": {"grids": [[1, 64], [2, 32]]}, "corpus": {"count": 4}})"));
    return c;
}

std::string violation_text(const Config& c) {
    try {
        validate_config(c);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::config_invariant);
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Config, DottedAccessAndOverrides) {
    Config c(nlohmann::json::parse(R"({"scenario": "stability", "physics": {"kappa": 0.1}})"));
    EXPECT_DOUBLE_EQ(c.number("physics.kappa", 0.0), 0.1);
    EXPECT_DOUBLE_EQ(c.number("physics.missing", 7.0), 7.0);
    c.set("physics.kappa=0.25");
    c.set("run.T=3");
    c.set("physics.model=polytropic");
    c.set("sweep.levels=[2,4]");
    EXPECT_DOUBLE_EQ(c.number("physics.kappa", 0.0), 0.25);
    EXPECT_EQ(c.integer("run.T", 0), 3);
    EXPECT_EQ(c.text("physics.model", ""), "polytropic");
    EXPECT_EQ(c.integers("sweep.levels", {}), (std::vector<int>{2, 4}));
    EXPECT_TRUE(c.has("run.T"));
    EXPECT_FALSE(c.has("run.dt"));
    EXPECT_EQ(c.seed(), 1u);
}

TEST(Config, TypeErrorsAreReported) {
    Config c(nlohmann::json::parse(R"({"scenario": "stability", "run": {"T": "long"}})"));
    EXPECT_THROW(c.number("run.T", 1.0), Error);
    EXPECT_THROW(c.set("no_equals_sign"), Error);
    Config bad(nlohmann::json::parse(R"({"scenario": "unknown"})"));
    EXPECT_THROW(bad.scenario(), Error);
}

TEST(Config, ShippedConfigsValidate) {
    for (const auto& name : scenario_names()) {
        const auto path = fs::path(SWBESOV_CONFIG_DIR) / (name + ".json");
        ASSERT_TRUE(fs::exists(path)) << path;
        Config c = Config::load(path.string());
        EXPECT_EQ(c.scenario(), name);
        EXPECT_NO_THROW(validate_config(c)) << name;
    }
}

TEST(Validation, CapillaryGapIsNamed) {
    Config c = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "linear_damping.json").string());
    c.set("linear.kappa_bars=[2.0]");
    EXPECT_NE(violation_text(c).find("δ̄−κ̄‖φ̂‖_{L^∞}≥c>0"), std::string::npos);
}

TEST(Validation, PhysicsAndSchemeInequalitiesAreNamed) {
    Config c = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "nonlinear_global.json").string());
    Config a = c;
    a.set("run.dt=-1");
    EXPECT_NE(violation_text(a).find("dt>0"), std::string::npos);
    Config b = c;
    b.set("physics.model=polytropic");
    b.set("physics.mu=-1");
    EXPECT_NE(violation_text(b).find("violated"), std::string::npos);
    Config d = c;
    d.set("physics.rho_range=[1.5, 0.5]");
    EXPECT_NE(violation_text(d).find("ρ_lo<ρ_hi"), std::string::npos);
    Config e = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "linear_damping.json").string());
    e.set("lyapunov.K1=5");
    EXPECT_NE(violation_text(e).find("K₁<"), std::string::npos);
    Config f = c;
    f.set("grid.points=100");
    EXPECT_FALSE(violation_text(f).empty());
}

TEST(Artifacts, CsvDeterministicAcrossRuns) {
    set_deterministic(true);
    const auto a = scratch("det_a"), b = scratch("det_b");
    Config c = small_partition();
    auto ra = run_scenario(c), rb = run_scenario(c);
    // runtime differs between runs; it lives in metrics, not in the CSVs
    emit_artifacts(ra, c, a.string(), true, 1.0);
    emit_artifacts(rb, c, b.string(), true, 2.0);
    EXPECT_EQ(slurp(a / "partition.csv"), slurp(b / "partition.csv"));
    EXPECT_EQ(sha256_file((a / "partition.csv").string()), sha256_file((b / "partition.csv").string()));
    auto rep = nlohmann::json::parse(slurp(a / "report.json"));
    EXPECT_FALSE(rep["provenance"].contains("runtime_seconds"));
    EXPECT_EQ(rep["provenance"]["config_hash"], sha256_hex(c.canonical()));
    EXPECT_EQ(rep["provenance"]["seed"], 3);
    set_deterministic(false);
}

TEST(Artifacts, EmptyResultWritesSummaryAndManifest) {
    const auto dir = scratch("empty");
    ScenarioResult r;
    r.scenario = "partition_check";
    Config c = small_partition();
    auto m = emit_artifacts(r, c, dir.string(), true, 0.0);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0].path, "summary.txt");
    EXPECT_EQ(m[1].path, "report.json");
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    auto mj = nlohmann::json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(mj.size(), 2u);
    EXPECT_EQ(mj[0]["sha256"], sha256_file((dir / "summary.txt").string()));
}

TEST(Artifacts, Sha256KnownAnswer) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Artifacts, NumberFormatRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(Artifacts, DampingTableSchema) {
    Config c = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "linear_damping.json").string());
    c.set("damping.dims=[1]");
    c.set("grid.points=64");
    c.set("corpus.count=2");
    c.set("damping.samples=40");
    auto r = run_scenario(c);
    ASSERT_FALSE(r.tables.empty());
    const auto& t = r.tables.front();
    EXPECT_EQ(t.name, "damping");
    for (const char* col : {"l", "f0", "rate_fit", "rate_bound", "pass"})
        EXPECT_NE(std::find(t.columns.begin(), t.columns.end(), col), t.columns.end()) << col;
    EXPECT_GT(r.metric_value("alpha_fit"), 0.0);
}

TEST(Persistence, SeriesRoundTrip) {
    const auto dir = scratch("series");
    auto g = make_grid(2, 16, 2.0);
    FieldSeries s{"u", {0.0, 0.5}, {random_field(g, 2, 1, {.band = 4}), random_field(g, 2, 2, {.band = 4})}};
    auto files = write_series(dir.string(), s, {{"note", "test"}});
    EXPECT_EQ(files.size(), 3u);
    auto back = read_series(dir.string(), "u");
    ASSERT_EQ(back.states.size(), 2u);
    EXPECT_EQ(back.times, s.times);
    EXPECT_LT(sup_norm(back.states[1] - s.states[1]), 1e-15);
}

TEST(Sweep, NeedsTwoResolutions) {
    Config c = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "heat_estimate.json").string());
    EXPECT_THROW(compare_resolutions(c, {64}), Error);
}

TEST(Sweep, HeatSingleModeIsResolutionIndependent) {
    Config c = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "heat_estimate.json").string());
    c.set("corpus.count=2");
    c.set("corpus.band=8");
    auto table = compare_resolutions(c, {64, 128, 256});
    auto it = std::find(table.metrics.begin(), table.metrics.end(), "single_mode_error");
    ASSERT_NE(it, table.metrics.end());
    const auto m = static_cast<std::size_t>(it - table.metrics.begin());
    for (const auto& row : table.values) EXPECT_LT(row[m], 1e-12);
    EXPECT_EQ(table.as_table().rows.size(), 3u);
}

TEST(Scenarios, SmallNonlinearRunPasses) {
    Config c = Config::load((fs::path(SWBESOV_CONFIG_DIR) / "nonlinear_global.json").string());
    c.set("grid.points=32");
    c.set("run.T=0.5");
    c.set("output.snapshots=false");
    auto r = run_scenario(c);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.tables.size(), 2u);  // one energy table per κ
}
