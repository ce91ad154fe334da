#include "swbesov/harness/artifacts.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "swbesov/error.hpp"
#include "swbesov/harness/persistence.hpp"

#ifndef SWBESOV_VERSION
#define SWBESOV_VERSION "unknown"
#endif

namespace fs = std::filesystem;

namespace swbesov::harness {

double ScenarioResult::metric_value(const std::string& name) const {
    for (const auto& [k, v] : metrics)
        if (k == name) return v;
    throw Error(ErrorKind::invalid_params, "no metric " + name);
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorKind::io_failure, "sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io_failure, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return sha256_hex(ss.str());
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw Error(ErrorKind::io_failure, "number formatting failed");
    return std::string(buf, end);
}

namespace {

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error(ErrorKind::io_failure, "cannot write " + p.string());
    out << s;
    if (!out) throw Error(ErrorKind::io_failure, "write failed for " + p.string());
}

nlohmann::json number_json(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

std::string csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << "\n";
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw Error(ErrorKind::invalid_params, "row width does not match the schema of " + t.name);
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
        os << "\n";
    }
    return os.str();
}

std::string summary(const ScenarioResult& r, const Config& cfg) {
    std::ostringstream os;
    os << "scenario: " << r.scenario << "\n";
    os << "result:   " << (r.pass ? "PASS" : "FAIL") << "\n";
    os << "seed:     " << cfg.seed() << "\n\n";
    if (!r.checks.empty()) {
        os << "checks\n";
        for (const auto& c : r.checks)
            os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        os << "\n";
    }
    if (!r.metrics.empty()) {
        os << "metrics\n";
        for (const auto& [k, v] : r.metrics) os << "  " << std::left << std::setw(36) << k << " " << format_number(v) << "\n";
    }
    return os.str();
}

}  // namespace

std::vector<ManifestEntry> emit_artifacts(const ScenarioResult& result, const Config& config,
                                          const std::string& output_dir, bool deterministic, double runtime_seconds) {
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec) throw Error(ErrorKind::io_failure, "cannot create " + output_dir + ": " + ec.message());
    const fs::path root(output_dir);
    std::vector<std::string> files;

    for (const auto& t : result.tables) {
        write_text(root / (t.name + ".csv"), csv(t));
        files.push_back(t.name + ".csv");
    }
    write_text(root / "summary.txt", summary(result, config));
    files.push_back("summary.txt");

    if (!result.series.empty()) {
        nlohmann::json params = config.json();
        for (const auto& s : result.series)
            for (auto& f : write_series((root / "snapshots").string(), s, params)) files.push_back("snapshots/" + f);
    }

    nlohmann::json rep;
    rep["scenario"] = result.scenario;
    rep["pass"] = result.pass;
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [k, v] : result.metrics) metrics[k] = number_json(v);
    rep["metrics"] = metrics;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : result.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    rep["checks"] = checks;
    nlohmann::json prov;
    prov["config_hash"] = sha256_hex(config.canonical());
    prov["config"] = config.json();
    prov["version"] = SWBESOV_VERSION;
    prov["seed"] = config.seed();
    prov["deterministic"] = deterministic;
    if (!deterministic) prov["runtime_seconds"] = runtime_seconds;
    rep["provenance"] = prov;
    write_text(root / "report.json", rep.dump(2) + "\n");
    files.push_back("report.json");

    std::vector<ManifestEntry> manifest;
    nlohmann::json mj = nlohmann::json::array();
    for (const auto& f : files) {
        ManifestEntry e;
        e.path = f;
        e.sha256 = sha256_file((root / f).string());
        e.bytes = fs::file_size(root / f);
        mj.push_back({{"path", e.path}, {"sha256", e.sha256}, {"bytes", e.bytes}});
        manifest.push_back(e);
    }
    write_text(root / "manifest.json", mj.dump(2) + "\n");
    return manifest;
}

}  // namespace swbesov::harness
