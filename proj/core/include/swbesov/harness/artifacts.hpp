#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swbesov/field.hpp"
#include "swbesov/harness/config.hpp"

namespace swbesov::harness {

struct Table {
    std::string name;  // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Snapshots of one field along a run.
struct FieldSeries {
    std::string name;
    std::vector<double> times;
    std::vector<Field> states;
};

struct ScenarioResult {
    std::string scenario;
    bool pass = true;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<Check> checks;
    std::vector<Table> tables;
    std::vector<FieldSeries> series;

    void metric(const std::string& name, double v) { metrics.emplace_back(name, v); }
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
        pass = pass && ok;
    }
    double metric_value(const std::string& name) const;
};

struct ManifestEntry {
    std::string path;  // relative to the output directory
    std::string sha256;
    std::uintmax_t bytes = 0;
};

std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::string& path);
// Shortest round-trip decimal form; the CSV number format.
std::string format_number(double v);

// Writes <table>.csv files, summary.txt, report.json, snapshots with their index, and
// manifest.json listing every other file with its checksum. Deterministic mode omits
// wall-clock fields so reruns are byte-identical.
std::vector<ManifestEntry> emit_artifacts(const ScenarioResult& result, const Config& config,
                                          const std::string& output_dir, bool deterministic, double runtime_seconds);

}  // namespace swbesov::harness
