#include "swbesov/harness/persistence.hpp"

#include <filesystem>
#include <fstream>

#include "swbesov/error.hpp"
#include "swbesov/snapshot.hpp"

namespace fs = std::filesystem;

namespace swbesov::harness {

std::vector<std::string> write_series(const std::string& dir, const FieldSeries& series, const nlohmann::json& parameters) {
    if (series.times.size() != series.states.size())
        throw Error(ErrorKind::invalid_params, "series times and states differ in length");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::io_failure, "cannot create " + dir + ": " + ec.message());
    std::vector<std::string> written;
    nlohmann::json index;
    index["name"] = series.name;
    index["times"] = series.times;
    index["parameters"] = parameters;
    nlohmann::json files = nlohmann::json::array();
    for (std::size_t k = 0; k < series.states.size(); ++k) {
        const std::string f = series.name + "_" + std::to_string(k) + ".swf";
        write_snapshot((fs::path(dir) / f).string(), series.states[k]);
        files.push_back(f);
        written.push_back(f);
    }
    index["files"] = files;
    if (!series.states.empty()) {
        const Grid& g = series.states.front().grid();
        index["grid"] = {{"dims", g.dims()}, {"points_per_dim", g.points_per_dim()}, {"period", g.period()}};
        index["components"] = series.states.front().components();
    }
    const std::string idx = series.name + "_index.json";
    std::ofstream out(fs::path(dir) / idx);
    if (!out) throw Error(ErrorKind::io_failure, "cannot write index in " + dir);
    out << index.dump(2) << "\n";
    written.push_back(idx);
    return written;
}

FieldSeries read_series(const std::string& dir, const std::string& name) {
    std::ifstream in(fs::path(dir) / (name + "_index.json"));
    if (!in) throw Error(ErrorKind::io_failure, "missing index for series " + name);
    nlohmann::json index;
    try {
        in >> index;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::io_failure, std::string("corrupt index: ") + e.what());
    }
    FieldSeries s;
    s.name = name;
    s.times = index.at("times").get<std::vector<double>>();
    GridPtr grid;
    for (const auto& f : index.at("files")) {
        Field fld = read_snapshot((fs::path(dir) / f.get<std::string>()).string(), grid);
        grid = fld.grid_ptr();
        s.states.push_back(std::move(fld));
    }
    if (s.states.size() != s.times.size()) throw Error(ErrorKind::io_failure, "index and snapshot count differ");
    return s;
}

}  // namespace swbesov::harness
