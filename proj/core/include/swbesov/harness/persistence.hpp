#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "swbesov/harness/artifacts.hpp"

namespace swbesov::harness {

// <dir>/<name>_<k>.swf per state plus <dir>/<name>_index.json with times, grid and parameters.
// Returns the written paths relative to dir.
std::vector<std::string> write_series(const std::string& dir, const FieldSeries& series, const nlohmann::json& parameters);
FieldSeries read_series(const std::string& dir, const std::string& name);

}  // namespace swbesov::harness
