#include "swbesov/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "swbesov/error.hpp"

namespace swbesov::harness {

namespace {

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::stringstream ss(path);
    std::string item;
    while (std::getline(ss, item, '.')) {
        if (item.empty()) throw Error(ErrorKind::config_invariant, "empty segment in key path '" + path + "'");
        parts.push_back(item);
    }
    if (parts.empty()) throw Error(ErrorKind::config_invariant, "empty key path");
    return parts;
}

[[noreturn]] void type_error(const std::string& path, const char* want) {
    throw Error(ErrorKind::config_invariant, "key '" + path + "' must be " + want);
}

}  // namespace

Config::Config(nlohmann::json j) : j_(std::move(j)) {
    if (!j_.is_object()) throw Error(ErrorKind::config_invariant, "configuration root must be an object");
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io_failure, "cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::config_invariant, "config " + path + " is not valid JSON: " + e.what());
    }
    return Config(std::move(j));
}

void Config::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw Error(ErrorKind::config_invariant, "override '" + assignment + "' is not of the form key=value");
    const std::string key = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    nlohmann::json v = nlohmann::json::parse(raw, nullptr, false);
    if (v.is_discarded()) v = raw;
    set(key, std::move(v));
}

void Config::set(const std::string& path, nlohmann::json value) {
    auto parts = split_path(path);
    nlohmann::json* node = &j_;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        auto& next = (*node)[parts[i]];
        if (next.is_null()) next = nlohmann::json::object();
        if (!next.is_object()) throw Error(ErrorKind::config_invariant, "key '" + parts[i] + "' in '" + path + "' is not an object");
        node = &next;
    }
    (*node)[parts.back()] = std::move(value);
}

const nlohmann::json* Config::find(const std::string& path) const {
    const nlohmann::json* node = &j_;
    for (const auto& p : split_path(path)) {
        if (!node->is_object()) return nullptr;
        auto it = node->find(p);
        if (it == node->end()) return nullptr;
        node = &*it;
    }
    return node->is_null() ? nullptr : node;
}

bool Config::has(const std::string& path) const { return find(path) != nullptr; }

double Config::number(const std::string& path, double fallback) const {
    const auto* n = find(path);
    if (!n) return fallback;
    if (!n->is_number()) type_error(path, "a number");
    return n->get<double>();
}

int Config::integer(const std::string& path, int fallback) const {
    const auto* n = find(path);
    if (!n) return fallback;
    if (!n->is_number_integer()) type_error(path, "an integer");
    return n->get<int>();
}

bool Config::flag(const std::string& path, bool fallback) const {
    const auto* n = find(path);
    if (!n) return fallback;
    if (!n->is_boolean()) type_error(path, "true or false");
    return n->get<bool>();
}

std::string Config::text(const std::string& path, const std::string& fallback) const {
    const auto* n = find(path);
    if (!n) return fallback;
    if (!n->is_string()) type_error(path, "a string");
    return n->get<std::string>();
}

std::vector<double> Config::numbers(const std::string& path, const std::vector<double>& fallback) const {
    const auto* n = find(path);
    if (!n) return fallback;
    if (!n->is_array()) type_error(path, "an array of numbers");
    std::vector<double> out;
    for (const auto& v : *n) {
        if (!v.is_number()) type_error(path, "an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<int> Config::integers(const std::string& path, const std::vector<int>& fallback) const {
    const auto* n = find(path);
    if (!n) return fallback;
    if (!n->is_array()) type_error(path, "an array of integers");
    std::vector<int> out;
    for (const auto& v : *n) {
        if (!v.is_number_integer()) type_error(path, "an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string Config::scenario() const {
    const std::string s = text("scenario", "");
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
        throw Error(ErrorKind::config_invariant, "unknown scenario '" + s + "'");
    return s;
}

std::uint64_t Config::seed() const {
    const auto* n = find("seed");
    if (!n) return 1;
    if (!n->is_number_unsigned() && !(n->is_number_integer() && n->get<long long>() >= 0))
        type_error("seed", "a nonnegative integer");
    return n->get<std::uint64_t>();
}

}  // namespace swbesov::harness
