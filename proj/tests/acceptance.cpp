// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: swbesov_acceptance [criterion numbers...]
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "swbesov/error.hpp"
#include "swbesov/experiments.hpp"
#include "swbesov/harness/config.hpp"
#include "swbesov/harness/scenarios.hpp"
#include "swbesov/laws.hpp"
#include "swbesov/partition.hpp"

namespace fs = std::filesystem;
using namespace swbesov;
using namespace swbesov::harness;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void add(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "FAILED ") + what;
    }
};

Config load(const std::string& name) { return Config::load((fs::path(SWBESOV_CONFIG_DIR) / (name + ".json")).string()); }

// Copies the named checks (all when empty) into the outcome.
void take(Outcome& out, const ScenarioResult& r, const std::vector<std::string>& names = {}) {
    bool any = false;
    for (const auto& ch : r.checks) {
        bool wanted = names.empty();
        for (const auto& n : names) wanted = wanted || ch.name == n || ch.name.ends_with("." + n);
        if (!wanted) continue;
        any = true;
        out.add(ch.pass, ch.name + (ch.detail.empty() ? "" : " (" + ch.detail + ")"));
    }
    if (!any) out.add(false, r.scenario + ": no matching checks");
}

Outcome scenario(const std::string& name, const std::vector<std::string>& checks = {},
                 const std::function<void(Config&)>& tweak = {}) {
    Outcome o;
    Config c = load(name);
    if (tweak) tweak(c);
    take(o, run_scenario(c), checks);
    return o;
}

// Independent oracle: with one active block l of mass m,
// lhs(t) = w m (1 - e^{-cν̃ g t})/(cν̃) solves for t in closed form.
Outcome local_time_oracle() {
    Outcome o;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    auto g = make_grid(2, 128, two_pi);
    auto P = build_partition(g);
    auto laws = PhysicalLaws::shallow_water(g, 0.1);
    const double nu = std::min(laws.mu(1.0), laws.lambda(1.0) + 2.0 * laws.mu(1.0));
    struct Case {
        std::array<int, 2> k;
        int l;
        double amp;
    };
    double worst = 0.0;
    for (const auto& cs : {Case{{1, 1}, 0, 3.0}, Case{{6, 0}, 2, 1.0}, Case{{12, 0}, 3, 0.5}}) {
        for (auto reading : {ExponentReading::two_pow, ExponentReading::e_pow}) {
            Field u = Field::sample(g, 2, [&](const std::array<double, 3>& x, int comp) {
                return comp == 0 ? cs.amp * std::cos(cs.k[0] * x[0] + cs.k[1] * x[1]) : 0.0;
            });
            LocalTimeOptions lo;
            lo.reading = reading;
            const double m = l2_norm(u);
            const double U0 = std::pow(2.0, cs.l) * m;
            const double thr = lo.eps * nu * nu / (nu + U0);
            const double gq = reading == ExponentReading::two_pow ? std::pow(4.0, cs.l) : std::exp(2.0 * cs.l);
            const double t = -std::log1p(-lo.c * nu * thr / m) / (lo.c * nu * gq);
            const auto rep = local_time_bound(u, laws, P, lo);
            worst = std::max(worst, std::abs(rep.T_lb - std::min(lo.eta, t)));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "closed-form oracle max |ΔT_lb| %.3g < 1e-10", worst);
    o.add(worst < 1e-10, buf);
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
        {"partition of unity", [] { return scenario("partition_check", {"partition_of_unity", "runtime"}); }},
        {"block reconstruction", [] { return scenario("partition_check", {"block_reconstruction"}); }},
        {"derivative norm equivalence",
         [] { return scenario("norm_suite", {"derivative_ratio_range", "resolution_stability"}); }},
        {"linear damping", [] { return scenario("linear_damping"); }},
        {"smoothing", [] { return scenario("linear_smoothing", {}, [](Config& c) { c.set("check.s", nlohmann::json::array({1.0})); }); }},
        {"heat estimate", [] { return scenario("heat_estimate"); }},
        {"small-data global run", [] { return scenario("nonlinear_global"); }},
        {"linearization consistency",
         [] {
             return scenario("convergence_sweep", {"linearization_order"},
                             [](Config& c) { c.set("sweep.parts", nlohmann::json::array({"linearization"})); });
         }},
        {"stability and determinism", [] { return scenario("stability"); }},
        {"local time bound",
         [] {
             Outcome o = local_time_oracle();
             Outcome run = scenario("nonlinear_local");
             o.add(run.pass, run.detail);
             return o;
         }},
        {"Friedrichs and resolution convergence",
         [] {
             return scenario("convergence_sweep", {"friedrichs_monotone", "resolution_monotone"}, [](Config& c) {
                 c.set("sweep.parts", nlohmann::json::array({"friedrichs", "resolution"}));
             });
         }},
        {"scaling invariance", [] { return scenario("scaling_check"); }},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failures = 0;
    const auto& list = criteria();
    for (std::size_t i = 0; i < list.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(n)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = list[i].second();
        } catch (const std::exception& e) {
            o.add(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  %s [%.1f s] %s\n", n, o.pass ? "PASS" : "FAIL", list[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
