#include "swbesov/harness/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "swbesov/damping.hpp"
#include "swbesov/diagnostics.hpp"
#include "swbesov/error.hpp"
#include "swbesov/experiments.hpp"
#include "swbesov/inequalities.hpp"
#include "swbesov/model_problems.hpp"
#include "swbesov/parallel.hpp"
#include "swbesov/random_fields.hpp"

namespace swbesov::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) { return format_number(v); }

GridPtr make_grid_checked(int dims, int points, double period) { return make_grid(dims, points, period); }

GridPtr grid_from(const Config& c, int points_override = 0) {
    const int dims = c.integer("grid.dims", 2);
    const int points = points_override > 0 ? points_override : c.integer("grid.points", 128);
    return make_grid_checked(dims, points, c.number("grid.period", 2.0 * std::numbers::pi));
}

KernelPtr kernel_from(const Config& c, const std::string& prefix, const GridPtr& g) {
    const std::string kind = c.text(prefix + ".kernel", "gaussian");
    if (kind == "gaussian") return gaussian_kernel(g, c.number(prefix + ".sigma", 0.0));
    if (kind == "dirac") return dirac_kernel(g);
    throw Error(ErrorKind::config_invariant, prefix + ".kernel must be gaussian or dirac");
}

LinearParams linear_from(const Config& c, const GridPtr& g, double kappa_bar) {
    LinearParams p;
    p.mu_bar = c.number("linear.mu_bar", 0.5);
    p.lambda_bar = c.number("linear.lambda_bar", 0.0);
    p.delta_bar = c.number("linear.delta_bar", 1.0);
    p.kappa_bar = kappa_bar;
    p.kappa_reg = c.number("linear.kappa_reg", 0.0);
    p.kernel = kernel_from(c, "linear", g);
    p.validate(c.number("linear.min_gap", 1e-3));
    return p;
}

std::vector<double> kappa_bars(const Config& c) {
    if (c.has("linear.kappa_bars")) return c.numbers("linear.kappa_bars", {});
    return {c.number("linear.kappa_bar", 0.0)};
}

PhysicalLaws laws_from(const Config& c, const GridPtr& g, double kappa) {
    const std::string model = c.text("physics.model", "shallow_water");
    PhysicalLaws laws;
    if (model == "shallow_water") {
        laws = PhysicalLaws::shallow_water(g, kappa);
    } else if (model == "polytropic") {
        laws = PhysicalLaws::polytropic(g, c.number("physics.a", 1.0), c.number("physics.gamma", 1.4),
                                        c.number("physics.mu", 1.0), c.number("physics.lambda", 0.0), kappa);
        laws.rho_bar = c.number("physics.rho_bar", 1.0);
    } else {
        throw Error(ErrorKind::config_invariant, "physics.model must be shallow_water or polytropic");
    }
    laws.kernel = kernel_from(c, "physics", g);
    const auto range = c.numbers("physics.rho_range", {0.5 * laws.rho_bar, 1.5 * laws.rho_bar});
    if (range.size() != 2 || !(range[0] > 0.0) || !(range[1] > range[0]))
        throw Error(ErrorKind::config_invariant, "violated 0<ρ_lo<ρ_hi for physics.rho_range");
    laws.validate(g->dims(), range[0], range[1], c.number("physics.min_gap", 1e-3));
    return laws;
}

std::vector<double> kappas(const Config& c) {
    if (c.has("physics.kappas")) return c.numbers("physics.kappas", {});
    return {c.number("physics.kappa", 0.0)};
}

CorpusSpec corpus_from(const Config& c, const std::string& prefix = "corpus") {
    CorpusSpec s;
    s.band = c.integer(prefix + ".band", 0);
    s.gamma = c.number(prefix + ".gamma", 1.0);
    s.min_mode = c.integer(prefix + ".min_mode", 1);
    if (s.band < 0 || s.min_mode < 0) throw Error(ErrorKind::config_invariant, "violated band≥0 and min_mode≥0");
    return s;
}

EvolveOptions evolve_from(const Config& c, double T_default, double dt_default) {
    EvolveOptions o;
    o.T = c.number("run.T", T_default);
    o.dt = c.number("run.dt", dt_default);
    o.record_every = c.integer("run.record_every", 10);
    o.cfl = c.number("run.cfl", 0.5);
    o.kappa_reg = c.number("run.kappa_reg", 0.0);
    if (!(o.T > 0.0)) throw Error(ErrorKind::config_invariant, "violated T>0");
    if (!(o.dt > 0.0)) throw Error(ErrorKind::config_invariant, "violated dt>0");
    if (o.record_every < 1) throw Error(ErrorKind::config_invariant, "violated record_every≥1");
    if (!(o.kappa_reg >= 0.0)) throw Error(ErrorKind::config_invariant, "violated κ_reg≥0");
    return o;
}

// Seeded initial data: q scalar, u vector, band-limited so the same data fit any grid
// that resolves the band. data.energy fixes E(0); otherwise sup-norm amplitudes.
std::pair<Field, Field> nonlinear_data(const Config& c, const GridPtr& g) {
    CorpusSpec s = corpus_from(c, "data");
    if (s.band == 0) s.band = 6;
    const auto seed = c.seed();
    Field q = random_field(g, 1, derive_seed(seed, 1), s);
    Field u = random_field(g, g->dims(), derive_seed(seed, 2), s);
    if (c.has("data.q_amplitude") || c.has("data.u_amplitude")) {
        const double qa = c.number("data.q_amplitude", 0.0), ua = c.number("data.u_amplitude", 0.0);
        q *= qa / sup_norm(q);
        u *= ua / sup_norm(u);
        return {q, u};
    }
    const double target = c.number("data.energy", 1e-2);
    if (!(target >= 0.0)) throw Error(ErrorKind::config_invariant, "violated data.energy≥0");
    const auto P = build_partition(g);
    const double e = initial_energy(q, u, P);
    q *= target / e;
    u *= target / e;
    return {q, u};
}

template <class Fn>
auto validated(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::config_invariant) throw;
        throw Error(ErrorKind::config_invariant, e.what());
    }
}

// ---------------------------------------------------------------- lp_besov

struct GridCase {
    int dims, points;
};

std::vector<GridCase> grid_cases(const Config& c) {
    std::vector<GridCase> out;
    if (c.has("check.grids")) {
        for (const auto& e : c.json().at("check").at("grids")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::config_invariant, "check.grids entries are [dims, points]");
            out.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    } else {
        out = {{1, 256}, {2, 256}, {3, 64}};
    }
    return out;
}

ScenarioResult partition_check(const Config& c) {
    ScenarioResult r;
    const auto t0 = Clock::now();
    const auto cases = grid_cases(c);
    const int count = c.integer("corpus.count", 20);
    const double tol_p = c.number("tolerances.partition", 1e-12);
    const double tol_r = c.number("tolerances.reconstruction", 1e-10);
    Table t{"partition", {"dims", "points", "l_min", "l_max", "unity_deviation", "max_reconstruction_error"}, {}};
    double worst_p = 0.0, worst_r = 0.0;
    const CorpusSpec cs = corpus_from(c);
    for (const auto& gc : cases) {
        auto g = make_grid_checked(gc.dims, gc.points, c.number("grid.period", 2.0 * std::numbers::pi));
        auto P = build_partition(g);
        const double dev = partition_unity_deviation(P);
        auto corpus = random_corpus(g, 1, c.seed(), static_cast<std::size_t>(count), cs);
        std::vector<double> err(corpus.size());
        parallel_for(corpus.size(), [&](std::size_t i) { err[i] = block_reconstruction_error(corpus[i], P); });
        const double e = err.empty() ? 0.0 : *std::max_element(err.begin(), err.end());
        worst_p = std::max(worst_p, dev);
        worst_r = std::max(worst_r, e);
        t.rows.push_back({double(gc.dims), double(gc.points), double(P.l_min()), double(P.l_max()), dev, e});
    }
    const double secs = seconds_since(t0);
    r.metric("max_unity_deviation", worst_p);
    r.metric("max_reconstruction_error", worst_r);
    r.metric("runtime_seconds", secs);
    r.check("partition_of_unity", worst_p < tol_p, "max deviation " + fmt(worst_p) + " < " + fmt(tol_p));
    r.check("block_reconstruction", worst_r < tol_r, "max relative error " + fmt(worst_r) + " < " + fmt(tol_r));
    const double limit = c.number("limits.runtime_seconds", 10.0);
    r.check("runtime", secs < limit, fmt(secs) + " s < " + fmt(limit) + " s");
    r.tables.push_back(std::move(t));
    return r;
}

ScenarioResult norm_suite(const Config& c) {
    ScenarioResult r;
    const int dims = c.integer("grid.dims", 2);
    const auto res = c.integers("check.resolutions", {128, 256});
    const int count = c.integer("corpus.count", 50);
    CorpusSpec cs = corpus_from(c);
    if (cs.band == 0) cs.band = 40;
    std::vector<double> svals = c.numbers("check.s", {0.0, 1.0, 0.5 * dims});
    std::sort(svals.begin(), svals.end());
    svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
    const double lo = c.number("tolerances.ratio_lo", 1.0 / 3.0), hi = c.number("tolerances.ratio_hi", 3.0);
    const double stab = c.number("tolerances.stability", 0.1);
    Table t{"norm_equivalence", {"points", "s", "min_ratio", "max_ratio"}, {}};
    // [s][resolution] -> (min, max)
    std::map<double, std::vector<std::pair<double, double>>> by_s;
    bool in_range = true;
    for (int n : res) {
        auto g = make_grid_checked(dims, n, c.number("grid.period", 2.0 * std::numbers::pi));
        if (cs.band > g->dealias_cutoff())
            throw Error(ErrorKind::config_invariant, "violated corpus.band≤dealias cutoff on the coarsest grid");
        auto P = build_partition(g);
        auto corpus = random_corpus(g, 1, c.seed(), static_cast<std::size_t>(count), cs);
        for (double s : svals) {
            std::vector<double> ratio(corpus.size());
            parallel_for(corpus.size(), [&](std::size_t i) { ratio[i] = derivative_norm_ratio(corpus[i], s, P); });
            const double mn = *std::min_element(ratio.begin(), ratio.end());
            const double mx = *std::max_element(ratio.begin(), ratio.end());
            by_s[s].emplace_back(mn, mx);
            in_range = in_range && mn >= lo && mx <= hi;
            t.rows.push_back({double(n), s, mn, mx});
        }
    }
    double worst_drift = 0.0;
    for (const auto& [s, v] : by_s)
        for (std::size_t k = 1; k < v.size(); ++k) {
            worst_drift = std::max(worst_drift, std::abs(v[k].second - v[0].second) / v[0].second);
            worst_drift = std::max(worst_drift, std::abs(v[k].first - v[0].first) / v[0].first);
        }
    for (const auto& [s, v] : by_s) {
        r.metric("ratio_min_s" + fmt(s), v.front().first);
        r.metric("ratio_max_s" + fmt(s), v.front().second);
    }
    r.metric("corpus_constant_drift", worst_drift);
    r.check("derivative_ratio_range", in_range, "all ratios within [" + fmt(lo) + ", " + fmt(hi) + "]");
    r.check("resolution_stability", worst_drift <= stab, "corpus constants drift " + fmt(worst_drift) + " ≤ " + fmt(stab));

    // product laws and logarithmic interpolation on the first resolution
    if (c.flag("check.product_laws", true)) {
        auto g = make_grid_checked(dims, res.front(), c.number("grid.period", 2.0 * std::numbers::pi));
        auto P = build_partition(g);
        auto a = random_corpus(g, 1, derive_seed(c.seed(), 101), 5, cs);
        auto b = random_corpus(g, 1, derive_seed(c.seed(), 202), 5, cs);
        ProductLawParams prm;
        prm.c_max = c.number("tolerances.product_c_max", 100.0);
        Table pt{"product_laws", {"law", "pair", "lhs", "rhs", "ratio"}, {}};
        bool ok = true;
        double worst = 0.0;
        for (int law = 0; law < 3; ++law)
            for (std::size_t i = 0; i < a.size(); ++i) {
                auto rep = verify_product_laws(a[i], b[i], static_cast<ProductLaw>(law), prm, P);
                ok = ok && rep.pass;
                worst = std::max(worst, rep.ratio);
                pt.rows.push_back({double(law), double(i), rep.lhs, rep.rhs, rep.ratio});
            }
        r.metric("product_law_worst_ratio", worst);
        r.check("product_laws", ok, "worst ratio " + fmt(worst) + " ≤ " + fmt(prm.c_max));
        r.tables.push_back(std::move(pt));
    }
    r.tables.push_back(std::move(t));
    return r;
}

// ---------------------------------------------------------------- linear_sw

ScenarioResult linear_damping(const Config& c) {
    ScenarioResult r;
    const auto t0 = Clock::now();
    const auto dims_list = c.integers("damping.dims", {1, 2});
    const int points = c.integer("grid.points", 256);
    const int count = c.integer("corpus.count", 20);
    DampingOptions o;
    o.T = c.number("damping.T", 5.0);
    o.samples = c.integer("damping.samples", 200);
    o.fit_from = c.number("damping.fit_from", 0.5);
    o.slack = c.number("tolerances.monotone_slack", 1e-9);
    o.oracle_tol = c.number("tolerances.oracle", 0.15);
    const CorpusSpec cs = corpus_from(c);
    Table t{"damping",
            {"dims", "kappa_bar", "state", "l", "f0", "rate_fit", "rate_bound", "rate_oracle", "rate_guaranteed", "max_increase",
             "pass"},
            {}};
    double alpha = kInf, worst_oracle = 0.0, worst_increase = 0.0;
    bool monotone = true, oracle_ok = true;
    struct Item {
        std::vector<double> raw;  // per block rate_fit, scale
        DampingReport rep;
    };
    for (int dims : dims_list) {
        auto g = make_grid_checked(dims, points, c.number("grid.period", 2.0 * std::numbers::pi));
        auto P = build_partition(g);
        for (double kb : kappa_bars(c)) {
            const LinearParams lp = linear_from(c, g, kb);
            LyapunovConfig cfg = LyapunovConfig::defaults(lp, P, c.integer("lyapunov.l0", 0));
            if (c.has("lyapunov.K1")) cfg.K1 = c.number("lyapunov.K1", cfg.K1);
            if (c.has("lyapunov.A")) {
                cfg.A = c.number("lyapunov.A", cfg.A);
                cfg.a = 1.0 / (lp.nu_bar() * cfg.A);
            }
            cfg.validate(lp, P);
            auto qs = random_corpus(g, 1, derive_seed(c.seed(), 10 + dims), static_cast<std::size_t>(count), cs);
            auto us = random_corpus(g, dims, derive_seed(c.seed(), 20 + dims), static_cast<std::size_t>(count), cs);
            std::vector<DampingReport> reps(qs.size());
            parallel_for(qs.size(), [&](std::size_t i) {
                reps[i] = verify_damping(AcousticState::from_velocity(qs[i], us[i]), lp, cfg, P, o);
            });
            for (std::size_t i = 0; i < reps.size(); ++i) {
                const auto& rep = reps[i];
                worst_oracle = std::max(worst_oracle, rep.worst_oracle_error);
                for (const auto& b : rep.blocks) {
                    monotone = monotone && b.monotone;
                    worst_increase = std::max(worst_increase, b.max_increase);
                    if (b.active) {
                        alpha = std::min(alpha, b.rate_fit / std::min(std::ldexp(1.0, 2 * b.l), 1.0));
                        oracle_ok = oracle_ok && b.oracle_ok;
                    }
                    t.rows.push_back({double(dims), kb, double(i), double(b.l), b.f0, b.rate_fit, b.rate_bound, b.rate_oracle,
                                      b.rate_guaranteed, b.max_increase, b.pass ? 1.0 : 0.0});
                }
            }
        }
    }
    if (!std::isfinite(alpha)) alpha = 0.0;
    // single α across every state: recheck the bound with it
    bool bound_ok = alpha > 0.0;
    for (auto& row : t.rows) {
        const double l = row[3];
        row[6] = alpha * std::min(std::pow(2.0, 2.0 * l), 1.0);
        if (row[4] > 0.0 && std::isfinite(row[5]) && row[5] < row[6]) bound_ok = false;
    }
    const double secs = seconds_since(t0);
    r.metric("alpha_fit", alpha);
    r.metric("worst_oracle_error", worst_oracle);
    r.metric("max_increase", worst_increase);
    r.metric("runtime_seconds", secs);
    r.check("monotone", monotone, "largest increase " + fmt(worst_increase));
    r.check("alpha_positive", alpha > 0.0, "alpha_fit " + fmt(alpha));
    r.check("rate_bound", bound_ok, "rate_l ≥ alpha_fit·min(2^{2l},1) on active blocks");
    r.check("oracle_match", oracle_ok, "worst relative error " + fmt(worst_oracle) + " ≤ " + fmt(o.oracle_tol));
    const double limit = c.number("limits.runtime_seconds", 60.0);
    r.check("runtime", secs < limit, fmt(secs) + " s < " + fmt(limit) + " s");
    r.tables.push_back(std::move(t));
    return r;
}

ScenarioResult linear_smoothing(const Config& c) {
    ScenarioResult r;
    const int dims = c.integer("grid.dims", 2);
    const auto res = c.integers("check.resolutions", {128, 256});
    const int count = c.integer("corpus.count", 10);
    CorpusSpec cs = corpus_from(c);
    if (cs.band == 0) cs.band = 40;
    const double s = c.number("smoothing.s", 0.5 * dims);
    const double T = c.number("smoothing.T", 10.0);
    const double c_max = c.number("tolerances.c_max", 100.0);
    const double stab = c.number("tolerances.stability", 0.1);
    Table t{"smoothing", {"points", "kappa_bar", "state", "lhs", "rhs", "ratio"}, {}};
    std::vector<double> cobs;
    for (int n : res) {
        auto g = make_grid_checked(dims, n, c.number("grid.period", 2.0 * std::numbers::pi));
        if (cs.band > g->dealias_cutoff()) throw Error(ErrorKind::config_invariant, "violated corpus.band≤dealias cutoff");
        auto P = build_partition(g);
        double worst = 0.0;
        for (double kb : kappa_bars(c)) {
            const LinearParams lp = linear_from(c, g, kb);
            const LyapunovConfig cfg = LyapunovConfig::defaults(lp, P, c.integer("lyapunov.l0", 0));
            auto qs = random_corpus(g, 1, derive_seed(c.seed(), 31), static_cast<std::size_t>(count), cs);
            auto us = random_corpus(g, dims, derive_seed(c.seed(), 32), static_cast<std::size_t>(count), cs);
            LinearEvolveOptions lo;
            lo.T = T;
            lo.sample_times = geometric_times(T, c.number("smoothing.t_first", 1e-6), c.number("smoothing.ratio", 1.05));
            std::vector<SmoothingReport> reps(qs.size());
            parallel_for(qs.size(), [&](std::size_t i) {
                auto traj = evolve_linear(AcousticState::from_velocity(qs[i], us[i]), lp, lo);
                reps[i] = verify_smoothing(traj, s, cfg, P, c_max);
            });
            for (std::size_t i = 0; i < reps.size(); ++i) {
                worst = std::max(worst, reps[i].ratio);
                t.rows.push_back({double(n), kb, double(i), reps[i].lhs, reps[i].rhs, reps[i].ratio});
            }
        }
        cobs.push_back(worst);
        r.metric("C_obs_" + std::to_string(n), worst);
    }
    double drift = 0.0;
    for (std::size_t k = 1; k < cobs.size(); ++k) drift = std::max(drift, std::abs(cobs[k] - cobs[0]) / cobs[0]);
    r.metric("C_obs_drift", drift);
    const double cmax_obs = *std::max_element(cobs.begin(), cobs.end());
    r.check("bounded", cmax_obs <= c_max, "C_obs " + fmt(cmax_obs) + " ≤ " + fmt(c_max));
    r.check("resolution_stability", drift <= stab, "C_obs drift " + fmt(drift) + " ≤ " + fmt(stab));
    r.tables.push_back(std::move(t));
    return r;
}

ScenarioResult transport_estimate(const Config& c) {
    ScenarioResult r;
    auto g = grid_from(c);
    auto P = build_partition(g);
    const int N = g->dims();
    CorpusSpec cs = corpus_from(c);
    if (cs.band == 0) cs.band = 8;
    const double amp = c.number("transport.velocity_amplitude", 1.0);
    const std::string kind = c.text("transport.field", "cellular");
    if (kind != "cellular" && kind != "translation")
        throw Error(ErrorKind::config_invariant, "transport.field must be cellular or translation");
    Field u = Field::sample(g, N, [&](const std::array<double, 3>& x, int comp) {
        if (kind == "translation") return amp;
        const double k = 2.0 * std::numbers::pi / g->period();
        // divergence-free: (sin ky, sin kx) in 2D, a shifted analogue otherwise
        const int other = (comp + 1) % N;
        return N == 1 ? amp : amp * std::sin(k * x[static_cast<std::size_t>(other)]);
    });
    TimeField uf = [u](double) { return u; };
    TransportOptions o;
    o.T = c.number("run.T", 1.0);
    o.dt = c.number("run.dt", 1e-2);
    o.c_max = c.number("tolerances.c_max", 100.0);
    o.store = false;
    const auto svals = c.numbers("transport.s", {0.0, 0.5, 1.0});
    const double p = c.number("transport.p", 2.0);
    Table t{"transport", {"s", "p", "lhs", "rhs", "ratio", "constant", "in_range"}, {}};
    auto qs = random_corpus(g, 1, derive_seed(c.seed(), 41), static_cast<std::size_t>(c.integer("corpus.count", 3)), cs);
    bool ok = true;
    double worst_c = 0.0;
    for (double s : svals)
        for (const auto& q0 : qs) {
            auto [traj, rep] = solve_transport(q0, uf, {}, BesovSpec::plain(s, p), P, o);
            ok = ok && rep.pass && rep.in_range;
            worst_c = std::max(worst_c, rep.constant);
            t.rows.push_back({s, p, rep.lhs, rep.rhs, rep.ratio, rep.constant, rep.in_range ? 1.0 : 0.0});
        }
    r.metric("worst_constant", worst_c);
    r.check("transport_estimate", ok, "fitted C ≤ " + fmt(o.c_max) + " inside the admissible range of s");
    r.tables.push_back(std::move(t));
    return r;
}

ScenarioResult heat_estimate(const Config& c) {
    ScenarioResult r;
    const int dims = c.integer("grid.dims", 2);
    const double mu = c.number("heat.mu", 1.0);
    const double T = c.number("heat.T", 10.0);
    const auto res = c.integers("check.resolutions", {128, 256});
    const double tol_exact = c.number("tolerances.exact", 1e-12);
    const double c_max = c.number("tolerances.c_max", 100.0);
    const double stab = c.number("tolerances.stability", 0.1);
    if (!(mu > 0.0)) throw Error(ErrorKind::config_invariant, "violated μ>0");

    // single mode against e^{-μ|ξ|²t}
    double worst_exact = 0.0;
    {
        auto g = make_grid_checked(dims, res.front(), c.number("grid.period", 2.0 * std::numbers::pi));
        auto P = build_partition(g);
        std::array<int, 3> k{3, dims > 1 ? 1 : 0, 0};
        Field u0 = cosine_mode(g, k);
        HeatOptions o;
        o.T = T;
        o.sample_times = {0.01, 0.1, 1.0, T};
        auto [traj, rep] = solve_heat(u0, {}, mu, BesovSpec::plain(0.0), P, o);
        const double kk = 2.0 * std::numbers::pi / g->period();
        const double xi2 = kk * kk * (k[0] * k[0] + k[1] * k[1]);
        for (std::size_t i = 0; i < traj.size(); ++i) {
            Field exact = std::exp(-mu * xi2 * traj.times[i]) * u0;
            const double ref = l2_norm(exact);
            if (ref > 0.0) worst_exact = std::max(worst_exact, l2_norm(traj.states[i] - exact) / ref);
        }
    }
    r.metric("single_mode_error", worst_exact);
    r.check("single_mode_exact", worst_exact <= tol_exact, "relative error " + fmt(worst_exact) + " ≤ " + fmt(tol_exact));

    CorpusSpec cs = corpus_from(c);
    if (cs.band == 0) cs.band = 40;
    const double s = c.number("heat.s", 0.0);
    Table t{"heat_smoothing", {"points", "state", "lhs", "rhs", "ratio"}, {}};
    std::vector<double> worst;
    for (int n : res) {
        auto g = make_grid_checked(dims, n, c.number("grid.period", 2.0 * std::numbers::pi));
        if (cs.band > g->dealias_cutoff()) throw Error(ErrorKind::config_invariant, "violated corpus.band≤dealias cutoff");
        auto P = build_partition(g);
        auto us = random_corpus(g, 1, derive_seed(c.seed(), 51), static_cast<std::size_t>(c.integer("corpus.count", 10)), cs);
        HeatOptions o;
        o.T = T;
        o.sample_times = geometric_times(T, c.number("heat.t_first", 1e-6), c.number("heat.ratio", 1.05));
        o.store = false;
        o.c_max = c_max;
        std::vector<EstimateReport> reps(us.size());
        parallel_for(us.size(), [&](std::size_t i) { reps[i] = solve_heat(us[i], {}, mu, BesovSpec::plain(s), P, o).second; });
        double w = 0.0;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            w = std::max(w, reps[i].ratio);
            t.rows.push_back({double(n), double(i), reps[i].lhs, reps[i].rhs, reps[i].ratio});
        }
        worst.push_back(w);
        r.metric("smoothing_ratio_" + std::to_string(n), w);
    }
    double drift = 0.0;
    for (std::size_t k = 1; k < worst.size(); ++k) drift = std::max(drift, std::abs(worst[k] - worst[0]) / worst[0]);
    r.metric("smoothing_ratio_drift", drift);
    const double wmax = *std::max_element(worst.begin(), worst.end());
    r.check("smoothing_bounded", wmax <= c_max, "ratio " + fmt(wmax) + " ≤ " + fmt(c_max));
    r.check("resolution_stability", drift <= stab, "drift " + fmt(drift) + " ≤ " + fmt(stab));
    r.tables.push_back(std::move(t));
    return r;
}

ScenarioResult variable_heat(const Config& c) {
    ScenarioResult r;
    auto g = grid_from(c, c.has("grid.points") ? 0 : 64);
    auto P = build_partition(g);
    const int N = g->dims();
    const double amp = c.number("variable_heat.a_amplitude", 0.3);
    if (!(amp >= 0.0 && amp < 1.0)) throw Error(ErrorKind::config_invariant, "violated 0≤a_amplitude<1 (a bounded below)");
    Field a = Field::sample(g, 1, [&](const std::array<double, 3>& x, int) {
        const double k = 2.0 * std::numbers::pi / g->period();
        double v = std::sin(k * x[0]);
        if (N > 1) v *= std::cos(k * x[1]);
        return 1.0 + amp * v;
    });
    TimeField af = [a](double) { return a; };
    CorpusSpec cs = corpus_from(c);
    if (cs.band == 0) cs.band = 8;
    Field u0 = random_field(g, N, derive_seed(c.seed(), 61), cs);
    VariableHeatOptions o;
    o.T = c.number("run.T", 0.5);
    o.dt = c.number("run.dt", 1e-3);
    // sampled extremes hit the nominal bounds up to rounding
    o.a_lower = (1.0 - amp) * (1.0 - 1e-12);
    o.a_upper = (1.0 + amp) * (1.0 + 1e-12);
    o.tau = c.number("variable_heat.tau", 0.0);
    o.c_max = c.number("tolerances.c_max", 100.0);
    o.store = false;
    auto [traj, rep] = solve_heat_variable(u0, {}, af, c.number("variable_heat.mu_bar", 1.0),
                                           c.number("variable_heat.lambda_bar", 0.0), P, o);
    r.metric("ratio", rep.estimate.ratio);
    r.metric("a_min", rep.a_min);
    r.metric("a_max", rep.a_max);
    r.metric("dissipation_ratio_min", rep.energy_rate_ratio_min);
    r.metric("dissipation_ratio_max", rep.energy_rate_ratio_max);
    r.check("estimate", rep.estimate.pass, "ratio " + fmt(rep.estimate.ratio) + " ≤ " + fmt(o.c_max));
    r.check("energy_decreasing", rep.energy_decreasing);
    r.check("dissipation_comparable", rep.energy_rate_ratio_min >= o.a_lower * (1.0 - 1e-9) &&
                                          rep.energy_rate_ratio_max <= o.a_upper * (1.0 + 1e-9),
            "D_a/D_1 in [" + fmt(rep.energy_rate_ratio_min) + ", " + fmt(rep.energy_rate_ratio_max) + "]");
    Table t{"variable_heat", {"lhs", "rhs", "ratio", "a_min", "a_max", "dissipation_ratio_min", "dissipation_ratio_max"}, {}};
    t.rows.push_back({rep.estimate.lhs, rep.estimate.rhs, rep.estimate.ratio, rep.a_min, rep.a_max, rep.energy_rate_ratio_min,
                      rep.energy_rate_ratio_max});
    r.tables.push_back(std::move(t));
    return r;
}

// ---------------------------------------------------------------- nonlinear_sw

ScenarioResult nonlinear_global(const Config& c) {
    ScenarioResult r;
    const auto t0 = Clock::now();
    auto g = grid_from(c);
    auto P = build_partition(g);
    auto [q0, u0] = nonlinear_data(c, g);
    const auto level = make_friedrichs(g, c.integer("run.friedrichs_n", 0));
    GlobalBoundOptions o;
    o.evolve = evolve_from(c, 50.0, 0.02);
    o.evolve.store = false;
    o.margin = c.number("tolerances.margin", 10.0);
    o.eps0 = c.number("tolerances.eps0", kInf);
    o.mass_tolerance = c.number("tolerances.mass_drift", 1e-8);
    o.energy.e0_u_in_critical = c.text("energy.e0_u_space", "subcritical") == "critical";
    const int every = std::max(1, c.integer("output.energy_every", 10));
    for (double kappa : kappas(c)) {
        const PhysicalLaws laws = laws_from(c, g, kappa);
        const auto tk = Clock::now();
        const BoundReport rep = global_bound_experiment(q0, u0, laws, level, P, o);
        const std::string tag = "kappa" + fmt(kappa);
        r.metric(tag + ".E0", rep.E0);
        r.metric(tag + ".sup_ratio", rep.sup_ratio);
        r.metric(tag + ".mass_drift", rep.mass_drift);
        r.metric(tag + ".density_min", rep.density_min);
        r.metric(tag + ".density_max", rep.density_max);
        r.metric(tag + ".final_time", rep.final_time);
        r.metric(tag + ".first_violation_time", rep.first_violation_time);
        r.metric(tag + ".runtime_seconds", seconds_since(tk));
        r.check(tag + ".no_vacuum_breach", !rep.halted, rep.halted ? "halted: " + rep.halt_reason : "");
        r.check(tag + ".mass_conservation", rep.mass_drift < o.mass_tolerance, "drift " + fmt(rep.mass_drift));
        r.check(tag + ".energy_bound", rep.sup_ratio <= o.margin, "sup E/E0 " + fmt(rep.sup_ratio) + " ≤ " + fmt(o.margin));
        Table t{"energy_" + tag, {"t", "q_sup", "q_int", "u_sup", "u_int", "E", "ratio"}, {}};
        const auto& e = rep.energy;
        for (std::size_t i = 0; i < e.times.size(); ++i)
            if (i % static_cast<std::size_t>(every) == 0 || i + 1 == e.times.size()) {
                const auto& s = e.series[i];
                t.rows.push_back({e.times[i], s.q_sup, s.q_int, s.u_sup, s.u_int, s.total(),
                                  rep.E0 > 0.0 ? s.total() / rep.E0 : 0.0});
            }
        r.tables.push_back(std::move(t));
    }
    const double secs = seconds_since(t0);
    r.metric("runtime_seconds", secs);
    const double limit = c.number("limits.runtime_seconds", 600.0);
    r.check("runtime", secs < limit, fmt(secs) + " s < " + fmt(limit) + " s");
    if (c.flag("output.snapshots", true)) {
        auto [qp, up] = project_initial(q0, u0, level);
        r.series.push_back({"q0", {0.0}, {qp}});
        r.series.push_back({"u0", {0.0}, {up}});
    }
    return r;
}

LocalTimeOptions local_options(const Config& c) {
    LocalTimeOptions o;
    o.eps = c.number("local.eps", 0.1);
    o.c = c.number("local.c", 1.0);
    o.eta = c.number("local.eta", 1.0);
    o.p = c.number("local.p", 2.0);
    const std::string reading = c.text("local.reading", "two_pow");
    if (reading == "two_pow")
        o.reading = ExponentReading::two_pow;
    else if (reading == "e_pow")
        o.reading = ExponentReading::e_pow;
    else
        throw Error(ErrorKind::config_invariant, "local.reading must be two_pow or e_pow");
    if (!(o.eps > 0.0) || !(o.c > 0.0) || !(o.eta > 0.0) || !(o.p >= 1.0))
        throw Error(ErrorKind::config_invariant, "violated ε>0, c>0, η>0, p≥1");
    return o;
}

ScenarioResult nonlinear_local(const Config& c) {
    ScenarioResult r;
    auto g = grid_from(c);
    auto P = build_partition(g);
    Config dc = c;
    if (!c.has("data.q_amplitude") && !c.has("data.energy")) dc.set("data.q_amplitude", 1e-3);
    if (!c.has("data.u_amplitude") && !c.has("data.energy")) dc.set("data.u_amplitude", 2.0);
    auto [q0, u0] = nonlinear_data(dc, g);
    const PhysicalLaws laws = laws_from(c, g, c.number("physics.kappa", 0.1));
    const auto level = make_friedrichs(g, c.integer("run.friedrichs_n", 0));
    auto [qp, up] = project_initial(q0, u0, level);
    LocalTimeOptions lo = local_options(c);
    const auto rep = local_time_bound(up.without_mean(), laws, P, lo);
    LocalTimeOptions alt = lo;
    alt.reading = lo.reading == ExponentReading::two_pow ? ExponentReading::e_pow : ExponentReading::two_pow;
    const auto rep_alt = local_time_bound(up.without_mean(), laws, P, alt);
    r.metric("T_lb", rep.T_lb);
    r.metric("t_star", rep.t_star);
    r.metric("threshold", rep.threshold);
    r.metric("U0", rep.U0);
    r.metric("nu_tilde", rep.nu_tilde);
    r.metric("T_lb_other_reading", rep_alt.T_lb);
    r.metric("bisection_iterations", rep.iterations);

    EvolveOptions eo = evolve_from(c, rep.T_lb, 0.02);
    eo.T = rep.T_lb;
    const double umax = sup_norm(up);
    if (umax > 0.0) eo.dt = std::min(eo.dt, c.number("local.cfl_target", 0.25) * g->spacing() / umax);
    eo.store = false;
    const auto res = evolve_sw(qp, up, laws, level, eo);
    r.metric("steps", res.steps);
    r.metric("density_min", res.density_min);
    r.metric("density_max", res.density_max);
    r.metric("cfl_max", res.cfl_max);
    r.check("T_lb_positive", rep.T_lb > 0.0, "T_lb " + fmt(rep.T_lb));
    r.check("stable_on_T_lb", !res.halted, res.halted ? "halted: " + res.halt_reason + " at " + fmt(res.halt_time) : "");
    return r;
}

ScenarioResult stability(const Config& c) {
    ScenarioResult r;
    auto g = grid_from(c);
    auto P = build_partition(g);
    auto [q0, u0] = nonlinear_data(c, g);
    const PhysicalLaws laws = laws_from(c, g, c.number("physics.kappa", 0.1));
    const auto level = make_friedrichs(g, c.integer("run.friedrichs_n", 0));
    StabilityOptions o;
    o.evolve = evolve_from(c, 1.0, 0.02);
    o.amplification_bound = c.number("tolerances.amplification", 100.0);
    o.alpha = c.number("stability.alpha", 0.5);
    o.perturb_density = c.text("stability.target", "velocity") == "density";
    const double delta = c.number("stability.delta", 1e-6);
    CorpusSpec cs = corpus_from(c, "data");
    if (cs.band == 0) cs.band = 6;
    Field w = random_field(g, o.perturb_density ? 1 : g->dims(), derive_seed(c.seed(), 77), cs);
    w *= 1.0 / besov_norm(w, BesovSpec::plain(o.perturb_density ? 0.0 : -1.0), P);
    auto [qp, up] = project_initial(q0, u0, level);
    const auto rep = stability_experiment(qp, up, w, delta, laws, level, P, o);
    r.metric("initial_separation", rep.initial_separation);
    r.metric("final_X", rep.X.empty() ? 0.0 : rep.X.back());
    r.metric("amplification", rep.amplification);
    r.metric("smallness_gate", rep.gate_value);
    r.check("smallness_gate", rep.gate_ok, "‖q‖_{L̃^∞(B^1_{N,1})} = " + fmt(rep.gate_value) + " ≤ " + fmt(o.alpha));
    r.check("amplification", rep.pass, "X(T)/X(0) = " + fmt(rep.amplification) + " ≤ " + fmt(o.amplification_bound));
    if (c.flag("stability.determinism", true)) {
        const auto rep0 = stability_experiment(qp, up, w, 0.0, laws, level, P, o);
        double xmax = 0.0;
        for (double x : rep0.X) xmax = std::max(xmax, x);
        for (double x : rep0.dq_sup) xmax = std::max(xmax, x);
        r.metric("zero_perturbation_X", xmax);
        r.check("determinism", xmax == 0.0, "X ≡ " + fmt(xmax) + " for δ = 0");
    }
    Table t{"stability", {"t", "X", "dq_sup"}, {}};
    for (std::size_t i = 0; i < rep.times.size(); ++i) t.rows.push_back({rep.times[i], rep.X[i], rep.dq_sup[i]});
    r.tables.push_back(std::move(t));
    return r;
}

ScenarioResult scaling_check(const Config& c) {
    ScenarioResult r;
    auto g = grid_from(c);
    Config dc = c;
    if (!c.has("data.energy") && !c.has("data.q_amplitude")) dc.set("data.energy", 5e-2);
    auto [q0, u0] = nonlinear_data(dc, g);
    const PhysicalLaws laws = laws_from(c, g, c.number("physics.kappa", 0.1));
    EvolveOptions o = evolve_from(c, 2.0, 0.02);
    const double lambda = c.number("scaling.lambda", 2.0);
    const double tol = c.number("tolerances.scaling", 0.05);
    const auto lv = make_friedrichs(g, 0);
    auto [qp, up] = project_initial(q0, u0, lv);
    const auto rep = scaling_experiment(qp, up, laws, lambda, o, tol);
    r.metric("max_rel_q", rep.max_rel_q);
    r.metric("max_rel_u", rep.max_rel_u);
    r.check("no_halt", !rep.halted);
    r.check("critical_norms_match", rep.max_rel_q <= tol && rep.max_rel_u <= tol,
            "q " + fmt(rep.max_rel_q) + ", u " + fmt(rep.max_rel_u) + " ≤ " + fmt(tol));
    return r;
}

ScenarioResult convergence_sweep(const Config& c) {
    ScenarioResult r;
    std::vector<std::string> parts;
    if (c.has("sweep.parts")) {
        for (const auto& p : c.json().at("sweep").at("parts")) parts.push_back(p.get<std::string>());
    } else {
        parts = {"friedrichs", "resolution", "linearization"};
    }
    auto has = [&](const char* p) { return std::find(parts.begin(), parts.end(), p) != parts.end(); };
    for (const auto& p : parts)
        if (p != "friedrichs" && p != "resolution" && p != "linearization")
            throw Error(ErrorKind::config_invariant, "unknown sweep part '" + p + "'");
    const int dims = c.integer("grid.dims", 2);
    const double period = c.number("grid.period", 2.0 * std::numbers::pi);
    const double kappa = c.number("physics.kappa", 0.1);

    // smooth data with sup-norm amplitudes fixed on the coarsest grid
    auto coarse_data = [&](const GridPtr& g) {
        Config dc = c;
        if (!c.has("data.band")) dc.set("data.band", 4);
        if (!c.has("data.q_amplitude") && !c.has("data.energy")) dc.set("data.q_amplitude", 0.2);
        if (!c.has("data.u_amplitude") && !c.has("data.energy")) dc.set("data.u_amplitude", 0.5);
        return nonlinear_data(dc, g);
    };
    EvolveOptions o = evolve_from(c, 1.0, 0.01);

    if (has("friedrichs")) {
        auto g = make_grid_checked(dims, c.integer("sweep.friedrichs_points", 64), period);
        auto [q0, u0] = coarse_data(g);
        const auto levels = c.integers("sweep.levels", {4, 8, 16});
        const auto rep = friedrichs_convergence(q0, u0, laws_from(c, g, kappa), levels, o);
        Table t{"friedrichs", {"n", "n_next", "difference"}, {}};
        for (std::size_t k = 0; k < rep.differences.size(); ++k) {
            t.rows.push_back({double(levels[k]), double(levels[k + 1]), rep.differences[k]});
            r.metric("friedrichs_diff_" + std::to_string(levels[k]) + "_" + std::to_string(levels[k + 1]), rep.differences[k]);
        }
        r.check("friedrichs_monotone", rep.monotone, "successive differences decrease");
        r.tables.push_back(std::move(t));
    }
    if (has("resolution")) {
        const auto pts = c.integers("sweep.resolutions", {64, 128, 256});
        std::vector<GridPtr> grids;
        for (int n : pts) grids.push_back(make_grid_checked(dims, n, period));
        auto [q0, u0] = coarse_data(grids.front());
        std::vector<Field> qs, us;
        for (const auto& g : grids) {
            qs.push_back(resample(q0, g));
            us.push_back(resample(u0, g));
        }
        const auto rep = resolution_convergence(grids, qs, us, [&](const GridPtr& g) { return laws_from(c, g, kappa); }, o);
        Table t{"resolution", {"points", "points_next", "difference"}, {}};
        for (std::size_t k = 0; k < rep.differences.size(); ++k) {
            t.rows.push_back({double(pts[k]), double(pts[k + 1]), rep.differences[k]});
            r.metric("resolution_diff_" + std::to_string(pts[k]) + "_" + std::to_string(pts[k + 1]), rep.differences[k]);
        }
        r.check("resolution_monotone", rep.monotone, "successive differences decrease");
        r.tables.push_back(std::move(t));
    }
    if (has("linearization")) {
        auto g = make_grid_checked(dims, c.integer("sweep.linearization_points", 128), period);
        Config dc = c;
        dc.set("data.energy", 1.0);
        if (!c.has("data.band")) dc.set("data.band", 6);
        auto [q0, u0] = nonlinear_data(dc, g);
        EvolveOptions lo = evolve_from(c, 2.0, 0.02);
        if (!c.has("run.T")) lo.T = 2.0;
        if (!c.has("run.dt")) lo.dt = 0.02;
        const auto amps = c.numbers("sweep.amplitudes", {1e-2, 5e-3, 2.5e-3});
        const double min_order = c.number("tolerances.min_order", 1.9);
        const auto rep = linearization_experiment(q0, u0, amps, laws_from(c, g, kappa), lo, min_order);
        Table t{"linearization", {"amplitude", "deviation", "relative"}, {}};
        for (std::size_t k = 0; k < amps.size(); ++k) t.rows.push_back({amps[k], rep.deviation[k], rep.relative[k]});
        r.metric("linearization_min_order", rep.min_order);
        r.check("linearization_order", rep.pass, "measured order " + fmt(rep.min_order) + " ≥ " + fmt(min_order));
        r.tables.push_back(std::move(t));
    }
    return r;
}

using Runner = std::function<ScenarioResult(const Config&)>;

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> m{
        {"partition_check", partition_check}, {"norm_suite", norm_suite},
        {"linear_damping", linear_damping},   {"linear_smoothing", linear_smoothing},
        {"transport_estimate", transport_estimate}, {"heat_estimate", heat_estimate},
        {"variable_heat", variable_heat},     {"nonlinear_global", nonlinear_global},
        {"nonlinear_local", nonlinear_local}, {"stability", stability},
        {"scaling_check", scaling_check},     {"convergence_sweep", convergence_sweep}};
    return m;
}

}  // namespace

void validate_config(const Config& cfg) {
    validated([&] {
        const std::string sc = cfg.scenario();
        cfg.seed();
        // grids and physics that every scenario touches are built once here
        const bool multi_grid = sc == "partition_check";
        if (!multi_grid) {
            const int points = cfg.integer("grid.points", sc == "linear_damping" ? 256 : 128);
            auto g = make_grid_checked(cfg.integer("grid.dims", 2), points, cfg.number("grid.period", 2.0 * std::numbers::pi));
            auto P = build_partition(g);
            if (sc == "linear_damping" || sc == "linear_smoothing") {
                for (double kb : kappa_bars(cfg)) {
                    const LinearParams lp = linear_from(cfg, g, kb);
                    LyapunovConfig ly = LyapunovConfig::defaults(lp, P, cfg.integer("lyapunov.l0", 0));
                    if (cfg.has("lyapunov.K1")) ly.K1 = cfg.number("lyapunov.K1", ly.K1);
                    if (cfg.has("lyapunov.A")) {
                        ly.A = cfg.number("lyapunov.A", ly.A);
                        ly.a = 1.0 / (lp.nu_bar() * ly.A);
                    }
                    ly.validate(lp, P);
                }
            }
            if (sc == "nonlinear_global" || sc == "nonlinear_local" || sc == "stability" || sc == "scaling_check" ||
                sc == "convergence_sweep") {
                const auto ks = sc == "nonlinear_global" ? kappas(cfg) : std::vector<double>{cfg.number("physics.kappa", 0.1)};
                for (double k : ks) laws_from(cfg, g, k);
                evolve_from(cfg, 1.0, 0.02);
                if (cfg.integer("run.friedrichs_n", 0) < 0) throw Error(ErrorKind::config_invariant, "violated friedrichs_n≥0");
            }
            if (sc == "nonlinear_local") local_options(cfg);
        } else {
            for (const auto& gc : grid_cases(cfg)) make_grid_checked(gc.dims, gc.points, cfg.number("grid.period", 2.0 * std::numbers::pi));
        }
        corpus_from(cfg);
        return 0;
    });
}

ScenarioResult run_scenario(const Config& cfg) {
    validate_config(cfg);
    const std::string sc = cfg.scenario();
    ScenarioResult r = runners().at(sc)(cfg);
    r.scenario = sc;
    return r;
}

Table ConvergenceTable::as_table() const {
    Table t{"convergence", {"points"}, {}};
    for (const auto& m : metrics) {
        t.columns.push_back(m);
        t.columns.push_back(m + "_diff");
        t.columns.push_back(m + "_ratio");
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < resolutions.size(); ++k) {
        std::vector<double> row{double(resolutions[k])};
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            row.push_back(values[k][m]);
            row.push_back(k > 0 ? differences[k - 1][m] : nan);
            row.push_back(k > 1 ? ratios[k - 2][m] : nan);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

ConvergenceTable compare_resolutions(const Config& cfg, const std::vector<int>& resolutions) {
    if (resolutions.size() < 2) throw Error(ErrorKind::invalid_params, "compare_resolutions needs at least two resolutions");
    ConvergenceTable table;
    table.resolutions = resolutions;
    std::vector<std::map<std::string, double>> runs;
    for (int n : resolutions) {
        Config c = cfg;
        c.set("grid.points", n);
        c.set("check.resolutions", nlohmann::json::array({n}));  // multi-resolution scenarios run one grid each
        ScenarioResult r = run_scenario(c);
        runs.emplace_back(r.metrics.begin(), r.metrics.end());
        if (table.metrics.empty())
            for (const auto& [k, v] : r.metrics)
                if (k.find("runtime") == std::string::npos) table.metrics.push_back(k);
    }
    // names tagged with the resolution only exist in one run
    std::erase_if(table.metrics, [&](const std::string& m) {
        return std::any_of(runs.begin(), runs.end(), [&](const auto& run) { return !run.count(m); });
    });
    for (const auto& run : runs) {
        std::vector<double> row;
        for (const auto& m : table.metrics) row.push_back(run.at(m));
        table.values.push_back(std::move(row));
    }
    for (std::size_t k = 0; k + 1 < table.values.size(); ++k) {
        std::vector<double> d;
        for (std::size_t m = 0; m < table.metrics.size(); ++m) d.push_back(std::abs(table.values[k + 1][m] - table.values[k][m]));
        table.differences.push_back(std::move(d));
    }
    for (std::size_t k = 0; k + 1 < table.differences.size(); ++k) {
        std::vector<double> q;
        for (std::size_t m = 0; m < table.metrics.size(); ++m) {
            const double a = table.differences[k][m], b = table.differences[k + 1][m];
            q.push_back(a > 0.0 ? b / a : (b == 0.0 ? 0.0 : kInf));
        }
        table.ratios.push_back(std::move(q));
    }
    return table;
}

}  // namespace swbesov::harness
