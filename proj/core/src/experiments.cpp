#include "swbesov/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swbesov/error.hpp"
#include "swbesov/parallel.hpp"

namespace swbesov {

BoundReport global_bound_experiment(const Field& q0, const Field& u0, const PhysicalLaws& laws,
                                    const FriedrichsLevel& level, const DyadicPartition& P,
                                    const GlobalBoundOptions& opts) {
    BoundReport rep;
    auto [qp, up] = project_initial(q0, u0, level);
    rep.E0 = initial_energy(qp, up, P, opts.energy);
    if (rep.E0 > opts.eps0)
        throw Error(ErrorKind::invalid_params, "E(0) = " + std::to_string(rep.E0) + " exceeds eps0");
    EnergyAccumulator acc(P, opts.energy);
    EvolveOptions eo = opts.evolve;
    auto user = eo.observer;
    eo.observer = [&](const SolutionState& s) {
        acc.push(s);
        if (rep.first_violation_time < 0.0 && rep.E0 > 0.0 && acc.report().series.back().total() > opts.margin * rep.E0)
            rep.first_violation_time = s.t;
        if (user) user(s);
    };
    auto res = evolve_sw(qp, up, laws, level, eo);
    rep.energy = acc.report();
    rep.sup_ratio = rep.energy.sup_ratio;
    rep.halted = res.halted;
    rep.halt_reason = res.halt_reason;
    rep.mass_drift = res.mass_drift;
    rep.density_min = res.density_min;
    rep.density_max = res.density_max;
    rep.steps = res.steps;
    rep.final_time = res.final_state.t;
    rep.pass = !rep.halted && rep.mass_drift < opts.mass_tolerance && rep.sup_ratio <= opts.margin;
    return rep;
}

double nu_tilde(const PhysicalLaws& laws) {
    const double m = laws.mu(laws.rho_bar), l = laws.lambda(laws.rho_bar);
    return std::min(m, l + 2.0 * m);
}

double local_time_lhs(const std::vector<double>& masses, int l_min, int dims, double t, double nu,
                      const LocalTimeOptions& o) {
    const double cn = o.c * nu;
    double acc = 0.0;
    for (std::size_t k = 0; k < masses.size(); ++k) {
        if (masses[k] == 0.0) continue;
        const int q = l_min + static_cast<int>(k);
        const double g = o.reading == ExponentReading::two_pow ? std::ldexp(1.0, 2 * q) : std::exp(2.0 * q);
        const double w = std::pow(2.0, q * (dims / o.p - 1.0));
        const double decay = std::isinf(t) ? 1.0 : -std::expm1(-cn * t * g);
        acc += w * masses[k] * decay / cn;
    }
    return acc;
}

LocalTimeReport local_time_bound(const Field& u0, const PhysicalLaws& laws, const DyadicPartition& P,
                                 const LocalTimeOptions& opts) {
    if (!(opts.eps > 0.0) || !(opts.c > 0.0) || !(opts.eta > 0.0))
        throw Error(ErrorKind::invalid_params, "local time bound needs ε, c, η > 0");
    const int N = u0.grid().dims();
    LocalTimeReport rep;
    rep.nu_tilde = nu_tilde(laws);
    if (!(rep.nu_tilde > 0.0)) throw Error(ErrorKind::config_invariant, "violated ν̃=min(μ,λ+2μ)>0");
    rep.U0 = besov_norm(u0, BesovSpec::plain(N / opts.p, opts.p, 1.0), P);
    rep.threshold = opts.eps * rep.nu_tilde * rep.nu_tilde / (rep.nu_tilde + rep.U0);
    const auto m = block_norms(u0, opts.p, P);
    auto lhs = [&](double t) { return local_time_lhs(m, P.l_min(), N, t, rep.nu_tilde, opts); };
    rep.lhs_limit = lhs(kInf);
    if (rep.lhs_limit <= rep.threshold) {
        rep.t_star = kInf;
        rep.T_lb = opts.eta;
        return rep;
    }
    double lo = 0.0, hi = opts.eta;
    while (lhs(hi) <= rep.threshold) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        (lhs(mid) <= rep.threshold ? lo : hi) = mid;
        rep.iterations = it + 1;
    }
    rep.t_star = lo;
    rep.T_lb = std::min(opts.eta, rep.t_star);
    return rep;
}

StabilityReport stability_experiment(const Field& q0, const Field& u0, const Field& direction, double delta,
                                     const PhysicalLaws& laws, const FriedrichsLevel& level, const DyadicPartition& P,
                                     const StabilityOptions& opts) {
    const int N = q0.grid().dims();
    Field q1 = q0, u1 = u0;
    if (opts.perturb_density) {
        if (direction.components() != 1) throw Error(ErrorKind::invalid_params, "density perturbation must be scalar");
        q1.axpy(delta, direction);
    } else {
        if (direction.components() != N) throw Error(ErrorKind::invalid_params, "velocity perturbation needs N components");
        u1.axpy(delta, direction);
    }
    EvolveOptions eo = opts.evolve;
    eo.store = true;
    eo.record_every = 1;
    eo.observer = {};
    std::vector<EvolveResult> runs(2);
    parallel_for(2, [&](std::size_t i) {
        runs[i] = i == 0 ? evolve_sw(q0, u0, laws, level, eo) : evolve_sw(q1, u1, laws, level, eo);
    });

    StabilityReport rep;
    rep.halted = runs[0].halted || runs[1].halted;
    const auto& a = runs[0].trajectory;
    const auto& b = runs[1].trajectory;
    const std::size_t n = std::min(a.size(), b.size());
    double sup_lo = 0.0, integral = 0.0, prev_hi = 0.0, dq = 0.0;
    const BesovSpec lo_spec = BesovSpec::plain(-1.0), hi_spec = BesovSpec::plain(1.0), q_spec = BesovSpec::plain(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const Field du = b.states[k].u - a.states[k].u;
        const Field dqf = b.states[k].q - a.states[k].q;
        const double lo = besov_norm(du, lo_spec, P), hi = besov_norm(du, hi_spec, P);
        const double qn = besov_norm(dqf, q_spec, P);
        if (k == 0) {
            rep.initial_separation = lo + (opts.perturb_density ? qn : 0.0);
        } else {
            integral += 0.5 * (a.times[k] - a.times[k - 1]) * (hi + prev_hi);
        }
        prev_hi = hi;
        sup_lo = std::max(sup_lo, lo);
        dq = std::max(dq, qn);
        rep.times.push_back(a.times[k]);
        rep.X.push_back(sup_lo + integral);
        rep.dq_sup.push_back(dq);
    }
    const double fin = rep.X.empty() ? 0.0 : rep.X.back() + (opts.perturb_density ? rep.dq_sup.back() : 0.0);
    if (rep.initial_separation > 0.0)
        rep.amplification = fin / rep.initial_separation;
    else
        rep.amplification = fin > 0.0 ? kInf : 0.0;

    TrajectorySeries qs;
    for (std::size_t k = 0; k < a.size(); ++k) qs.push(a.times[k], a.states[k].q);
    rep.gate_value = chemin_lerner_norm(qs, kInf, BesovSpec::plain(1.0, static_cast<double>(N), 1.0), P);
    rep.gate_ok = rep.gate_value <= opts.alpha;
    rep.pass = !rep.halted && rep.amplification <= opts.amplification_bound;
    return rep;
}

LinearizationReport linearization_experiment(const Field& q0, const Field& u0, const std::vector<double>& amplitudes,
                                             const PhysicalLaws& laws, const EvolveOptions& opts, double min_order) {
    if (amplitudes.size() < 2) throw Error(ErrorKind::invalid_params, "need at least two amplitudes");
    const auto level = make_friedrichs(q0.grid_ptr(), 0);
    LinearParams lp = laws.linear_params();
    lp.kappa_reg = opts.kappa_reg;
    LinearizationReport rep;
    rep.amplitudes = amplitudes;
    for (double a : amplitudes) {
        auto [qa, ua] = project_initial(a * q0, a * u0, level);
        EvolveOptions eo = opts;
        eo.store = true;
        eo.observer = {};
        auto nl = evolve_sw(qa, ua, laws, level, eo);
        if (nl.halted) throw Error(ErrorKind::validation, "nonlinear run halted in the linearization experiment");
        LinearEvolveOptions lo;
        lo.T = nl.trajectory.times.back();
        for (double t : nl.trajectory.times)
            if (t > 0.0) lo.sample_times.push_back(t);
        AcousticState init = SolutionState{qa, ua, 0.0}.acoustic();
        auto lin = evolve_linear(init, lp, lo);
        if (lin.size() != nl.trajectory.size()) throw Error(ErrorKind::validation, "trajectory sample mismatch");
        double dev = 0.0, scale = 0.0;
        for (std::size_t k = 0; k < lin.size(); ++k) {
            const AcousticState s = nl.trajectory.states[k].acoustic();
            const Field eq = s.q - lin.states[k].q, ed = s.d - lin.states[k].d;
            dev = std::max(dev, std::hypot(l2_norm(eq), l2_norm(ed)));
            scale = std::max(scale, std::hypot(l2_norm(lin.states[k].q), l2_norm(lin.states[k].d)));
        }
        rep.deviation.push_back(dev);
        rep.relative.push_back(scale > 0.0 ? dev / scale : 0.0);
    }
    rep.min_order = kInf;
    for (std::size_t k = 0; k + 1 < amplitudes.size(); ++k) {
        const double o = std::log(rep.deviation[k] / rep.deviation[k + 1]) / std::log(amplitudes[k] / amplitudes[k + 1]);
        rep.orders.push_back(o);
        rep.min_order = std::min(rep.min_order, std::isfinite(o) ? o : -kInf);
    }
    rep.pass = rep.min_order >= min_order;
    return rep;
}

ScalingReport scaling_experiment(const Field& q0, const Field& u0, const PhysicalLaws& laws, double lambda,
                                 const EvolveOptions& opts, double tolerance) {
    if (!(lambda > 0.0)) throw Error(ErrorKind::invalid_params, "scaling needs λ > 0");
    const GridPtr& g1 = q0.grid_ptr();
    const int N = g1->dims();
    GridPtr g2 = make_grid(N, g1->points_per_dim(), g1->period() / lambda);
    const auto qs = q0.physical(0);
    std::vector<RealBuffer> us = u0.physical_all();
    for (auto& c : us)
        for (auto& v : c) v *= lambda;
    Field q2 = Field::scalar_from_physical(g2, qs);
    Field u2 = Field::from_physical(g2, us);

    PhysicalLaws l2 = laws.with_pressure_scaled(lambda * lambda);
    l2.kappa = laws.kappa * lambda * lambda;
    if (laws.kernel) l2.kernel = gaussian_kernel(g2, laws.kernel->sigma / lambda);

    EvolveOptions o1 = opts, o2 = opts;
    o1.store = o2.store = true;
    o1.observer = o2.observer = {};
    o2.T = opts.T / (lambda * lambda);
    o2.dt = opts.dt / (lambda * lambda);
    const auto P1 = build_partition(g1);
    const auto P2 = build_partition(g2);
    const auto lv1 = make_friedrichs(g1, 0);
    const auto lv2 = make_friedrichs(g2, 0);
    std::vector<EvolveResult> runs(2);
    parallel_for(2, [&](std::size_t i) {
        runs[i] = i == 0 ? evolve_sw(q0, u0, laws, lv1, o1) : evolve_sw(q2, u2, l2, lv2, o2);
    });

    ScalingReport rep;
    rep.lambda = lambda;
    rep.tolerance = tolerance;
    rep.halted = runs[0].halted || runs[1].halted;
    const auto& a = runs[0].trajectory;
    const auto& b = runs[1].trajectory;
    if (a.size() != b.size()) throw Error(ErrorKind::validation, "scaled runs recorded different sample counts");
    const double h = 0.5 * N;
    auto rel = [](double x, double y) {
        const double m = std::max(std::abs(x), std::abs(y));
        return m > 0.0 ? std::abs(x - y) / m : 0.0;
    };
    for (std::size_t k = 0; k < a.size(); ++k) {
        rep.max_rel_q = std::max(rep.max_rel_q, rel(besov_norm(a.states[k].q, BesovSpec::plain(h), P1),
                                                    besov_norm(b.states[k].q, BesovSpec::plain(h), P2)));
        rep.max_rel_u = std::max(rep.max_rel_u, rel(besov_norm(a.states[k].u, BesovSpec::plain(h - 1.0), P1),
                                                    besov_norm(b.states[k].u, BesovSpec::plain(h - 1.0), P2)));
    }
    rep.pass = !rep.halted && rep.max_rel_q <= tolerance && rep.max_rel_u <= tolerance;
    return rep;
}

namespace {

double critical_pair_norm(const Field& q, const Field& u, const DyadicPartition& P) {
    const double s = 0.5 * q.grid().dims() - 1.0;
    return besov_norm(q, BesovSpec::plain(s), P) + besov_norm(u, BesovSpec::plain(s), P);
}

ConvergenceReport successive(const std::vector<EvolveResult>& runs, const std::vector<GridPtr>& grids,
                             const std::vector<int>& levels) {
    ConvergenceReport rep;
    rep.levels = levels;
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
        const auto& a = runs[k].trajectory;
        const auto& b = runs[k + 1].trajectory;
        if (a.size() != b.size()) throw Error(ErrorKind::validation, "refinement runs recorded different sample counts");
        const GridPtr& fine = grids[k + 1];
        const auto P = build_partition(fine);
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Field dq = resample(a.states[i].q, fine) - b.states[i].q;
            const Field du = resample(a.states[i].u, fine) - b.states[i].u;
            d = std::max(d, critical_pair_norm(dq, du, P));
        }
        rep.differences.push_back(d);
    }
    rep.monotone = true;
    for (std::size_t k = 0; k + 1 < rep.differences.size(); ++k) {
        rep.ratios.push_back(rep.differences[k] > 0.0 ? rep.differences[k + 1] / rep.differences[k] : kInf);
        if (!(rep.differences[k + 1] < rep.differences[k])) rep.monotone = false;
    }
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const auto P = build_partition(grids[k]);
        rep.energy_final.push_back(energy_functional(runs[k].trajectory, P).final().total());
        if (runs[k].halted) rep.monotone = false;
    }
    return rep;
}

}  // namespace

ConvergenceReport friedrichs_convergence(const Field& q0, const Field& u0, const PhysicalLaws& laws,
                                         const std::vector<int>& levels, const EvolveOptions& opts) {
    if (levels.size() < 2) throw Error(ErrorKind::invalid_params, "need at least two Friedrichs levels");
    std::vector<FriedrichsLevel> lv;
    for (int n : levels) {
        if (n < 1) throw Error(ErrorKind::invalid_params, "Friedrichs levels must be ≥ 1");
        lv.push_back(make_friedrichs(q0.grid_ptr(), n));
    }
    EvolveOptions eo = opts;
    eo.store = true;
    eo.observer = {};
    std::vector<EvolveResult> runs(levels.size());
    parallel_for(levels.size(), [&](std::size_t i) { runs[i] = evolve_sw(q0, u0, laws, lv[i], eo); });
    return successive(runs, std::vector<GridPtr>(levels.size(), q0.grid_ptr()), levels);
}

ConvergenceReport resolution_convergence(const std::vector<GridPtr>& grids, const std::vector<Field>& q0,
                                         const std::vector<Field>& u0,
                                         const std::function<PhysicalLaws(const GridPtr&)>& laws_for,
                                         const EvolveOptions& opts) {
    if (grids.size() < 2) throw Error(ErrorKind::invalid_params, "need at least two resolutions");
    if (q0.size() != grids.size() || u0.size() != grids.size())
        throw Error(ErrorKind::invalid_params, "one initial state per grid");
    for (std::size_t k = 0; k + 1 < grids.size(); ++k)
        if (grids[k + 1]->points_per_dim() <= grids[k]->points_per_dim())
            throw Error(ErrorKind::invalid_params, "resolutions must increase");
    std::vector<PhysicalLaws> laws;
    std::vector<FriedrichsLevel> lv;
    std::vector<int> sizes;
    for (const auto& g : grids) {
        laws.push_back(laws_for(g));
        lv.push_back(make_friedrichs(g, 0));
        sizes.push_back(g->points_per_dim());
    }
    EvolveOptions eo = opts;
    eo.store = true;
    eo.observer = {};
    std::vector<EvolveResult> runs(grids.size());
    parallel_for(grids.size(), [&](std::size_t i) { runs[i] = evolve_sw(q0[i], u0[i], laws[i], lv[i], eo); });
    return successive(runs, grids, sizes);
}

double composition_constant(const Field& q, const PhysicalLaws& laws, const BesovSpec& spec, const DyadicPartition& P) {
    auto qp = q.physical(0);
    RealBuffer k(qp.size());
    for (std::size_t i = 0; i < qp.size(); ++i) k[i] = laws.K(laws.rho_bar * (1.0 + qp[i]));
    Field kf = Field::scalar_from_physical(q.grid_ptr(), k);
    apply_dealias(kf);
    const double qn = spec.is_plain() ? besov_norm(q, spec, P) : hybrid_norm(q, spec, P);
    const double kn = spec.is_plain() ? besov_norm(kf, spec, P) : hybrid_norm(kf, spec, P);
    return qn > 0.0 ? kn / qn : 0.0;
}

}  // namespace swbesov
