#include "swbesov/model_problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swbesov/error.hpp"

namespace swbesov {

double estimate_ratio(double lhs, double rhs) {
    if (rhs > 0.0) return lhs / rhs;
    return lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

namespace {

double spec_norm(const Field& f, const BesovSpec& spec, const DyadicPartition& P) {
    return weighted_block_sum(block_norms(f, spec.p, P), P.l_min(), spec);
}

// ∂_j u_i stacked as component i·N + j
Field gradient_tensor(const Field& u) {
    std::vector<Field> parts;
    for (int i = 0; i < u.components(); ++i) {
        Field g = gradient(u.component(i));
        for (int j = 0; j < g.components(); ++j) parts.push_back(g.component(j));
    }
    return stack(parts);
}

double max_abs_sum(const Field& v) {
    auto phys = v.physical_all();
    double m = 0.0;
    for (std::size_t i = 0; i < phys[0].size(); ++i) {
        double s = 0.0;
        for (const auto& c : phys) s += std::abs(c[i]);
        m = std::max(m, s);
    }
    return m;
}

Field advect_dealiased(const Field& u, const Field& q) {
    Field g = gradient(q);
    Field out(q.grid_ptr(), 1);
    for (int c = 0; c < u.components(); ++c) out += dealiased_product(u.component(c), g.component(c));
    return out;
}

// Trapezoid running integral.
std::vector<double> running_integral(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<double> out(t.size(), 0.0);
    for (std::size_t k = 1; k < t.size(); ++k) out[k] = out[k - 1] + 0.5 * (t[k] - t[k - 1]) * (y[k] + y[k - 1]);
    return out;
}

bool transport_bound_holds(const std::vector<double>& t, const std::vector<double>& n, const std::vector<double>& U,
                           const std::vector<double>& f, double C) {
    double integral = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k > 0)
            integral += 0.5 * (t[k] - t[k - 1]) * (std::exp(-C * U[k]) * f[k] + std::exp(-C * U[k - 1]) * f[k - 1]);
        const double bound = std::exp(C * U[k]) * (n[0] + integral);
        if (n[k] > bound * (1.0 + 1e-12) + 1e-300) return false;
    }
    return true;
}

}  // namespace

double fit_transport_constant(const std::vector<double>& t, const std::vector<double>& n, const std::vector<double>& U,
                              const std::vector<double>& f) {
    if (t.empty()) throw Error(ErrorKind::empty_input, "empty series");
    if (transport_bound_holds(t, n, U, f, 0.0)) return 0.0;
    double hi = 1.0;
    while (!transport_bound_holds(t, n, U, f, hi)) {
        hi *= 2.0;
        if (hi > 1e8) return std::numeric_limits<double>::infinity();
    }
    double lo = 0.0;
    for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (transport_bound_holds(t, n, U, f, mid) ? hi : lo) = mid;
    }
    return hi;
}

std::pair<TrajectorySeries, EstimateReport> solve_transport(const Field& q0, const TimeField& u, const TimeField& F,
                                                            const BesovSpec& spec, const DyadicPartition& P,
                                                            const TransportOptions& opts) {
    if (q0.components() != 1) throw Error(ErrorKind::invalid_params, "transport needs a scalar q0");
    if (!(opts.dt > 0.0) || !(opts.T > 0.0)) throw Error(ErrorKind::invalid_params, "T and dt must be positive");
    spec.validate();
    const Grid& g = q0.grid();
    const double N = g.dims();
    const double pprime = spec.p == 1.0 ? kInf : spec.p / (spec.p - 1.0);
    const double lo = -std::min(N / spec.p, std::isinf(pprime) ? 0.0 : N / pprime);

    EstimateReport rep;
    rep.label = "transport " + spec.label();
    rep.c_max = opts.c_max;
    rep.in_range = spec.s > lo && spec.s < N / spec.p + 1.0;

    TrajectorySeries traj;
    std::vector<double> ts, ns, grad_sup, fs;
    std::vector<double> running_max(static_cast<std::size_t>(P.block_count()), 0.0);

    auto sample = [&](double t, const Field& q, bool keep) {
        auto bn = block_norms(q, spec.p, P);
        for (std::size_t j = 0; j < bn.size(); ++j) running_max[j] = std::max(running_max[j], bn[j]);
        ts.push_back(t);
        ns.push_back(weighted_block_sum(running_max, P.l_min(), spec));
        grad_sup.push_back(u ? sup_norm(gradient_tensor(u(t))) : 0.0);
        fs.push_back(F ? spec_norm(F(t), spec, P) : 0.0);
        if (keep && opts.store) traj.push(t, q);
    };

    auto rhs = [&](double t, const Field& q) {
        Field out(q.grid_ptr(), 1);
        if (u) {
            Field v = u(t);
            out -= advect_dealiased(v, q);
        }
        if (F) out += F(t);
        return out;
    };

    Field q = q0;
    sample(0.0, q, true);
    const long steps = static_cast<long>(std::ceil(opts.T / opts.dt - 1e-9));
    const double h = opts.T / static_cast<double>(steps);
    for (long k = 0; k < steps; ++k) {
        const double t = k * h;
        if (u) {
            const double c = h * max_abs_sum(u(t)) / g.spacing();
            if (c > opts.cfl)
                throw Error(ErrorKind::cfl_violation, "transport CFL number " + std::to_string(c) + " exceeds bound");
        }
        Field k1 = rhs(t, q);
        Field y = q;
        y.axpy(0.5 * h, k1);
        Field k2 = rhs(t + 0.5 * h, y);
        y = q;
        y.axpy(0.5 * h, k2);
        Field k3 = rhs(t + 0.5 * h, y);
        y = q;
        y.axpy(h, k3);
        Field k4 = rhs(t + h, y);
        q.axpy(h / 6.0, k1);
        q.axpy(h / 3.0, k2);
        q.axpy(h / 3.0, k3);
        q.axpy(h / 6.0, k4);
        const bool keep = (k + 1) % std::max(1, opts.record_every) == 0 || k + 1 == steps;
        sample((k + 1) * h, q, keep);
    }

    const auto U = running_integral(ts, grad_sup);
    rep.constant = fit_transport_constant(ts, ns, U, fs);
    rep.times = ts;
    rep.lhs_series = ns;
    rep.lhs = ns.back();
    const double C = std::isfinite(rep.constant) ? rep.constant : 0.0;
    double integral = 0.0;
    for (std::size_t k = 1; k < ts.size(); ++k)
        integral += 0.5 * (ts[k] - ts[k - 1]) * (std::exp(-C * U[k]) * fs[k] + std::exp(-C * U[k - 1]) * fs[k - 1]);
    rep.rhs = std::exp(C * U.back()) * (ns.front() + integral);
    rep.ratio = estimate_ratio(rep.lhs, rep.rhs);
    rep.pass = std::isfinite(rep.constant) && rep.constant <= opts.c_max;
    return {std::move(traj), rep};
}

namespace {

struct HeatFactors {
    double e, phi1, psi;  // e^{-z}, (1-e^{-z})/z, (1-e^{-z}(1+z))/z²
};

HeatFactors heat_factors(double z) {
    if (z < 1e-4) {
        return {std::exp(-z), 1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0,
                0.5 - z / 3.0 + z * z / 8.0 - z * z * z / 30.0};
    }
    const double e = std::exp(-z);
    return {e, -std::expm1(-z) / z, (1.0 - e * (1.0 + z)) / (z * z)};
}

// u ← e^{-μ|ξ|²h}u + hφ1 f0 + h(φ1-ψ)(f1-f0); f may be empty.
void heat_step(Field& u, double mu, double h, const Field* f0, const Field* f1) {
    const Grid& g = u.grid();
    auto r = g.xi_norm();
    auto nyq = g.nyquist();
    for (int c = 0; c < u.components(); ++c) {
        auto uc = u.coefficients(c);
        for (std::size_t i = 0; i < uc.size(); ++i) {
            if (nyq[i]) {
                uc[i] = 0.0;
                continue;
            }
            const HeatFactors k = heat_factors(mu * r[i] * r[i] * h);
            Complex v = k.e * uc[i];
            if (f0) {
                const Complex a = f0->coefficients(c)[i];
                const Complex b = f1->coefficients(c)[i];
                v += h * k.phi1 * a + h * (k.phi1 - k.psi) * (b - a);
            }
            uc[i] = v;
        }
    }
}

std::vector<double> sample_grid(double T, double dt, const std::vector<double>& given) {
    std::vector<double> out;
    if (!given.empty()) {
        for (double t : given)
            if (t > 0.0 && t <= T * (1.0 + 1e-14)) {
                if (!out.empty() && !(t > out.back())) throw Error(ErrorKind::invalid_params, "sample times must increase");
                out.push_back(t);
            }
        return out;
    }
    const long steps = static_cast<long>(std::ceil(T / dt - 1e-9));
    for (long k = 1; k <= steps; ++k) out.push_back(T * static_cast<double>(k) / static_cast<double>(steps));
    return out;
}

}  // namespace

std::pair<TrajectorySeries, EstimateReport> solve_heat(const Field& u0, const TimeField& f, double mu,
                                                       const BesovSpec& spec, const DyadicPartition& P,
                                                       const HeatOptions& opts) {
    if (!(mu > 0.0)) throw Error(ErrorKind::invalid_params, "heat equation needs μ > 0");
    if (!(opts.rho2 >= 1.0 && opts.rho2 <= opts.rho1))
        throw Error(ErrorKind::invalid_params, "heat estimate needs 1 ≤ ρ2 ≤ ρ1 ≤ ∞");
    if (!(opts.T > 0.0) || (f && !(opts.dt > 0.0))) throw Error(ErrorKind::invalid_params, "T and dt must be positive");
    spec.validate();

    EstimateReport rep;
    rep.label = "heat " + spec.label();
    rep.c_max = opts.c_max;

    const BesovSpec out_spec = BesovSpec::plain(spec.s + 2.0 / opts.rho1, spec.p, spec.r);
    const BesovSpec f_spec = BesovSpec::plain(spec.s - 2.0 + 2.0 / opts.rho2, spec.p, spec.r);
    TrajectorySeries traj;
    BlockSeries useries, fseries;
    useries.l_min = fseries.l_min = P.l_min();

    auto record = [&](double t, const Field& u, const Field* fval) {
        useries.push(t, block_norms(u, spec.p, P));
        if (fval) fseries.push(t, block_norms(*fval, spec.p, P));
        if (opts.store) traj.push(t, u);
        if (opts.observer) opts.observer(t, u);
    };

    Field u = u0;
    Field fcur;
    if (f) fcur = f(0.0);
    record(0.0, u, f ? &fcur : nullptr);

    double t = 0.0;
    for (double target : sample_grid(opts.T, opts.dt, opts.sample_times)) {
        if (!f) {
            heat_step(u, mu, target - t, nullptr, nullptr);
        } else {
            while (t < target * (1.0 - 1e-13)) {
                double h = std::min(opts.dt, target - t);
                if (target - (t + h) < 1e-12 * opts.dt) h = target - t;
                Field fnext = f(t + h);
                heat_step(u, mu, h, &fcur, &fnext);
                fcur = std::move(fnext);
                t += h;
            }
        }
        t = target;
        record(t, u, f ? &fcur : nullptr);
    }

    rep.lhs = chemin_lerner_norm(useries, opts.rho1, out_spec);
    rep.rhs = spec_norm(u0, spec, P);
    if (f) rep.rhs += std::pow(mu, 1.0 / opts.rho2 - 1.0) * chemin_lerner_norm(fseries, opts.rho2, f_spec);
    rep.ratio = estimate_ratio(rep.lhs, rep.rhs);
    rep.pass = rep.ratio <= opts.c_max;
    rep.times = useries.times;
    return {std::move(traj), rep};
}

Field variable_diffusion(const Field& u, const Field& a, double mu_bar, double lambda_bar) {
    const int n = u.grid().dims();
    if (u.components() != n) throw Error(ErrorKind::invalid_params, "variable diffusion needs a vector field");
    std::vector<Field> comps;
    for (int i = 0; i < n; ++i) comps.push_back(mu_bar * divergence(dealiased_product(a, gradient(u.component(i)))));
    Field out = stack(comps);
    out.axpy(lambda_bar + mu_bar, gradient(dealiased_product(a, divergence(u))));
    return out;
}

namespace {

// μ̄∫a|∇u|² + (λ̄+μ̄)∫a(div u)²; a empty means a ≡ 1.
double dissipation(const Field& u, const Field* a, double mu_bar, double lambda_bar) {
    const Grid& g = u.grid();
    auto grad = gradient_tensor(u).physical_all();
    auto div = divergence(u).physical(0);
    RealBuffer ap;
    if (a) ap = a->physical(0);
    double acc = 0.0;
    for (std::size_t x = 0; x < div.size(); ++x) {
        double gg = 0.0;
        for (const auto& c : grad) gg += c[x] * c[x];
        const double w = a ? ap[x] : 1.0;
        acc += w * (mu_bar * gg + (lambda_bar + mu_bar) * div[x] * div[x]);
    }
    return acc * g.cell_volume();
}

}  // namespace

std::pair<TrajectorySeries, VariableHeatReport> solve_heat_variable(const Field& u0, const TimeField& G,
                                                                    const TimeField& a, double mu_bar,
                                                                    double lambda_bar, const DyadicPartition& P,
                                                                    const VariableHeatOptions& opts) {
    const GridPtr& gp = u0.grid_ptr();
    const Grid& g = *gp;
    const int n = g.dims();
    if (u0.components() != n) throw Error(ErrorKind::invalid_params, "variable heat needs a vector u0");
    if (!(2.0 * mu_bar + lambda_bar > 0.0)) throw Error(ErrorKind::config_invariant, "violated ν̄=2μ̄+λ̄>0");
    if (!a) throw Error(ErrorKind::invalid_params, "variable heat needs a coefficient");
    if (!(opts.dt > 0.0) || !(opts.T > 0.0)) throw Error(ErrorKind::invalid_params, "T and dt must be positive");

    VariableHeatReport rep;
    rep.a_min = std::numeric_limits<double>::infinity();
    rep.a_max = -std::numeric_limits<double>::infinity();

    auto check_a = [&](const Field& af) {
        auto phys = af.physical(0);
        const auto [mn, mx] = std::minmax_element(phys.begin(), phys.end());
        rep.a_min = std::min(rep.a_min, *mn);
        rep.a_max = std::max(rep.a_max, *mx);
        const bool below = opts.a_lower > 0.0 ? *mn < opts.a_lower : !(*mn > 0.0);
        const bool above = opts.a_upper > 0.0 && *mx > opts.a_upper;
        if (below || above)
            throw Error(ErrorKind::coefficient_bound,
                        "violated 0<a_lower≤a(t,x)≤a_upper (sampled range [" + std::to_string(*mn) + ", " +
                            std::to_string(*mx) + "])");
    };

    Field a0 = a(0.0);
    check_a(a0);
    const double abar = a0.mean(0);

    // exact propagator of abar[μ̄Δ + (λ̄+μ̄)∇div]: solenoidal part e^{-abar μ̄|ξ|²h}, gradient part e^{-abar ν̄|ξ|²h}
    auto propagate = [&](Field& u, double h) {
        auto r = g.xi_norm();
        auto nyq = g.nyquist();
        const double nu = 2.0 * mu_bar + lambda_bar;
        for (std::size_t i = 0; i < g.spectral_size(); ++i) {
            if (nyq[i]) {
                for (int c = 0; c < n; ++c) u.coefficients(c)[i] = 0.0;
                continue;
            }
            if (i == 0) continue;
            const double r2 = r[i] * r[i];
            const double es = std::exp(-abar * mu_bar * r2 * h);
            const double ec = std::exp(-abar * nu * r2 * h);
            Complex proj{};
            for (int c = 0; c < n; ++c) proj += g.xi(c)[i] * u.coefficients(c)[i];
            proj /= r2;
            for (int c = 0; c < n; ++c) {
                const Complex v = u.coefficients(c)[i];
                const Complex grad_part = g.xi(c)[i] * proj;
                u.coefficients(c)[i] = es * (v - grad_part) + ec * grad_part;
            }
        }
    };

    auto rhs = [&](double t, const Field& u) {
        Field af = a(t);
        Field fluct = af;
        fluct.coefficients(0)[0] -= abar;
        Field out = variable_diffusion(u, fluct, mu_bar, lambda_bar);
        if (G) out += G(t);
        return out;
    };

    const double s = opts.s > 0.0 ? opts.s : n / 2.0 + 1.0;
    const double alpha2p = 2.0 / (s - n / 2.0);
    const double alpha2 = 1.0 / (1.0 - 1.0 / alpha2p);
    const double tau = opts.tau;
    rep.estimate.label = "variable heat";
    rep.estimate.c_max = opts.c_max;
    rep.estimate.in_range = std::max(1.0, n / 2.0) <= s && s <= n / 2.0 + 1.0 && -1.0 - n / 2.0 < tau && tau <= s - 1.0;

    BlockSeries us, dus, das, gs;
    us.l_min = dus.l_min = das.l_min = gs.l_min = P.l_min();
    TrajectorySeries traj;
    double e_prev = std::numeric_limits<double>::infinity();
    rep.energy_rate_ratio_min = std::numeric_limits<double>::infinity();
    rep.energy_rate_ratio_max = 0.0;

    auto record = [&](double t, const Field& u, const Field& af, bool keep) {
        us.push(t, block_norms(u, 2.0, P));
        dus.push(t, block_norms(gradient_tensor(u), 2.0, P));
        das.push(t, block_norms(gradient(af), 2.0, P));
        if (G) gs.push(t, block_norms(G(t), 2.0, P));
        const double e = 0.5 * l2_norm(u) * l2_norm(u);
        if (!G && e > e_prev * (1.0 + 1e-12)) rep.energy_decreasing = false;
        e_prev = e;
        const double d1 = dissipation(u, nullptr, mu_bar, lambda_bar);
        if (d1 > 1e-300) {
            const double ratio = dissipation(u, &af, mu_bar, lambda_bar) / d1;
            rep.energy_rate_ratio_min = std::min(rep.energy_rate_ratio_min, ratio);
            rep.energy_rate_ratio_max = std::max(rep.energy_rate_ratio_max, ratio);
        }
        if (keep && opts.store) traj.push(t, u);
    };

    Field u = u0;
    record(0.0, u, a0, true);
    const long steps = static_cast<long>(std::ceil(opts.T / opts.dt - 1e-9));
    const double h = opts.T / static_cast<double>(steps);
    for (long k = 0; k < steps; ++k) {
        const double t = k * h;
        Field n0 = rhs(t, u);
        Field mid = u;
        mid.axpy(0.5 * h, n0);
        propagate(mid, 0.5 * h);
        Field n1 = rhs(t + 0.5 * h, mid);
        propagate(n1, 0.5 * h);
        propagate(u, h);
        u.axpy(h, n1);
        const bool keep = (k + 1) % std::max(1, opts.record_every) == 0 || k + 1 == steps;
        if (keep) {
            Field af = a(t + h);
            check_a(af);
            record(t + h, u, af, true);
        }
    }

    auto& est = rep.estimate;
    est.lhs = chemin_lerner_norm(us, kInf, BesovSpec::plain(tau)) + chemin_lerner_norm(us, 1.0, BesovSpec::plain(tau + 2.0));
    est.rhs = besov_norm(u0, BesovSpec::plain(tau), P) +
              chemin_lerner_norm(das, alpha2p, BesovSpec::plain(s - 1.0)) *
                  chemin_lerner_norm(dus, alpha2p, BesovSpec::plain(tau - 1.0 + 2.0 / alpha2));
    if (G) est.rhs += chemin_lerner_norm(gs, 1.0, BesovSpec::plain(tau));
    est.ratio = estimate_ratio(est.lhs, est.rhs);
    est.pass = est.ratio <= opts.c_max;
    est.times = us.times;

    const double lo = opts.a_lower > 0.0 ? opts.a_lower : rep.a_min;
    const double hi = opts.a_upper > 0.0 ? opts.a_upper : rep.a_max;
    const bool rate_ok = !std::isfinite(rep.energy_rate_ratio_min) ||
                         (rep.energy_rate_ratio_min >= lo * (1.0 - 1e-9) && rep.energy_rate_ratio_max <= hi * (1.0 + 1e-9));
    rep.pass = est.pass && rate_ok && rep.energy_decreasing;
    return {std::move(traj), rep};
}

}  // namespace swbesov
