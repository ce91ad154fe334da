#include "swbesov/damping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swbesov/error.hpp"

namespace swbesov {

double fit_decay_rate(const std::vector<double>& t, const std::vector<double>& y) {
    double st = 0, sy = 0, stt = 0, sty = 0;
    std::size_t m = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (!(y[k] > 0.0)) continue;
        const double ly = std::log(y[k]);
        st += t[k];
        sy += ly;
        stt += t[k] * t[k];
        sty += t[k] * ly;
        ++m;
    }
    if (m < 2) return std::numeric_limits<double>::quiet_NaN();
    const double n = static_cast<double>(m);
    return -(n * sty - st * sy) / (n * stt - st * st);
}

std::vector<double> eigen_rate_oracle(const AcousticState& s, const LinearParams& params, const DyadicPartition& P) {
    const auto r = s.q.grid().xi_norm();
    const auto q = s.q.coefficients(0);
    const auto d = s.d.coefficients(0);
    double emax = 0.0;
    for (std::size_t i = 1; i < q.size(); ++i) emax = std::max(emax, std::norm(q[i]) + std::norm(d[i]));
    std::vector<double> out(static_cast<std::size_t>(P.block_count()), std::numeric_limits<double>::quiet_NaN());
    for (int l = P.l_min(); l <= P.l_max(); ++l) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& e : P.entries(l)) {
            const std::size_t i = e.index;
            if (std::norm(q[i]) + std::norm(d[i]) <= 1e-28 * emax) continue;
            auto ev = eigenvalues(acoustic_symbol(params, i, r[i]));
            best = std::min({best, std::abs(ev[0].real()), std::abs(ev[1].real())});
        }
        if (std::isfinite(best)) out[static_cast<std::size_t>(l - P.l_min())] = best;
    }
    return out;
}

DampingReport damping_from_profiles(const std::vector<double>& t, const std::vector<std::vector<double>>& f,
                                    const std::vector<double>& oracle, const std::vector<double>& guaranteed,
                                    int l_min, const DampingOptions& opts) {
    if (t.empty()) throw Error(ErrorKind::empty_input, "no damping samples");
    DampingReport rep;
    const std::size_t blocks = f.front().size();
    double fmax = 0.0;
    for (double v : f.front()) fmax = std::max(fmax, v);
    const double T = t.back();
    double alpha = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < blocks; ++b) {
        BlockDamping bd;
        bd.l = l_min + static_cast<int>(b);
        bd.f0 = f.front()[b];
        bd.rate_oracle = oracle[b];
        bd.rate_guaranteed = guaranteed[b];
        bd.active = fmax > 0.0 && bd.f0 > opts.floor * fmax;
        for (std::size_t k = 1; k < t.size(); ++k) bd.max_increase = std::max(bd.max_increase, f[k][b] - f[k - 1][b]);
        bd.monotone = bd.max_increase <= opts.slack;
        if (bd.active) {
            std::vector<double> tw, yw;
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t[k] >= opts.fit_from * T) {
                    tw.push_back(t[k]);
                    yw.push_back(f[k][b]);
                }
            bd.rate_fit = fit_decay_rate(tw, yw);
            const double scale = std::min(std::ldexp(1.0, 2 * bd.l), 1.0);
            alpha = std::min(alpha, bd.rate_fit / scale);
            if (std::isfinite(bd.rate_oracle) && bd.rate_oracle > 0.0) {
                const double err = std::abs(bd.rate_fit - bd.rate_oracle) / bd.rate_oracle;
                bd.oracle_ok = err <= opts.oracle_tol;
                rep.worst_oracle_error = std::max(rep.worst_oracle_error, err);
            }
        }
        rep.blocks.push_back(bd);
    }
    rep.alpha_fit = std::isfinite(alpha) ? alpha : 0.0;
    bool any_active = false;
    for (auto& bd : rep.blocks) {
        bd.rate_bound = rep.alpha_fit * std::min(std::ldexp(1.0, 2 * bd.l), 1.0);
        if (bd.active) {
            any_active = true;
            bd.pass = bd.monotone && bd.oracle_ok && std::isfinite(bd.rate_fit) && bd.rate_fit >= bd.rate_bound &&
                      rep.alpha_fit > 0.0;
        } else {
            bd.pass = bd.monotone;
        }
        rep.pass = rep.pass && bd.pass;
    }
    if (!any_active) rep.alpha_fit = 0.0;
    return rep;
}

DampingReport verify_damping(const AcousticState& init, const LinearParams& params, const LyapunovConfig& cfg,
                             const DyadicPartition& P, const DampingOptions& opts) {
    if (opts.samples < 2) throw Error(ErrorKind::invalid_params, "damping needs at least two samples");
    const double h = opts.T / opts.samples;
    AcousticPropagator step(init.q.grid_ptr(), params, h);
    AcousticState w = init;
    w.omega = Field();
    std::vector<double> t;
    std::vector<std::vector<double>> f;
    for (int k = 0; k <= opts.samples; ++k) {
        if (k > 0) step.apply(w);
        t.push_back(k * h);
        f.push_back(lyapunov_profile(w, cfg, params, P));
    }
    return damping_from_profiles(t, f, eigen_rate_oracle(init, params, P), lyapunov_guaranteed_rates(cfg, params, P),
                                 P.l_min(), opts);
}

SmoothingAccumulator::SmoothingAccumulator(const DyadicPartition& P, double s, int l0) : P_(&P), s_(s), l0_(l0) {}

double SmoothingAccumulator::integrand(const AcousticState& st) const {
    const auto dn = block_norms(st.d, 2.0, *P_);
    double acc = 0.0;
    for (int l = std::max(l0_, P_->l_min()); l <= P_->l_max(); ++l)
        acc += std::pow(2.0, l * (s_ + 1.0)) * dn[static_cast<std::size_t>(l - P_->l_min())];
    return acc;
}

void SmoothingAccumulator::push(double t, const AcousticState& st) {
    const double g = integrand(st);
    if (!started_) {
        rhs0_ = hybrid_norm(st.q, BesovSpec::hybrid(s_ - 1.0, s_), *P_) + besov_norm(st.d, BesovSpec::plain(s_ - 1.0), *P_);
        started_ = true;
    } else {
        if (!(t > t_prev_)) throw Error(ErrorKind::invalid_params, "smoothing samples must increase in time");
        lhs_ += 0.5 * (t - t_prev_) * (g + g_prev_);
    }
    t_prev_ = t;
    g_prev_ = g;
}

void SmoothingAccumulator::push_forcing(double t, const Field& F, const Field& G) {
    const double g = hybrid_norm(F, BesovSpec::hybrid(s_ - 1.0, s_), *P_) + besov_norm(G, BesovSpec::plain(s_ - 1.0), *P_);
    if (f_started_) forcing_ += 0.5 * (t - ft_prev_) * (g + fg_prev_);
    f_started_ = true;
    ft_prev_ = t;
    fg_prev_ = g;
}

SmoothingReport SmoothingAccumulator::finish(double c_max) const {
    SmoothingReport rep;
    rep.lhs = lhs_;
    rep.rhs = rhs0_ + forcing_;
    rep.c_max = c_max;
    if (rep.rhs > 0.0)
        rep.ratio = rep.lhs / rep.rhs;
    else
        rep.ratio = rep.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    rep.pass = rep.ratio <= c_max;
    return rep;
}

SmoothingReport verify_smoothing(const AcousticTrajectory& traj, double s, const LyapunovConfig& cfg,
                                 const DyadicPartition& P, double c_max) {
    if (traj.empty()) throw Error(ErrorKind::empty_input, "empty trajectory");
    SmoothingAccumulator acc(P, s, cfg.l0);
    for (std::size_t k = 0; k < traj.size(); ++k) acc.push(traj.times[k], traj.states[k]);
    return acc.finish(c_max);
}

}  // namespace swbesov
