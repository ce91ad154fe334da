#include "swbesov/energy.hpp"

#include <algorithm>

#include "swbesov/error.hpp"

namespace swbesov {

double initial_energy(const Field& q0, const Field& u0, const DyadicPartition& P, EnergyOptions opts) {
    const double h = 0.5 * q0.grid().dims();
    const double su = opts.e0_u_in_critical ? h : h - 1.0;
    return hybrid_norm(q0, BesovSpec::hybrid(h - 1.0, h), P) + besov_norm(u0, BesovSpec::plain(su), P);
}

EnergyAccumulator::EnergyAccumulator(const DyadicPartition& P, EnergyOptions opts) : P_(&P), opts_(opts) {}

void EnergyAccumulator::push(const SolutionState& s) {
    const double h = 0.5 * s.q.grid().dims();
    const auto qn = block_norms(s.q, 2.0, *P_);
    const auto un = block_norms(s.u, 2.0, *P_);
    const int lm = P_->l_min();
    const double q_lo = split_block_sum(qn, lm, BesovSpec::hybrid(h - 1.0, h));
    const double q_hi = split_block_sum(qn, lm, BesovSpec::hybrid(h + 1.0, h));
    const double u_lo = weighted_block_sum(un, lm, BesovSpec::plain(h - 1.0));
    const double u_hi = weighted_block_sum(un, lm, BesovSpec::plain(h + 1.0));
    if (!started_) {
        rep_.E0 = initial_energy(s.q, s.u, *P_, opts_);
        started_ = true;
    } else {
        if (!(s.t > t_prev_)) throw Error(ErrorKind::invalid_params, "energy samples must increase in time");
        const double dt = s.t - t_prev_;
        cur_.q_int += 0.5 * dt * (q_hi + qi_prev_);
        cur_.u_int += 0.5 * dt * (u_hi + ui_prev_);
    }
    cur_.q_sup = std::max(cur_.q_sup, q_lo);
    cur_.u_sup = std::max(cur_.u_sup, u_lo);
    t_prev_ = s.t;
    qi_prev_ = q_hi;
    ui_prev_ = u_hi;
    rep_.times.push_back(s.t);
    rep_.series.push_back(cur_);
    const double tot = cur_.total();
    const double ratio = rep_.E0 > 0.0 ? tot / rep_.E0 : (tot > 0.0 ? kInf : 0.0);
    rep_.sup_ratio = std::max(rep_.sup_ratio, ratio);
}

EnergyReport energy_functional(const SolutionTrajectory& traj, const DyadicPartition& P, EnergyOptions opts) {
    if (traj.empty()) throw Error(ErrorKind::empty_input, "empty trajectory");
    EnergyAccumulator acc(P, opts);
    for (const auto& s : traj.states) acc.push(s);
    return acc.report();
}

}  // namespace swbesov
