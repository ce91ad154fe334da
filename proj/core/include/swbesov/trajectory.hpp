#pragma once

#include <span>
#include <vector>

#include "swbesov/besov.hpp"
#include "swbesov/error.hpp"

namespace swbesov {

template <class State>
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;

    bool empty() const { return times.empty(); }
    std::size_t size() const { return times.size(); }
    void push(double t, State s) {
        if (!times.empty() && !(t > times.back()))
            throw Error(ErrorKind::invalid_params, "trajectory times must increase strictly");
        times.push_back(t);
        states.push_back(std::move(s));
    }
};

using TrajectorySeries = Trajectory<Field>;

// Trapezoid weights; a single sample gets weight 0.
std::vector<double> trapezoid_weights(std::span<const double> times);

// L^ρ over the sampled times (ρ = ∞: max).
double time_norm(std::span<const double> times, std::span<const double> values, double rho);

// Block norms per sample: series[j][l - l_min].
struct BlockSeries {
    std::vector<double> times;
    std::vector<std::vector<double>> norms;
    int l_min = 0;

    void push(double t, std::vector<double> n) {
        times.push_back(t);
        norms.push_back(std::move(n));
    }
};

BlockSeries block_series(const TrajectorySeries& traj, double p, const DyadicPartition& P);

// Chemin-Lerner: time norm per block first, then the (hybrid or plain) block sum.
double chemin_lerner_norm(const BlockSeries& series, double rho, const BesovSpec& spec);
double chemin_lerner_norm(const TrajectorySeries& traj, double rho, const BesovSpec& spec, const DyadicPartition& P);
// L^ρ_T(B): space norm at each time first, then the time norm.
double time_space_norm(const BlockSeries& series, double rho, const BesovSpec& spec);
double time_space_norm(const TrajectorySeries& traj, double rho, const BesovSpec& spec, const DyadicPartition& P);

}  // namespace swbesov
