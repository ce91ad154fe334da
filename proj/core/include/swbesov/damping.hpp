#pragma once

#include <vector>

#include "swbesov/linear_evolution.hpp"
#include "swbesov/lyapunov.hpp"

namespace swbesov {

struct BlockDamping {
    int l = 0;
    double f0 = 0.0;
    double rate_fit = 0.0;      // least-squares slope of -log f_l on the fit window
    double rate_bound = 0.0;    // α_fit·min(2^{2l}, 1)
    double rate_oracle = 0.0;   // min |Re λ(ξ)| over the block's excited modes
    double rate_guaranteed = 0.0;
    double max_increase = 0.0;  // largest f_l(t_{k+1}) - f_l(t_k)
    bool monotone = true;
    bool oracle_ok = true;
    bool active = false;        // f0 above the noise floor
    bool pass = true;
};

struct DampingReport {
    std::vector<BlockDamping> blocks;
    double alpha_fit = 0.0;
    double worst_oracle_error = 0.0;  // max relative |rate_fit - rate_oracle| over active blocks
    bool pass = true;
};

struct DampingOptions {
    double T = 5.0;
    int samples = 200;
    double fit_from = 0.5;     // fit window [fit_from·T, T]
    double slack = 1e-9;
    double oracle_tol = 0.15;
    double floor = 1e-12;      // blocks with f_l(0) below floor·max f(0) are skipped
};

// Evolves the unforced system exactly and checks monotonicity, a single positive
// α_fit and agreement of the fitted rates with the symbol eigenvalues.
DampingReport verify_damping(const AcousticState& init, const LinearParams& params, const LyapunovConfig& cfg,
                             const DyadicPartition& P, const DampingOptions& opts = {});

// Same checks on precomputed block profiles f[k][l - l_min] at times t[k].
DampingReport damping_from_profiles(const std::vector<double>& t, const std::vector<std::vector<double>>& f,
                                    const std::vector<double>& oracle, const std::vector<double>& guaranteed,
                                    int l_min, const DampingOptions& opts);

// min |Re λ(ξ)| over modes of each block where the state has energy.
std::vector<double> eigen_rate_oracle(const AcousticState& s, const LinearParams& params, const DyadicPartition& P);

// Least-squares slope of log y against t, negated.
double fit_decay_rate(const std::vector<double>& t, const std::vector<double>& y);

struct SmoothingReport {
    double lhs = 0.0;  // ∫₀ᵀ Σ_{l ≥ l0} 2^{l(s+1)} ‖d̃_l‖ dt
    double rhs = 0.0;  // ‖q₀‖_{B̃^{s-1,s}} + ‖d₀‖_{B^{s-1}} + ∫(‖F‖_{B̃^{s-1,s}} + ‖G‖_{B^{s-1}})
    double ratio = 0.0;
    double c_max = 0.0;
    bool pass = true;
};

// Streaming form: push states in time order, then finish.
class SmoothingAccumulator {
public:
    SmoothingAccumulator(const DyadicPartition& P, double s, int l0);
    void push(double t, const AcousticState& state);
    // forcing norm integrand at the last pushed time
    void push_forcing(double t, const Field& F, const Field& G);
    SmoothingReport finish(double c_max) const;

private:
    const DyadicPartition* P_;
    double s_;
    int l0_;
    bool started_ = false;
    double t_prev_ = 0.0, g_prev_ = 0.0, lhs_ = 0.0, rhs0_ = 0.0;
    bool f_started_ = false;
    double ft_prev_ = 0.0, fg_prev_ = 0.0, forcing_ = 0.0;
    double integrand(const AcousticState& s) const;
};

SmoothingReport verify_smoothing(const AcousticTrajectory& traj, double s, const LyapunovConfig& cfg,
                                 const DyadicPartition& P, double c_max);

}  // namespace swbesov
