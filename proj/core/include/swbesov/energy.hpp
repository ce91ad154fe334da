#pragma once

#include <vector>

#include "swbesov/evolve_sw.hpp"

namespace swbesov {

struct EnergyComponents {
    double q_sup = 0.0;  // sup_t ‖q‖_{B̃^{N/2-1,N/2}}
    double q_int = 0.0;  // ∫‖q‖_{B̃^{N/2+1,N/2}}
    double u_sup = 0.0;  // sup_t ‖u‖_{B^{N/2-1}}
    double u_int = 0.0;  // ∫‖u‖_{B^{N/2+1}}
    double total() const { return q_sup + q_int + u_sup + u_int; }
};

struct EnergyOptions {
    // E0 measures u₀ in B^{N/2-1}; set to measure it in B^{N/2} instead.
    bool e0_u_in_critical = false;
};

struct EnergyReport {
    double E0 = 0.0;
    std::vector<double> times;
    std::vector<EnergyComponents> series;
    double sup_ratio = 0.0;  // sup_t E(t)/E0, 0/0 read as 0
    EnergyComponents final() const { return series.empty() ? EnergyComponents{} : series.back(); }
};

// Streaming form, fed from the evolve_sw observer. Time integrals use the trapezoid rule.
class EnergyAccumulator {
public:
    explicit EnergyAccumulator(const DyadicPartition& P, EnergyOptions opts = {});
    void push(const SolutionState& s);
    const EnergyReport& report() const { return rep_; }

private:
    const DyadicPartition* P_;
    EnergyOptions opts_;
    EnergyReport rep_;
    EnergyComponents cur_;
    double t_prev_ = 0.0, qi_prev_ = 0.0, ui_prev_ = 0.0;
    bool started_ = false;
};

EnergyReport energy_functional(const SolutionTrajectory& traj, const DyadicPartition& P, EnergyOptions opts = {});

// E0 = ‖q₀‖_{B̃^{N/2-1,N/2}} + ‖u₀‖_{B^{N/2-1}} (or B^{N/2}, see EnergyOptions).
double initial_energy(const Field& q0, const Field& u0, const DyadicPartition& P, EnergyOptions opts = {});

}  // namespace swbesov
