#pragma once

#include <functional>
#include <string>

#include "swbesov/nonlinear_rhs.hpp"
#include "swbesov/trajectory.hpp"

namespace swbesov {

using SolutionTrajectory = Trajectory<SolutionState>;
// Called at t = 0 and after every step.
using SolutionObserver = std::function<void(const SolutionState& s)>;

struct EvolveOptions {
    double T = 1.0;
    double dt = 0.02;        // upper bound; the step is T / ceil(T / dt)
    int record_every = 1;    // steps between stored states (t = 0 and t = T always stored)
    bool store = true;
    double cfl = 0.5;        // advective bound on dt·max|u|/Δx
    double guard_lo = 0.5;   // admissible band for 1 + q
    double guard_hi = 1.5;
    double kappa_reg = 0.0;  // extra κ_reg|ξ|² restoring term in the linear part
    SolutionObserver observer;
};

struct EvolveResult {
    SolutionTrajectory trajectory;
    SolutionState final_state;
    bool halted = false;
    std::string halt_reason;  // "vacuum_guard" or "cfl_violation"
    double halt_time = 0.0;
    int steps = 0;
    double step = 0.0;
    double mass_drift = 0.0;  // max |mean q(t) - mean q(0)| / (1 + mean q(0))
    double density_min = 0.0;
    double density_max = 0.0;
    double cfl_max = 0.0;
};

// Integrating-factor midpoint scheme: the acoustic (q, d) block and the heat flow of Ω
// (viscosity μ̄) are propagated exactly per mode, the nonlinearity is explicit. The
// velocity mean is evolved outside J_n. Initial data are projected by J_n and the
// 2/3 rule (q keeps its mean). Throws vacuum_guard or cfl_violation if the initial
// data are inadmissible; a breach during the run halts it and sets the flag.
EvolveResult evolve_sw(const Field& q0, const Field& u0, const PhysicalLaws& laws, const FriedrichsLevel& level,
                       const EvolveOptions& opts);

// Data as the solver sees them: J_n and dealias applied, means kept.
std::pair<Field, Field> project_initial(const Field& q0, const Field& u0, const FriedrichsLevel& level);

}  // namespace swbesov
