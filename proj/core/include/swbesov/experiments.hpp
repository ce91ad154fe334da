#pragma once

#include <string>
#include <vector>

#include "swbesov/energy.hpp"
#include "swbesov/linear_evolution.hpp"

namespace swbesov {

// Small-data global bound: sup_t E(t)/E(0) against a margin M.
struct GlobalBoundOptions {
    EvolveOptions evolve;
    double margin = 10.0;
    double eps0 = kInf;          // precondition E(0) ≤ eps0
    double mass_tolerance = 1e-8;
    EnergyOptions energy;
};

struct BoundReport {
    double E0 = 0.0;
    double sup_ratio = 0.0;
    double first_violation_time = -1.0;  // first t with E(t)/E0 > margin, -1 if none
    bool halted = false;
    std::string halt_reason;
    double mass_drift = 0.0;
    double density_min = 0.0, density_max = 0.0;
    int steps = 0;
    double final_time = 0.0;
    EnergyReport energy;
    bool pass = false;
};

BoundReport global_bound_experiment(const Field& q0, const Field& u0, const PhysicalLaws& laws,
                                    const FriedrichsLevel& level, const DyadicPartition& P,
                                    const GlobalBoundOptions& opts);

// Local existence time from the heat-flow bound on u₀.
enum class ExponentReading { two_pow, e_pow };  // 2^{2q} (default) or the displayed e^{2q}

struct LocalTimeOptions {
    double eps = 0.1;
    double c = 1.0;
    double eta = 1.0;
    double p = 2.0;
    ExponentReading reading = ExponentReading::two_pow;
};

struct LocalTimeReport {
    double T_lb = 0.0;
    double t_star = 0.0;   // +∞ when the left side never reaches the threshold
    double threshold = 0.0;
    double nu_tilde = 0.0;
    double U0 = 0.0;
    double lhs_limit = 0.0;  // left side as t → ∞
    int iterations = 0;
};

// ν̃ = min(μ(ρ̄), λ(ρ̄) + 2μ(ρ̄))
double nu_tilde(const PhysicalLaws& laws);
// Σ_q 2^{q(N/p-1)} m_q (1 - e^{-cν̃t·g(q)})/(cν̃) for block masses m_q starting at l_min.
double local_time_lhs(const std::vector<double>& masses, int l_min, int dims, double t, double nu, const LocalTimeOptions& o);
LocalTimeReport local_time_bound(const Field& u0, const PhysicalLaws& laws, const DyadicPartition& P,
                                 const LocalTimeOptions& opts);

// Perturbed pair of runs; X(t) = ‖δu‖_{L^∞_t(B^{-1})} + ‖δu‖_{L^1_t(B^1)}, p = 2.
struct StabilityOptions {
    EvolveOptions evolve;             // T defaults to 1 in the scenario
    double amplification_bound = 100.0;
    double alpha = 0.5;               // smallness gate on ‖q‖_{L̃^∞_T(B^1_{N,1})}
    bool perturb_density = false;     // perturb q₀ instead of u₀
};

struct StabilityReport {
    std::vector<double> times;
    std::vector<double> X;           // running X(t)
    std::vector<double> dq_sup;      // running ‖δq‖_{L^∞_t(B^0)}
    double initial_separation = 0.0; // ‖δu₀‖_{B^{-1}} (+ ‖δq₀‖_{B^0} when q₀ is perturbed)
    double amplification = 0.0;      // final separation over the initial one, 0/0 read as 0
    double gate_value = 0.0;
    bool gate_ok = false;
    bool halted = false;
    bool pass = false;
};

StabilityReport stability_experiment(const Field& q0, const Field& u0, const Field& direction, double delta,
                                     const PhysicalLaws& laws, const FriedrichsLevel& level, const DyadicPartition& P,
                                     const StabilityOptions& opts);

// Nonlinear vs linearized trajectories for data a·(q₀, u₀) over a list of amplitudes.
struct LinearizationReport {
    std::vector<double> amplitudes;
    std::vector<double> deviation;   // max_t ‖(q,d)_nl - (q,d)_lin‖_{L²}
    std::vector<double> relative;    // deviation over max_t ‖(q,d)_lin‖_{L²}
    std::vector<double> orders;      // log2-type slopes between successive amplitudes
    double min_order = 0.0;
    bool pass = false;
};

LinearizationReport linearization_experiment(const Field& q0, const Field& u0, const std::vector<double>& amplitudes,
                                             const PhysicalLaws& laws, const EvolveOptions& opts,
                                             double min_order = 1.9);

// Rescaled run: period L/λ, same samples, u·λ, P·λ², κ·λ², times /λ².
struct ScalingReport {
    double lambda = 2.0;
    double max_rel_q = 0.0;  // over recorded times, ‖q‖_{B^{N/2}}
    double max_rel_u = 0.0;  // ‖u‖_{B^{N/2-1}}
    double tolerance = 0.05;
    bool halted = false;
    bool pass = false;
};

ScalingReport scaling_experiment(const Field& q0, const Field& u0, const PhysicalLaws& laws, double lambda,
                                 const EvolveOptions& opts, double tolerance = 0.05);

// Successive differences of sup_t (‖δq‖ + ‖δu‖)_{B^{N/2-1}} along a refinement sequence.
struct ConvergenceReport {
    std::vector<int> levels;          // Friedrichs n or points per dim
    std::vector<double> differences;  // between entries k and k+1
    std::vector<double> ratios;       // successive difference ratios
    std::vector<double> energy_final; // E(T) per entry
    bool monotone = false;
};

ConvergenceReport friedrichs_convergence(const Field& q0, const Field& u0, const PhysicalLaws& laws,
                                         const std::vector<int>& levels, const EvolveOptions& opts);
// Same data placed on each grid (band-limited data are resolution independent), n unbounded.
// laws_for builds the laws on a given grid.
ConvergenceReport resolution_convergence(const std::vector<GridPtr>& grids, const std::vector<Field>& q0,
                                         const std::vector<Field>& u0,
                                         const std::function<PhysicalLaws(const GridPtr&)>& laws_for,
                                         const EvolveOptions& opts);

// ‖K(ρ)‖ / ‖q‖ in the given Besov space at one state (ρ = ρ̄(1+q), K truncated by the 2/3 rule).
double composition_constant(const Field& q, const PhysicalLaws& laws, const BesovSpec& spec, const DyadicPartition& P);

}  // namespace swbesov
