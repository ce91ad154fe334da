#pragma once

#include <cstdint>
#include <vector>

#include "swbesov/laws.hpp"

namespace swbesov {

// Spectral indicator of the annulus 1/n ≤ |ξ| ≤ n. n = 0 keeps every nonzero
// frequency. Nyquist modes are always dropped.
struct FriedrichsLevel {
    int n = 0;
    GridPtr grid;
    std::vector<std::uint8_t> mask;

    bool keeps(std::size_t spectral_index) const { return mask[spectral_index] != 0; }
};

FriedrichsLevel make_friedrichs(const GridPtr& grid, int n);
Field friedrichs_project(const Field& f, const FriedrichsLevel& level);
void friedrichs_project_inplace(Field& f, const FriedrichsLevel& level);

struct SolutionState {
    Field q;  // (ρ - ρ̄)/ρ̄, mean included
    Field u;  // velocity, mean included
    double t = 0.0;

    AcousticState acoustic() const;  // (q, d, Ω) with the velocity mean dropped
    std::vector<double> velocity_mean() const;
};

struct NonlinearTerms {
    Field F1;  // J_n(-div(qu))
    Field G1;  // J_n Λ⁻¹div G
    Field H1;  // J_n Λ⁻¹curl G, same entry layout as the Hodge Ω; empty in 1D
    Field G;   // full velocity nonlinearity, dealiased, unprojected
    std::vector<double> mean_u_rate;  // d/dt of the velocity mean
    double mean_q_rate = 0.0;
    // diagnostics from the physical-space pass
    double density_min = 0.0;  // min of 1+q
    double density_max = 0.0;
    double speed_max = 0.0;
};

// ∂_t u = μ̄Δu + (μ̄+λ̄)∇div u - δ̄∇q + κ̄φ∗∇q + G with
// G = -u·∇u + 𝒜(ρ,u) - K(ρ)∇q. Compositions are evaluated on the grid and truncated.
// Throws vacuum_guard if 1+q drops below 1/4 anywhere.
NonlinearTerms nonlinear_rhs(const Field& q, const Field& u, const PhysicalLaws& laws, const FriedrichsLevel& level);
inline NonlinearTerms nonlinear_rhs(const SolutionState& s, const PhysicalLaws& laws, const FriedrichsLevel& level) {
    return nonlinear_rhs(s.q, s.u, laws, level);
}

inline constexpr double kVacuumFloor = 0.25;

}  // namespace swbesov
