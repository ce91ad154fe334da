#pragma once

#include <vector>

#include "swbesov/acoustic.hpp"
#include "swbesov/besov.hpp"
#include "swbesov/partition.hpp"

namespace swbesov {

// Blocks l <= l0 use the low-frequency functional
//   f_l² = (b q̃_l, q̃_l) + ‖d̃_l‖² - 2K1(Λq̃_l, d̃_l),   b = δ̄ - κ̄φ̂ + κ_reg|ξ|²,
// blocks l > l0 the high-frequency one
//   f_l² = ‖Λq̃_l‖² + A‖d̃_l‖² - (2/ν̄)(Λq̃_l, d̃_l).
struct LyapunovConfig {
    int l0 = 0;
    double K1 = 0.0;
    double A = 0.0;
    double a = 0.0;
    double alpha = 0.0;  // filled in by the damping fit

    // K1 = 0.9·min(2^{-2l0}, ν̄/(2+2^{2l0}ν̄²), lattice cap), A = 2·max(2/ν̄, 1, 1/ν̄²), a = 1/(ν̄A).
    static LyapunovConfig defaults(const LinearParams& params, const DyadicPartition& P, int l0 = 0);
    void validate(const LinearParams& params, const DyadicPartition& P) const;
};

// Largest K1 keeping every low-block quadratic form positive definite on the lattice.
double lyapunov_k1_lattice_cap(const LinearParams& params, const DyadicPartition& P, int l0);

std::vector<double> lyapunov_profile(const AcousticState& s, const LyapunovConfig& cfg, const LinearParams& params,
                                     const DyadicPartition& P);

// f_l² / (max(1, 2^l)‖q̃_l‖² + ‖d̃_l‖²) per block; NaN for empty blocks.
std::vector<double> lyapunov_equivalence(const AcousticState& s, const LyapunovConfig& cfg, const LinearParams& params,
                                         const DyadicPartition& P);

// Per block, the largest ρ with f_l(t) <= e^{-ρt} f_l(0) guaranteed by the per-mode
// forms: min over the block's modes of -λ_max(H⁻¹(HM + MᵀH))/2. Negative entries mean
// the functional is not dissipative on that block.
std::vector<double> lyapunov_guaranteed_rates(const LyapunovConfig& cfg, const LinearParams& params,
                                              const DyadicPartition& P);

}  // namespace swbesov
