#pragma once

#include <functional>
#include <string>

#include "swbesov/acoustic.hpp"

namespace swbesov {

struct PhysicalLaws {
    double rho_bar = 1.0;
    double kappa = 0.0;
    std::function<double(double)> pressure;
    std::function<double(double)> dpressure;
    std::function<double(double)> mu;
    std::function<double(double)> lambda;
    KernelPtr kernel;
    std::string label;

    // P = ρ², μ = ρ, λ = 0 with the default Gaussian kernel on grid.
    static PhysicalLaws shallow_water(const GridPtr& grid, double kappa = 0.0);
    // P(ρ) = a·ρ^γ with constant μ, λ.
    static PhysicalLaws polytropic(const GridPtr& grid, double a, double gamma, double mu, double lambda,
                                   double kappa = 0.0);

    // μ̄ = μ(ρ̄)/ρ̄, λ̄ = λ(ρ̄)/ρ̄, δ̄ = κρ̄ + P'(ρ̄), κ̄ = κρ̄
    LinearParams linear_params() const;
    // K(ρ) = ρ̄P'(ρ)/ρ - P'(ρ̄)
    double K(double rho) const;

    // Theorem hypotheses at ρ̄, 2μ+Nλ ≥ 0 and μ > 0 sampled on [rho_lo, rho_hi], and the
    // linearized damping gap. Throws config_invariant naming the inequality.
    void validate(int dims, double rho_lo, double rho_hi, double min_gap = 1e-3) const;

    // P → factor·P (and P' with it).
    PhysicalLaws with_pressure_scaled(double factor) const;
};

}  // namespace swbesov
