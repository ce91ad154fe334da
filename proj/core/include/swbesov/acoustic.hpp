#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "swbesov/hodge.hpp"
#include "swbesov/kernel.hpp"

namespace swbesov {

// Row-major real 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

std::array<std::complex<double>, 2> eigenvalues(const Mat2& m);
// exp(t·m), exact in closed form (no Padé). Stable for stiff real spectra.
Mat2 expm2(const Mat2& m, double t);

struct LinearParams {
    double mu_bar = 0.5;
    double lambda_bar = 0.0;
    double delta_bar = 1.0;
    double kappa_bar = 0.0;
    double kappa_reg = 0.0;
    KernelPtr kernel;  // required when kappa_bar != 0

    double nu_bar() const { return 2.0 * mu_bar + lambda_bar; }
    double kernel_hat(std::size_t spectral_index) const;
    // δ̄ - κ̄φ̂(ξ) + κ_reg|ξ|²
    double restoring(std::size_t spectral_index, double r) const;
    // Throws config_invariant naming the violated inequality.
    void validate(double min_gap = 1e-3) const;
};

// Symbol of (q, d) ↦ (∂_t q, ∂_t d) for the unforced system: [[0, -r], [r·b, -ν̄r²]].
Mat2 acoustic_symbol(const LinearParams& p, std::size_t spectral_index, double r);

struct AcousticState {
    Field q;
    Field d;
    Field omega;  // may be empty; evolves by the heat flow with μ̄

    static AcousticState zeros(const GridPtr& grid, bool with_omega = false);
    static AcousticState from_velocity(const Field& q, const Field& u);
    // Velocity rebuilt from d and Ω (mean-free).
    Field velocity() const;
    const Grid& grid() const { return q.grid(); }
    AcousticState& axpy(double a, const AcousticState& x);
};

// Per-mode propagator table for a fixed step h. Nyquist modes map to zero,
// the zero mode keeps q's mean and zeros d and Ω.
class AcousticPropagator {
public:
    AcousticPropagator(const GridPtr& grid, const LinearParams& params, double h);
    double step() const { return h_; }
    void apply(AcousticState& s) const;

private:
    GridPtr grid_;
    double h_;
    std::vector<Mat2> e_;
    std::vector<double> heat_;
};

// Exact solution of the unforced system at time t.
AcousticState propagate_exact(const AcousticState& s, const LinearParams& params, double t);

}  // namespace swbesov
