#include "swbesov/acoustic.hpp"

#include <cmath>
#include <sstream>

#include "swbesov/error.hpp"
#include "swbesov/parallel.hpp"

namespace swbesov {

std::array<std::complex<double>, 2> eigenvalues(const Mat2& m) {
    const double half = 0.5 * m.trace();
    const double disc = half * half - m.det();
    if (disc >= 0.0) {
        const double g = std::sqrt(disc);
        // larger-magnitude root first, the other from the product to avoid cancellation
        const double big = half >= 0.0 ? half + g : half - g;
        const double small = big != 0.0 ? m.det() / big : 0.0;
        return {std::complex<double>(big, 0.0), std::complex<double>(small, 0.0)};
    }
    const double w = std::sqrt(-disc);
    return {std::complex<double>(half, w), std::complex<double>(half, -w)};
}

Mat2 expm2(const Mat2& m, double t) {
    // exp(tM) = f0 I + f1 M
    const double half = 0.5 * m.trace();
    const double disc = half * half - m.det();
    const double x = disc * t * t;
    double f0, f1;
    if (std::abs(x) < 1e-3) {
        // exp(tM) = e^{half t} (C I + S (M - half I)), C = cosh(γt), S = sinh(γt)/γ, γ² = disc
        const double c = 1.0 + x / 2.0 * (1.0 + x / 12.0 * (1.0 + x / 30.0 * (1.0 + x / 56.0)));
        const double s = t * (1.0 + x / 6.0 * (1.0 + x / 20.0 * (1.0 + x / 42.0 * (1.0 + x / 72.0))));
        const double e = std::exp(half * t);
        f0 = e * (c - half * s);
        f1 = e * s;
    } else if (disc > 0.0) {
        auto ev = eigenvalues(m);
        const double l1 = ev[0].real(), l2 = ev[1].real();
        const double e1 = std::exp(l1 * t), e2 = std::exp(l2 * t);
        const double gap = l1 - l2;
        // (e1 - e2)/gap via expm1 to keep accuracy when the exponents are close
        f1 = e2 * std::expm1(gap * t) / gap;
        f0 = (l1 * e2 - l2 * e1) / gap;
    } else {
        const double w = std::sqrt(-disc);
        const double e = std::exp(half * t);
        const double c = std::cos(w * t), s = std::sin(w * t) / w;
        f0 = e * (c - half * s);
        f1 = e * s;
    }
    return {f0 + f1 * m.a, f1 * m.b, f1 * m.c, f0 + f1 * m.d};
}

double LinearParams::kernel_hat(std::size_t i) const {
    if (kappa_bar == 0.0 || !kernel) return 1.0;
    return kernel->spectral_hat[i];
}

double LinearParams::restoring(std::size_t i, double r) const {
    return delta_bar - kappa_bar * kernel_hat(i) + kappa_reg * r * r;
}

void LinearParams::validate(double min_gap) const {
    if (!(nu_bar() > 0.0)) {
        std::ostringstream os;
        os << "violated ν̄>0 (ν̄ = 2μ̄+λ̄ = " << nu_bar() << ")";
        throw Error(ErrorKind::config_invariant, os.str());
    }
    if (kappa_reg < 0.0) throw Error(ErrorKind::config_invariant, "violated κ_reg≥0");
    if (kappa_bar != 0.0 && !kernel) throw Error(ErrorKind::config_invariant, "κ̄≠0 needs a capillary kernel");
    const double sup = kernel ? kernel->sup_hat : 1.0;
    const double gap = delta_bar - kappa_bar * sup;
    if (!(min_gap > 0.0) || !(gap >= min_gap)) {
        std::ostringstream os;
        os << "violated δ̄−κ̄‖φ̂‖_{L^∞}≥c>0 (δ̄−κ̄·sup φ̂ = " << gap << ", c = " << min_gap << ")";
        throw Error(ErrorKind::config_invariant, os.str());
    }
    if (kernel) {
        // exhaustive lattice check of the damping sign
        const auto& hat = kernel->spectral_hat;
        for (std::size_t i = 0; i < hat.size(); ++i) {
            if (delta_bar - kappa_bar * hat[i] < gap - 1e-12) {
                std::ostringstream os;
                os << "violated δ̄−κ̄φ̂(ξ)≥δ̄−κ̄‖φ̂‖_{L^∞} at spectral index " << i;
                throw Error(ErrorKind::config_invariant, os.str());
            }
        }
    }
}

Mat2 acoustic_symbol(const LinearParams& p, std::size_t i, double r) {
    return {0.0, -r, r * p.restoring(i, r), -p.nu_bar() * r * r};
}

AcousticState AcousticState::zeros(const GridPtr& grid, bool with_omega) {
    AcousticState s;
    s.q = Field(grid, 1);
    s.d = Field(grid, 1);
    if (with_omega && omega_components(grid->dims()) > 0) s.omega = Field(grid, omega_components(grid->dims()));
    return s;
}

AcousticState AcousticState::from_velocity(const Field& q, const Field& u) {
    auto h = hodge_split(u, MeanPolicy::carry);
    AcousticState s;
    s.q = q;
    s.d = std::move(h.d);
    s.omega = std::move(h.omega);
    return s;
}

Field AcousticState::velocity() const {
    const int comps = omega_components(q.grid().dims());
    if (omega.empty() && comps > 0) return hodge_reconstruct(d, Field(q.grid_ptr(), comps));
    return hodge_reconstruct(d, omega);
}

AcousticState& AcousticState::axpy(double a, const AcousticState& x) {
    q.axpy(a, x.q);
    d.axpy(a, x.d);
    if (!omega.empty() && !x.omega.empty()) omega.axpy(a, x.omega);
    return *this;
}

AcousticPropagator::AcousticPropagator(const GridPtr& grid, const LinearParams& params, double h)
    : grid_(grid), h_(h) {
    const std::size_t m = grid->spectral_size();
    e_.resize(m);
    heat_.resize(m);
    auto r = grid->xi_norm();
    auto nyq = grid->nyquist();
    parallel_for(m, [&](std::size_t i) {
        if (nyq[i]) {
            e_[i] = Mat2{};
            heat_[i] = 0.0;
        } else if (i == 0) {
            e_[i] = Mat2{1.0, 0.0, 0.0, 0.0};
            heat_[i] = 0.0;
        } else {
            e_[i] = expm2(acoustic_symbol(params, i, r[i]), h);
            heat_[i] = std::exp(-params.mu_bar * r[i] * r[i] * h);
        }
    });
}

void AcousticPropagator::apply(AcousticState& s) const {
    require_same_grid(*grid_, s.q.grid());
    auto q = s.q.coefficients(0);
    auto d = s.d.coefficients(0);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        const Mat2& e = e_[i];
        const Complex qi = q[i], di = d[i];
        q[i] = e.a * qi + e.b * di;
        d[i] = e.c * qi + e.d * di;
    }
    for (int c = 0; c < s.omega.components(); ++c) {
        auto w = s.omega.coefficients(c);
        for (std::size_t i = 0; i < heat_.size(); ++i) w[i] *= heat_[i];
    }
}

AcousticState propagate_exact(const AcousticState& s, const LinearParams& params, double t) {
    AcousticState out = s;
    if (t == 0.0) return out;
    AcousticPropagator(s.q.grid_ptr(), params, t).apply(out);
    return out;
}

}  // namespace swbesov
