#include "swbesov/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swbesov/error.hpp"

namespace swbesov {

namespace {

struct Form {
    double h11, h12, h22;  // symmetric
};

Form mode_form(const LyapunovConfig& cfg, const LinearParams& params, int l, std::size_t i, double r) {
    if (l <= cfg.l0) return {params.restoring(i, r), -cfg.K1 * r, 1.0};
    return {r * r, -r / params.nu_bar(), cfg.A};
}

double paper_k1_bound(double nu, int l0) {
    const double s = std::ldexp(1.0, 2 * l0);
    return std::min(1.0 / s, nu / (2.0 + s * nu * nu));
}

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

double lyapunov_k1_lattice_cap(const LinearParams& params, const DyadicPartition& P, int l0) {
    const auto r = P.grid()->xi_norm();
    double cap = std::numeric_limits<double>::infinity();
    for (int l = P.l_min(); l <= std::min(l0, P.l_max()); ++l)
        for (const auto& e : P.entries(l)) {
            const double b = params.restoring(e.index, r[e.index]);
            cap = std::min(cap, std::sqrt(std::max(b, 0.0)) / r[e.index]);
        }
    return cap;
}

LyapunovConfig LyapunovConfig::defaults(const LinearParams& params, const DyadicPartition& P, int l0) {
    const double nu = params.nu_bar();
    LyapunovConfig c;
    c.l0 = l0;
    c.K1 = 0.9 * std::min(paper_k1_bound(nu, l0), lyapunov_k1_lattice_cap(params, P, l0));
    c.A = 2.0 * std::max({2.0 / nu, 1.0, 1.0 / (nu * nu)});
    c.a = 1.0 / (nu * c.A);
    return c;
}

void LyapunovConfig::validate(const LinearParams& params, const DyadicPartition& P) const {
    const double nu = params.nu_bar();
    if (!(K1 > 0.0)) throw Error(ErrorKind::config_invariant, "violated K₁>0 (K₁ = " + num(K1) + ")");
    const double kb = paper_k1_bound(nu, l0);
    if (!(K1 < kb))
        throw Error(ErrorKind::config_invariant,
                    "violated K₁<min(1/2^{2l₀}, ν̄/(2+2^{2l₀}ν̄²)) (K₁ = " + num(K1) + ", bound = " + num(kb) + ")");
    if (!(A > std::max(2.0 / nu, 1.0)))
        throw Error(ErrorKind::config_invariant, "violated A>max(2/ν̄,1) (A = " + num(A) + ")");
    if (!(std::abs(a * nu * A - 1.0) <= 1e-12))
        throw Error(ErrorKind::config_invariant, "violated a=1/(ν̄A) (a = " + num(a) + ")");
    if (!(A * nu * nu > 1.0))
        throw Error(ErrorKind::config_invariant, "violated lattice positivity A>1/ν̄² (A = " + num(A) + ")");
    const double cap = lyapunov_k1_lattice_cap(params, P, l0);
    if (!(K1 < cap))
        throw Error(ErrorKind::config_invariant,
                    "violated lattice positivity δ̄−κ̄φ̂(ξ)>K₁²|ξ|² (K₁ = " + num(K1) + ", cap = " + num(cap) + ")");
}

std::vector<double> lyapunov_profile(const AcousticState& s, const LyapunovConfig& cfg, const LinearParams& params,
                                     const DyadicPartition& P) {
    const Grid& g = s.q.grid();
    require_same_grid(g, *P.grid());
    const auto r = g.xi_norm();
    const auto w = g.parseval_weight();
    const auto q = s.q.coefficients(0);
    const auto d = s.d.coefficients(0);
    std::vector<double> out(static_cast<std::size_t>(P.block_count()), 0.0);
    for (int l = P.l_min(); l <= P.l_max(); ++l) {
        double acc = 0.0;
        for (const auto& e : P.entries(l)) {
            const std::size_t i = e.index;
            const Form f = mode_form(cfg, params, l, i, r[i]);
            const double qq = std::norm(q[i]), dd = std::norm(d[i]);
            const double qd = (std::conj(q[i]) * d[i]).real();
            acc += w[i] * e.weight * e.weight * (f.h11 * qq + 2.0 * f.h12 * qd + f.h22 * dd);
        }
        out[static_cast<std::size_t>(l - P.l_min())] = std::sqrt(std::max(acc * g.volume(), 0.0));
    }
    return out;
}

std::vector<double> lyapunov_equivalence(const AcousticState& s, const LyapunovConfig& cfg, const LinearParams& params,
                                         const DyadicPartition& P) {
    const auto f = lyapunov_profile(s, cfg, params, P);
    const auto qn = block_norms(s.q, 2.0, P);
    const auto dn = block_norms(s.d, 2.0, P);
    std::vector<double> out(f.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const int l = P.l_min() + static_cast<int>(j);
        const double den = std::max(1.0, std::ldexp(1.0, l)) * qn[j] * qn[j] + dn[j] * dn[j];
        if (den > 0.0) out[j] = f[j] * f[j] / den;
    }
    return out;
}

std::vector<double> lyapunov_guaranteed_rates(const LyapunovConfig& cfg, const LinearParams& params,
                                              const DyadicPartition& P) {
    const auto r = P.grid()->xi_norm();
    std::vector<double> out(static_cast<std::size_t>(P.block_count()), std::numeric_limits<double>::infinity());
    for (int l = P.l_min(); l <= P.l_max(); ++l) {
        double& best = out[static_cast<std::size_t>(l - P.l_min())];
        for (const auto& e : P.entries(l)) {
            const std::size_t i = e.index;
            const Form h = mode_form(cfg, params, l, i, r[i]);
            const Mat2 m = acoustic_symbol(params, i, r[i]);
            // S = HM + MᵀH
            const double s11 = 2.0 * (h.h11 * m.a + h.h12 * m.c);
            const double s22 = 2.0 * (h.h12 * m.b + h.h22 * m.d);
            const double s12 = h.h11 * m.b + h.h12 * m.d + m.a * h.h12 + m.c * h.h22;
            // det(S - λH) = 0
            const double qa = h.h11 * h.h22 - h.h12 * h.h12;
            const double qb = -(s11 * h.h22 + s22 * h.h11 - 2.0 * s12 * h.h12);
            const double qc = s11 * s22 - s12 * s12;
            if (!(qa > 0.0)) {
                best = -std::numeric_limits<double>::infinity();
                continue;
            }
            const double disc = std::max(qb * qb - 4.0 * qa * qc, 0.0);
            const double top = (-qb + std::sqrt(disc)) / (2.0 * qa);
            best = std::min(best, -0.5 * top);
        }
    }
    return out;
}

}  // namespace swbesov
