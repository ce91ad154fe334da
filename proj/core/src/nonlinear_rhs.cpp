#include "swbesov/nonlinear_rhs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swbesov/error.hpp"

namespace swbesov {

FriedrichsLevel make_friedrichs(const GridPtr& grid, int n) {
    if (n < 0) throw Error(ErrorKind::invalid_params, "Friedrichs level must be ≥ 1 (or 0 for no truncation)");
    FriedrichsLevel lv;
    lv.n = n;
    lv.grid = grid;
    const auto r = grid->xi_norm();
    const auto nyq = grid->nyquist();
    lv.mask.assign(grid->spectral_size(), 0);
    const double lo = n > 0 ? 1.0 / n : 0.0;
    const double hi = n > 0 ? static_cast<double>(n) : std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < lv.mask.size(); ++i)
        lv.mask[i] = (!nyq[i] && r[i] >= lo * (1.0 - 1e-12) && r[i] <= hi * (1.0 + 1e-12)) ? 1 : 0;
    return lv;
}

void friedrichs_project_inplace(Field& f, const FriedrichsLevel& level) {
    require_same_grid(f.grid(), *level.grid);
    for (int c = 0; c < f.components(); ++c) {
        auto z = f.coefficients(c);
        for (std::size_t i = 0; i < z.size(); ++i)
            if (!level.mask[i]) z[i] = 0.0;
    }
}

Field friedrichs_project(const Field& f, const FriedrichsLevel& level) {
    Field out = f;
    friedrichs_project_inplace(out, level);
    return out;
}

AcousticState SolutionState::acoustic() const {
    AcousticState s = AcousticState::from_velocity(q, u);
    if (s.omega.empty() && omega_components(q.grid().dims()) > 0)
        s.omega = Field(q.grid_ptr(), omega_components(q.grid().dims()));
    return s;
}

std::vector<double> SolutionState::velocity_mean() const {
    std::vector<double> m;
    for (int c = 0; c < u.components(); ++c) m.push_back(u.mean(c));
    return m;
}

namespace {

struct Workspace {
    const Grid& g;
    std::size_t np, ns;
    std::span<const std::uint8_t> nyq, keep;

    explicit Workspace(const Grid& grid)
        : g(grid), np(grid.physical_size()), ns(grid.spectral_size()), nyq(grid.nyquist()), keep(grid.dealias()) {}

    RealBuffer to_physical(const Complex* c) const {
        RealBuffer out(np);
        g.inverse(c, out.data());
        return out;
    }
    // ∂_axis of a coefficient array, in physical space
    RealBuffer derivative(std::span<const Complex> c, int axis) const {
        ComplexBuffer tmp(ns);
        auto xi = g.xi(axis);
        for (std::size_t i = 0; i < ns; ++i) tmp[i] = nyq[i] ? Complex{} : Complex(0.0, xi[i]) * c[i];
        return to_physical(tmp.data());
    }
    ComplexBuffer to_dealiased(const RealBuffer& v) const {
        ComplexBuffer out(ns);
        g.forward(v.data(), out.data());
        for (std::size_t i = 0; i < ns; ++i)
            if (!keep[i] || nyq[i]) out[i] = 0.0;
        return out;
    }
    // pointwise composition, then 2/3-rule truncation
    void truncate(RealBuffer& v) const {
        ComplexBuffer c = to_dealiased(v);
        g.inverse(c.data(), v.data());
    }
};

}  // namespace

NonlinearTerms nonlinear_rhs(const Field& q, const Field& u, const PhysicalLaws& laws, const FriedrichsLevel& level) {
    const Grid& g = q.grid();
    require_same_grid(g, u.grid());
    require_same_grid(g, *level.grid);
    const int N = g.dims();
    if (q.components() != 1 || u.components() != N)
        throw Error(ErrorKind::invalid_params, "nonlinear_rhs needs scalar q and N-component u");
    Workspace w(g);
    const std::size_t np = w.np, ns = w.ns;
    const LinearParams lp = laws.linear_params();

    NonlinearTerms out;
    RealBuffer qp = q.physical(0);
    out.density_min = 1.0 + *std::min_element(qp.begin(), qp.end());
    out.density_max = 1.0 + *std::max_element(qp.begin(), qp.end());
    if (!(out.density_min >= kVacuumFloor)) {
        std::ostringstream os;
        os << "1+q reached " << out.density_min << " (< 1/4)";
        throw Error(ErrorKind::vacuum_guard, os.str());
    }

    std::vector<RealBuffer> up(static_cast<std::size_t>(N)), gq(static_cast<std::size_t>(N));
    // du[i][j] = ∂_j u_i
    std::vector<std::vector<RealBuffer>> du(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        up[static_cast<std::size_t>(i)] = u.physical(i);
        gq[static_cast<std::size_t>(i)] = w.derivative(q.coefficients(0), i);
        for (int j = 0; j < N; ++j) du[static_cast<std::size_t>(i)].push_back(w.derivative(u.coefficients(i), j));
    }
    for (std::size_t x = 0; x < np; ++x) {
        double s = 0.0;
        for (int i = 0; i < N; ++i) s += up[static_cast<std::size_t>(i)][x] * up[static_cast<std::size_t>(i)][x];
        out.speed_max = std::max(out.speed_max, std::sqrt(s));
    }

    RealBuffer mu(np), la(np), inv_rho(np), K(np), divu(np, 0.0);
    for (std::size_t x = 0; x < np; ++x) {
        const double rho = laws.rho_bar * (1.0 + qp[x]);
        mu[x] = laws.mu(rho);
        la[x] = laws.lambda(rho);
        inv_rho[x] = 1.0 / rho;
        K[x] = laws.K(rho);
        for (int i = 0; i < N; ++i) divu[x] += du[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][x];
    }
    w.truncate(mu);
    w.truncate(la);
    w.truncate(inv_rho);
    w.truncate(K);

    // div τ with τ_ij = μ(∂_i u_j + ∂_j u_i) + δ_ij λ div u
    std::vector<ComplexBuffer> div_tau(static_cast<std::size_t>(N), ComplexBuffer(ns, Complex{}));
    RealBuffer tau(np);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            const auto& a = du[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];  // ∂_i u_j
            const auto& b = du[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];  // ∂_j u_i
            for (std::size_t x = 0; x < np; ++x) tau[x] = mu[x] * (a[x] + b[x]) + (i == j ? la[x] * divu[x] : 0.0);
            ComplexBuffer th = w.to_dealiased(tau);
            auto xi_i = g.xi(i), xi_j = g.xi(j);
            auto& ti = div_tau[static_cast<std::size_t>(i)];
            auto& tj = div_tau[static_cast<std::size_t>(j)];
            for (std::size_t k = 0; k < ns; ++k) {
                if (w.nyq[k]) continue;
                ti[k] += Complex(0.0, xi_j[k]) * th[k];
                if (i != j) tj[k] += Complex(0.0, xi_i[k]) * th[k];
            }
        }

    auto r = g.xi_norm();
    std::vector<ComplexBuffer> G(static_cast<std::size_t>(N));
    RealBuffer gi(np), qu(np);
    Field flux(q.grid_ptr(), N);
    for (int i = 0; i < N; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        RealBuffer dt = w.to_physical(div_tau[ui].data());
        for (std::size_t x = 0; x < np; ++x) {
            double adv = 0.0;
            for (int j = 0; j < N; ++j) adv += up[static_cast<std::size_t>(j)][x] * du[ui][static_cast<std::size_t>(j)][x];
            gi[x] = inv_rho[x] * dt[x] - adv - K[x] * gq[ui][x];
            qu[x] = qp[x] * up[ui][x];
        }
        G[ui] = w.to_dealiased(gi);
        ComplexBuffer quh = w.to_dealiased(qu);
        std::copy(quh.begin(), quh.end(), flux.coefficients(i).begin());
    }
    // remove μ̄Δu + (μ̄+λ̄)∇div u, which the linear propagator carries
    {
        ComplexBuffer xiu(ns, Complex{});
        for (int j = 0; j < N; ++j) {
            auto xi = g.xi(j);
            auto uj = u.coefficients(j);
            for (std::size_t k = 0; k < ns; ++k) xiu[k] += xi[k] * uj[k];
        }
        const double a = lp.mu_bar, b = lp.mu_bar + lp.lambda_bar;
        for (int i = 0; i < N; ++i) {
            auto xi = g.xi(i);
            auto ui = u.coefficients(i);
            auto& Gi = G[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < ns; ++k) {
                if (!w.keep[k] || w.nyq[k]) continue;
                Gi[k] -= -a * r[k] * r[k] * ui[k] - b * xi[k] * xiu[k];
            }
        }
    }

    out.G = Field(q.grid_ptr(), N);
    for (int i = 0; i < N; ++i) {
        std::copy(G[static_cast<std::size_t>(i)].begin(), G[static_cast<std::size_t>(i)].end(), out.G.coefficients(i).begin());
        out.mean_u_rate.push_back(G[static_cast<std::size_t>(i)][0].real());
    }

    out.F1 = divergence(flux);
    out.F1 *= -1.0;
    out.mean_q_rate = out.F1.mean(0);
    friedrichs_project_inplace(out.F1, level);

    out.G1 = Field(q.grid_ptr(), 1);
    {
        auto dst = out.G1.coefficients(0);
        for (int j = 0; j < N; ++j) {
            auto xi = g.xi(j);
            const auto& Gj = G[static_cast<std::size_t>(j)];
            for (std::size_t k = 1; k < ns; ++k) dst[k] += Complex(0.0, xi[k] / r[k]) * Gj[k];
        }
        friedrichs_project_inplace(out.G1, level);
    }
    const int oc = omega_components(N);
    if (oc > 0) {
        out.H1 = Field(q.grid_ptr(), oc);
        int c = 0;
        for (int j = 0; j < N; ++j)
            for (int k = j + 1; k < N; ++k, ++c) {
                auto dst = out.H1.coefficients(c);
                auto xj = g.xi(j), xk = g.xi(k);
                const auto& Gj = G[static_cast<std::size_t>(j)];
                const auto& Gk = G[static_cast<std::size_t>(k)];
                for (std::size_t m = 1; m < ns; ++m)
                    dst[m] = Complex(0.0, 1.0 / r[m]) * (xj[m] * Gk[m] - xk[m] * Gj[m]);
            }
        friedrichs_project_inplace(out.H1, level);
    }
    return out;
}

}  // namespace swbesov
