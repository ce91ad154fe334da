#include "swbesov/laws.hpp"

#include <cmath>
#include <sstream>

#include "swbesov/error.hpp"

namespace swbesov {

PhysicalLaws PhysicalLaws::shallow_water(const GridPtr& grid, double kappa) {
    PhysicalLaws l;
    l.rho_bar = 1.0;
    l.kappa = kappa;
    l.pressure = [](double r) { return r * r; };
    l.dpressure = [](double r) { return 2.0 * r; };
    l.mu = [](double r) { return r; };
    l.lambda = [](double) { return 0.0; };
    l.kernel = gaussian_kernel(grid);
    l.label = "shallow_water";
    return l;
}

PhysicalLaws PhysicalLaws::polytropic(const GridPtr& grid, double a, double gamma, double mu, double lambda,
                                      double kappa) {
    PhysicalLaws l;
    l.kappa = kappa;
    l.pressure = [a, gamma](double r) { return a * std::pow(r, gamma); };
    l.dpressure = [a, gamma](double r) { return a * gamma * std::pow(r, gamma - 1.0); };
    l.mu = [mu](double) { return mu; };
    l.lambda = [lambda](double) { return lambda; };
    l.kernel = gaussian_kernel(grid);
    l.label = "polytropic";
    return l;
}

LinearParams PhysicalLaws::linear_params() const {
    LinearParams p;
    p.mu_bar = mu(rho_bar) / rho_bar;
    p.lambda_bar = lambda(rho_bar) / rho_bar;
    p.delta_bar = kappa * rho_bar + dpressure(rho_bar);
    p.kappa_bar = kappa * rho_bar;
    p.kernel = kernel;
    return p;
}

double PhysicalLaws::K(double rho) const { return rho_bar * dpressure(rho) / rho - dpressure(rho_bar); }

void PhysicalLaws::validate(int dims, double rho_lo, double rho_hi, double min_gap) const {
    auto fail = [](const std::string& what, double v) {
        std::ostringstream os;
        os << "violated " << what << " (value " << v << ")";
        throw Error(ErrorKind::config_invariant, os.str());
    };
    if (!(rho_bar > 0.0)) fail("ρ̄>0", rho_bar);
    if (!(kappa >= 0.0)) fail("κ≥0", kappa);
    if (!pressure || !dpressure || !mu || !lambda) throw Error(ErrorKind::config_invariant, "incomplete physical laws");
    if (!(dpressure(rho_bar) > 0.0)) fail("P′(ρ̄)>0", dpressure(rho_bar));
    if (!(mu(rho_bar) > 0.0)) fail("μ(ρ̄)>0", mu(rho_bar));
    if (!(2.0 * mu(rho_bar) + lambda(rho_bar) > 0.0)) fail("2μ(ρ̄)+λ(ρ̄)>0", 2.0 * mu(rho_bar) + lambda(rho_bar));
    const int samples = 257;
    for (int k = 0; k < samples; ++k) {
        const double r = rho_lo + (rho_hi - rho_lo) * k / (samples - 1.0);
        if (!(mu(r) > 0.0)) fail("μ(ρ)>0 on the density band", mu(r));
        if (!(2.0 * mu(r) + dims * lambda(r) >= 0.0)) fail("2μ(ρ)+Nλ(ρ)≥0 on the density band", 2.0 * mu(r) + dims * lambda(r));
    }
    if (kappa > 0.0 && !kernel) throw Error(ErrorKind::config_invariant, "κ>0 needs a capillary kernel");
    linear_params().validate(min_gap);
}

PhysicalLaws PhysicalLaws::with_pressure_scaled(double factor) const {
    PhysicalLaws l = *this;
    auto p = pressure;
    auto dp = dpressure;
    l.pressure = [p, factor](double r) { return factor * p(r); };
    l.dpressure = [dp, factor](double r) { return factor * dp(r); };
    return l;
}

}  // namespace swbesov
