#include "swbesov/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

namespace {
KernelPtr finish(Field samples, double sigma, std::string label) {
    auto k = std::make_shared<CapillaryKernel>();
    const Grid& g = samples.grid();
    k->sigma = sigma;
    k->label = std::move(label);
    k->spectral_hat.resize(g.spectral_size());
    // Continuous transform of the periodic kernel: L^N times its Fourier coefficient.
    const double vol = g.volume();
    auto c = samples.coefficients(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        k->spectral_hat[i] = vol * c[i].real();
        k->sup_hat = std::max(k->sup_hat, std::abs(k->spectral_hat[i]));
    }
    k->physical_samples = std::move(samples);
    return k;
}
}  // namespace

KernelPtr gaussian_kernel(const GridPtr& grid, double sigma) {
    const double L = grid->period();
    if (sigma <= 0.0) sigma = L / 16.0;
    const int dims = grid->dims();
    // Images farther than ~6 sigma contribute below double precision.
    const int images = static_cast<int>(std::ceil(6.0 * sigma / L)) + 1;
    RealBuffer values(grid->physical_size());
    double mass = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto x = grid->point(i);
        double v = 0.0;
        for (int a = -images; a <= images; ++a) {
            for (int b = (dims > 1 ? -images : 0); b <= (dims > 1 ? images : 0); ++b) {
                for (int c = (dims > 2 ? -images : 0); c <= (dims > 2 ? images : 0); ++c) {
                    double r2 = 0.0;
                    std::array<int, 3> m{a, b, c};
                    for (int d = 0; d < dims; ++d) {
                        double y = x[static_cast<std::size_t>(d)] - m[static_cast<std::size_t>(d)] * L;
                        r2 += y * y;
                    }
                    v += std::exp(-0.5 * r2 / (sigma * sigma));
                }
            }
        }
        values[i] = v;
        mass += v;
    }
    mass *= grid->cell_volume();
    for (auto& v : values) v /= mass;
    return finish(Field::scalar_from_physical(grid, values), sigma, "gaussian");
}

KernelPtr dirac_kernel(const GridPtr& grid) {
    RealBuffer values(grid->physical_size(), 0.0);
    values[0] = 1.0 / grid->cell_volume();
    return finish(Field::scalar_from_physical(grid, values), 0.0, "dirac");
}

Field convolve_kernel(const Field& f, const CapillaryKernel& phi) {
    require_same_grid(f.grid(), phi.grid());
    Field out = f;
    auto nyq = f.grid().nyquist();
    for (int c = 0; c < f.components(); ++c) {
        auto z = out.coefficients(c);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = nyq[i] ? Complex{} : phi.spectral_hat[i] * z[i];
    }
    return out;
}

}  // namespace swbesov
