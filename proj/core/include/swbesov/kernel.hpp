#pragma once

#include <memory>
#include <vector>

#include "swbesov/field.hpp"

namespace swbesov {

struct CapillaryKernel {
    Field physical_samples;
    std::vector<double> spectral_hat;  // φ̂ per spectral index, φ̂(0) = 1
    double sup_hat = 0.0;              // max over the lattice of |φ̂|
    double sigma = 0.0;
    std::string label;

    const Grid& grid() const { return physical_samples.grid(); }
};

using KernelPtr = std::shared_ptr<const CapillaryKernel>;

// Periodized Gaussian of width sigma (default L/16), renormalized to unit discrete mass.
KernelPtr gaussian_kernel(const GridPtr& grid, double sigma = 0.0);
// φ̂ ≡ 1: convolution is the identity.
KernelPtr dirac_kernel(const GridPtr& grid);

Field convolve_kernel(const Field& f, const CapillaryKernel& phi);

}  // namespace swbesov
