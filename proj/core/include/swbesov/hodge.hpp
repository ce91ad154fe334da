#pragma once

#include <vector>

#include "swbesov/field.hpp"

namespace swbesov {

enum class MeanPolicy { reject, carry };

// Ω holds the N(N-1)/2 independent entries Ω_jk = Λ^{-1}(∂_j u_k - ∂_k u_j), j < k,
// ordered (0,1), (0,2), (1,2). In 1D it has no components.
struct HodgeParts {
    Field d;
    Field omega;
    std::vector<double> mean;
};

int omega_components(int dims);

HodgeParts hodge_split(const Field& u, MeanPolicy policy = MeanPolicy::reject);
// u = -Λ^{-1}∇d - Λ^{-1}div Ω + mean, with (div Ω)_j = Σ_k ∂_k Ω_kj.
Field hodge_reconstruct(const Field& d, const Field& omega, const std::vector<double>& mean = {});

// The two pieces of the reconstruction, returned separately (compressible, incompressible).
std::pair<Field, Field> hodge_pieces(const Field& d, const Field& omega);

}  // namespace swbesov
