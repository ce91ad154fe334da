#include "swbesov/hodge.hpp"

#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

int omega_components(int dims) { return dims * (dims - 1) / 2; }

namespace {
int pair_index(int j, int k, int dims) {
    // (0,1) -> 0, (0,2) -> 1, (1,2) -> 2
    if (dims == 2) return 0;
    if (j == 0) return k - 1;
    return 2;
}
}  // namespace

HodgeParts hodge_split(const Field& u, MeanPolicy policy) {
    const Grid& g = u.grid();
    const int n = g.dims();
    if (u.components() != n) throw Error(ErrorKind::invalid_params, "hodge_split needs a vector field");
    HodgeParts out;
    out.mean.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        out.mean[static_cast<std::size_t>(c)] = u.mean(c);
        if (policy == MeanPolicy::reject && u.mean(c) != 0.0 && std::abs(u.mean(c)) > 1e-14 * (1.0 + sup_norm(u)))
            throw Error(ErrorKind::nonzero_mean, "velocity has a nonzero mean");
    }
    out.d = Field(u.grid_ptr(), 1);
    if (omega_components(n) > 0) out.omega = Field(u.grid_ptr(), omega_components(n));

    auto r = g.xi_norm();
    auto nyq = g.nyquist();
    auto d = out.d.coefficients(0);
    for (std::size_t i = 1; i < g.spectral_size(); ++i) {
        if (nyq[i]) continue;
        const double inv = 1.0 / r[i];
        Complex acc{};
        for (int c = 0; c < n; ++c) acc += Complex(0.0, g.xi(c)[i]) * u.coefficients(c)[i];
        d[i] = acc * inv;
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                Complex w = Complex(0.0, g.xi(j)[i]) * u.coefficients(k)[i] - Complex(0.0, g.xi(k)[i]) * u.coefficients(j)[i];
                out.omega.coefficients(pair_index(j, k, n))[i] = w * inv;
            }
        }
    }
    return out;
}

std::pair<Field, Field> hodge_pieces(const Field& d, const Field& omega) {
    const Grid& g = d.grid();
    const int n = g.dims();
    Field grad_part(d.grid_ptr(), n);
    Field curl_part(d.grid_ptr(), n);
    auto r = g.xi_norm();
    auto nyq = g.nyquist();
    auto dc = d.coefficients(0);
    for (std::size_t i = 1; i < g.spectral_size(); ++i) {
        if (nyq[i]) continue;
        const double inv = 1.0 / r[i];
        for (int j = 0; j < n; ++j) {
            grad_part.coefficients(j)[i] = -Complex(0.0, g.xi(j)[i]) * dc[i] * inv;
            Complex acc{};
            // (div Ω)_j = Σ_k ∂_k Ω_kj with Ω_kj = -Ω_jk
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                Complex okj = k < j ? omega.coefficients(pair_index(k, j, n))[i]
                                    : -omega.coefficients(pair_index(j, k, n))[i];
                acc += Complex(0.0, g.xi(k)[i]) * okj;
            }
            curl_part.coefficients(j)[i] = -acc * inv;
        }
    }
    return {grad_part, curl_part};
}

Field hodge_reconstruct(const Field& d, const Field& omega, const std::vector<double>& mean) {
    auto [grad_part, curl_part] = hodge_pieces(d, omega);
    Field u = grad_part + curl_part;
    for (std::size_t c = 0; c < mean.size() && static_cast<int>(c) < u.components(); ++c)
        u.coefficients(static_cast<int>(c))[0] = mean[c];
    return u;
}

}  // namespace swbesov
