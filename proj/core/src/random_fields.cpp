#include "swbesov/random_fields.hpp"

#include <cmath>
#include <random>

#include "swbesov/error.hpp"

namespace swbesov {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Field random_field(const GridPtr& grid, int components, std::uint64_t seed, const CorpusSpec& spec) {
    const int dims = grid->dims();
    const int band = spec.band > 0 ? spec.band : grid->dealias_cutoff();
    if (band >= grid->points_per_dim() / 2)
        throw Error(ErrorKind::out_of_range, "corpus band must stay below the Nyquist index");
    const int width = 2 * band + 1;
    std::size_t count = 1;
    for (int d = 0; d < dims; ++d) count *= static_cast<std::size_t>(width);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> raw(count * static_cast<std::size_t>(components));
    for (auto& z : raw) {
        double re = normal(rng);
        double im = normal(rng);
        z = Complex(re, im);
    }
    auto flat = [&](const std::array<int, 3>& k) {
        std::size_t idx = 0;
        for (int d = 0; d < dims; ++d) idx = idx * static_cast<std::size_t>(width) + static_cast<std::size_t>(k[static_cast<std::size_t>(d)] + band);
        return idx;
    };

    Field f(grid, components);
    const double k0 = grid->box_frequency();
    std::array<int, 3> k{0, 0, 0};
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rem = idx;
        for (int d = dims - 1; d >= 0; --d) {
            k[static_cast<std::size_t>(d)] = static_cast<int>(rem % static_cast<std::size_t>(width)) - band;
            rem /= static_cast<std::size_t>(width);
        }
        if (k[static_cast<std::size_t>(dims - 1)] < 0) continue;
        int kmax = 0;
        double r2 = 0.0;
        for (int d = 0; d < dims; ++d) {
            kmax = std::max(kmax, std::abs(k[static_cast<std::size_t>(d)]));
            r2 += k[static_cast<std::size_t>(d)] * k[static_cast<std::size_t>(d)];
        }
        if (kmax == 0 || kmax < spec.min_mode) continue;
        std::array<int, 3> mk{-k[0], -k[1], -k[2]};
        const double env = std::pow(k0 * std::sqrt(r2), -spec.gamma);
        bool conj = false;
        std::size_t s = grid->spectral_index(k, conj);
        for (int c = 0; c < components; ++c) {
            std::size_t off = count * static_cast<std::size_t>(c);
            Complex z = 0.5 * (raw[off + idx] + std::conj(raw[off + flat(mk)]));
            f.coefficients(c)[s] = env * z;
        }
    }
    return f;
}

std::vector<Field> random_corpus(const GridPtr& grid, int components, std::uint64_t seed, std::size_t count,
                                 const CorpusSpec& spec) {
    std::vector<Field> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_field(grid, components, derive_seed(seed, i), spec));
    return out;
}

Field cosine_mode(const GridPtr& grid, const std::array<int, 3>& k, double amplitude, double phase) {
    Field f(grid, 1);
    bool conj = false;
    std::size_t s = grid->spectral_index(k, conj);
    Complex c = 0.5 * amplitude * std::polar(1.0, conj ? -phase : phase);
    f.coefficients(0)[s] += c;
    // Modes on the k_last = 0 plane are stored together with their mirror image.
    auto last = static_cast<std::size_t>(grid->dims() - 1);
    if (k[last] == 0) {
        std::array<int, 3> mk{-k[0], -k[1], -k[2]};
        std::size_t t = grid->spectral_index(mk, conj);
        f.coefficients(0)[t] += std::conj(c);
    } else {
        f.coefficients(0)[s] = c;
    }
    return f;
}

}  // namespace swbesov
