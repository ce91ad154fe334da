#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "swbesov/field.hpp"

namespace swbesov {

// Band-limited Gaussian fields with amplitude envelope |ξ|^{-γ} (≈ 2^{-γl} on block l).
// Coefficients depend only on (seed, band, gamma, period, dims), never on n, so the same
// field can be placed on grids of different resolution.
struct CorpusSpec {
    int band = 0;         // modes with max_i |k_i| <= band; 0 picks the grid's 2/3-rule cutoff
    double gamma = 1.0;
    int min_mode = 1;     // drop modes with max_i |k_i| < min_mode
};

Field random_field(const GridPtr& grid, int components, std::uint64_t seed, const CorpusSpec& spec = {});
std::vector<Field> random_corpus(const GridPtr& grid, int components, std::uint64_t seed, std::size_t count,
                                 const CorpusSpec& spec = {});

// a·cos(2π k·x/L + phase)
Field cosine_mode(const GridPtr& grid, const std::array<int, 3>& k, double amplitude = 1.0, double phase = 0.0);

// Seed for member i of a corpus; decorrelates nearby seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace swbesov
