#pragma once

// Small seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "swbesov/random_fields.hpp"

namespace gen {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(integer(0, int(v.size()) - 1))]; }
    std::uint64_t seed() { return eng(); }
};

struct GridDraw {
    int dims, points;
    double period;
};

// dims 1..3 with sizes kept small in 3D
inline GridDraw grid(Rng& r) {
    const int dims = r.integer(1, 3);
    const std::vector<int> sizes = dims == 3 ? std::vector<int>{8, 16, 32} : std::vector<int>{16, 32, 64, 128};
    return {dims, r.pick(sizes), r.real(0.5, 20.0)};
}

inline swbesov::CorpusSpec corpus(Rng& r, int max_band) {
    swbesov::CorpusSpec s;
    s.band = r.integer(1, max_band);
    s.gamma = r.real(-0.5, 2.0);
    s.min_mode = r.integer(0, 1);
    return s;
}

}  // namespace gen
