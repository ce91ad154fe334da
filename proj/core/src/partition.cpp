#include "swbesov/partition.hpp"

#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

namespace {
double smooth_step_piece(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
}  // namespace

double lp_chi(double r) {
    constexpr double lo = 3.0 / 4.0;
    constexpr double hi = 4.0 / 3.0;
    if (r <= lo) return 1.0;
    if (r >= hi) return 0.0;
    double t = (r - lo) / (hi - lo);
    double a = smooth_step_piece(1.0 - t);
    double b = smooth_step_piece(t);
    return a / (a + b);
}

double lp_bump(double r) { return lp_chi(0.5 * r) - lp_chi(r); }

DyadicPartition build_partition(const GridPtr& grid) {
    const double lo = grid->box_frequency();
    const double hi = grid->max_frequency();
    int l_min = static_cast<int>(std::floor(std::log2(0.75 * lo)));
    int l_max = static_cast<int>(std::ceil(std::log2(hi * 4.0 / 3.0) - 1.0));
    // Guard against log2 rounding at exact powers of two.
    while (std::ldexp(lo, -l_min) < 4.0 / 3.0) --l_min;
    while (std::ldexp(hi, -(l_max + 1)) > 0.75) ++l_max;
    return build_partition(grid, l_min, l_max);
}

DyadicPartition build_partition(const GridPtr& grid, int l_min, int l_max) {
    if (l_max < l_min) throw Error(ErrorKind::out_of_range, "empty block range");
    DyadicPartition P;
    P.grid_ = grid;
    P.l_min_ = l_min;
    P.l_max_ = l_max;
    P.entries_.resize(static_cast<std::size_t>(l_max - l_min + 1));
    auto r = grid->xi_norm();
    P.low_remainder_.assign(grid->spectral_size(), 0.0);
    for (std::size_t i = 1; i < grid->spectral_size(); ++i) {
        double total = 0.0;
        // Only blocks with 2^l·3/4 < r < 2^l·8/3 can be active.
        int first = std::max(l_min, static_cast<int>(std::floor(std::log2(r[i] * 3.0 / 8.0))));
        int last = std::min(l_max, static_cast<int>(std::ceil(std::log2(r[i] * 4.0 / 3.0))));
        for (int l = first; l <= last; ++l) {
            double w = lp_bump(std::ldexp(r[i], -l));
            if (w == 0.0) continue;
            P.entries_[static_cast<std::size_t>(l - l_min)].push_back({static_cast<std::uint32_t>(i), w});
            total += w;
        }
        P.low_remainder_[i] = 1.0 - total;
    }
    return P;
}

std::span<const BlockEntry> DyadicPartition::entries(int l) const {
    if (!contains(l)) throw Error(ErrorKind::out_of_range, "block index " + std::to_string(l) + " outside partition");
    return entries_[static_cast<std::size_t>(l - l_min_)];
}

std::vector<double> DyadicPartition::mask(int l) const {
    std::vector<double> m(grid_->spectral_size(), 0.0);
    for (const auto& e : entries(l)) m[e.index] = e.weight;
    return m;
}

Field dyadic_block(const Field& f, int l, const DyadicPartition& P) {
    require_same_grid(f.grid(), *P.grid());
    auto list = P.entries(l);
    Field out(f.grid_ptr(), f.components());
    auto nyq = f.grid().nyquist();
    for (int c = 0; c < f.components(); ++c) {
        auto src = f.coefficients(c);
        auto dst = out.coefficients(c);
        for (const auto& e : list)
            if (!nyq[e.index]) dst[e.index] = e.weight * src[e.index];
    }
    return out;
}

Field low_pass(const Field& f, int l, const DyadicPartition& P) {
    Field out(f.grid_ptr(), f.components());
    for (int j = P.l_min(); j < l && j <= P.l_max(); ++j) out += dyadic_block(f, j, P);
    return out;
}

}  // namespace swbesov
