#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swbesov/field.hpp"

namespace swbesov {

// χ = 1 on [0, 3/4], 0 on [4/3, ∞), C^∞ in between (exp(-1/x) transition).
double lp_chi(double r);
// ϕ(r) = χ(r/2) - χ(r), supported in [3/4, 8/3].
double lp_bump(double r);

struct BlockEntry {
    std::uint32_t index;
    double weight;  // ϕ(2^{-l}|ξ|)
};

class DyadicPartition {
public:
    const GridPtr& grid() const { return grid_; }
    int l_min() const { return l_min_; }
    int l_max() const { return l_max_; }
    int block_count() const { return l_max_ - l_min_ + 1; }
    bool contains(int l) const { return l >= l_min_ && l <= l_max_; }

    // Nonzero mask entries of block l.
    std::span<const BlockEntry> entries(int l) const;
    std::vector<double> mask(int l) const;
    // 1 - Σ_l mask_l on nonzero frequencies: the catch-all low block.
    std::span<const double> low_remainder() const { return low_remainder_; }

private:
    friend DyadicPartition build_partition(const GridPtr& grid);
    friend DyadicPartition build_partition(const GridPtr& grid, int l_min, int l_max);
    GridPtr grid_;
    int l_min_ = 0;
    int l_max_ = -1;
    std::vector<std::vector<BlockEntry>> entries_;
    std::vector<double> low_remainder_;
};

// Block range covering every nonzero lattice frequency, Nyquist included.
DyadicPartition build_partition(const GridPtr& grid);
DyadicPartition build_partition(const GridPtr& grid, int l_min, int l_max);

Field dyadic_block(const Field& f, int l, const DyadicPartition& P);
// S_l f = Σ_{l' < l} Δ_{l'} f (mean excluded)
Field low_pass(const Field& f, int l, const DyadicPartition& P);

}  // namespace swbesov
