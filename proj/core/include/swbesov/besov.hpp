#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "swbesov/partition.hpp"

namespace swbesov {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Plain space when t == s. Hybrid spaces split at block 0: exponent s for l <= 0, t for l > 0.
struct BesovSpec {
    double s = 0.0;
    double t = 0.0;
    double p = 2.0;
    double r = 1.0;

    static BesovSpec plain(double s, double p = 2.0, double r = 1.0) { return {s, s, p, r}; }
    static BesovSpec hybrid(double s, double t, double p = 2.0, double r = 1.0) { return {s, t, p, r}; }
    bool is_plain() const { return s == t; }
    void validate() const;
    std::string label() const;
};

// ‖Δ_l f‖_{L^p} for l = l_min..l_max (index l - l_min). Vector fields use the pointwise
// Euclidean norm. p = 2 is evaluated by Parseval, other p by grid quadrature.
std::vector<double> block_norms(const Field& f, double p, const DyadicPartition& P);

// r-sum of 2^{l·s}·norms[l] for plain specs, split sum (as in hybrid_norm) otherwise.
double weighted_block_sum(std::span<const double> norms, int l_min, const BesovSpec& spec);
// Always the hybrid form: r-sum over l <= 0 with exponent s plus r-sum over l > 0 with t.
double split_block_sum(std::span<const double> norms, int l_min, const BesovSpec& spec);

double besov_norm(const Field& f, const BesovSpec& spec, const DyadicPartition& P);
double hybrid_norm(const Field& f, const BesovSpec& spec, const DyadicPartition& P);

// L^p norm on the torus (p = ∞: grid max).
double lp_norm(const Field& f, double p);

}  // namespace swbesov
