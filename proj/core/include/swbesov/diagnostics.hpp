#pragma once

#include "swbesov/besov.hpp"

namespace swbesov {

// max over ξ ≠ 0 of |Σ_l ϕ(2^{-l}|ξ|) - 1|
double partition_unity_deviation(const DyadicPartition& P);
// ‖Σ_l Δ_l f + mean - f‖_∞ / ‖f‖_∞
double block_reconstruction_error(const Field& f, const DyadicPartition& P);
// ‖∇f‖_{B^{s-1}_{p,r}} / ‖f‖_{B^s_{p,r}} for scalar f
double derivative_norm_ratio(const Field& f, double s, const DyadicPartition& P, double p = 2.0, double r = 1.0);

}  // namespace swbesov
