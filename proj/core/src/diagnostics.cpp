#include "swbesov/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

double partition_unity_deviation(const DyadicPartition& P) {
    const Grid& g = *P.grid();
    std::vector<double> sum(g.spectral_size(), 0.0);
    for (int l = P.l_min(); l <= P.l_max(); ++l)
        for (const auto& e : P.entries(l)) sum[e.index] += e.weight;
    double dev = 0.0;
    for (std::size_t i = 1; i < sum.size(); ++i) dev = std::max(dev, std::abs(sum[i] - 1.0));
    return dev;
}

double block_reconstruction_error(const Field& f, const DyadicPartition& P) {
    Field acc(f.grid_ptr(), f.components());
    for (int l = P.l_min(); l <= P.l_max(); ++l) acc += dyadic_block(f, l, P);
    for (int c = 0; c < f.components(); ++c) acc.coefficients(c)[0] = f.coefficients(c)[0];
    const double ref = sup_norm(f);
    if (ref == 0.0) return sup_norm(acc);
    return sup_norm(acc - f) / ref;
}

double derivative_norm_ratio(const Field& f, double s, const DyadicPartition& P, double p, double r) {
    if (f.components() != 1) throw Error(ErrorKind::invalid_params, "derivative ratio needs a scalar field");
    const double den = besov_norm(f, BesovSpec::plain(s, p, r), P);
    if (den == 0.0) throw Error(ErrorKind::undefined_at_zero, "zero field");
    return besov_norm(gradient(f), BesovSpec::plain(s - 1.0, p, r), P) / den;
}

}  // namespace swbesov
