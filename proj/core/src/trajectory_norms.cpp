#include "swbesov/trajectory.hpp"

#include <algorithm>
#include <cmath>

namespace swbesov {

std::vector<double> trapezoid_weights(std::span<const double> times) {
    std::vector<double> w(times.size(), 0.0);
    for (std::size_t j = 1; j < times.size(); ++j) {
        double h = times[j] - times[j - 1];
        w[j - 1] += 0.5 * h;
        w[j] += 0.5 * h;
    }
    return w;
}

double time_norm(std::span<const double> times, std::span<const double> values, double rho) {
    if (values.empty()) throw Error(ErrorKind::empty_input, "empty time series");
    if (std::isinf(rho)) return *std::max_element(values.begin(), values.end());
    auto w = trapezoid_weights(times);
    double acc = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) acc += w[j] * std::pow(values[j], rho);
    return std::pow(acc, 1.0 / rho);
}

BlockSeries block_series(const TrajectorySeries& traj, double p, const DyadicPartition& P) {
    if (traj.empty()) throw Error(ErrorKind::empty_input, "empty trajectory");
    BlockSeries s;
    s.l_min = P.l_min();
    for (std::size_t j = 0; j < traj.size(); ++j) s.push(traj.times[j], block_norms(traj.states[j], p, P));
    return s;
}

double chemin_lerner_norm(const BlockSeries& series, double rho, const BesovSpec& spec) {
    if (series.times.empty()) throw Error(ErrorKind::empty_input, "empty trajectory");
    const std::size_t blocks = series.norms.front().size();
    std::vector<double> per_block(blocks);
    std::vector<double> column(series.times.size());
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t j = 0; j < series.times.size(); ++j) column[j] = series.norms[j][b];
        per_block[b] = time_norm(series.times, column, rho);
    }
    return weighted_block_sum(per_block, series.l_min, spec);
}

double chemin_lerner_norm(const TrajectorySeries& traj, double rho, const BesovSpec& spec, const DyadicPartition& P) {
    return chemin_lerner_norm(block_series(traj, spec.p, P), rho, spec);
}

double time_space_norm(const BlockSeries& series, double rho, const BesovSpec& spec) {
    if (series.times.empty()) throw Error(ErrorKind::empty_input, "empty trajectory");
    std::vector<double> values(series.times.size());
    for (std::size_t j = 0; j < values.size(); ++j) values[j] = weighted_block_sum(series.norms[j], series.l_min, spec);
    return time_norm(series.times, values, rho);
}

double time_space_norm(const TrajectorySeries& traj, double rho, const BesovSpec& spec, const DyadicPartition& P) {
    return time_space_norm(block_series(traj, spec.p, P), rho, spec);
}

}  // namespace swbesov
