#include "swbesov/besov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swbesov/error.hpp"

namespace swbesov {

void BesovSpec::validate() const {
    if (!(p >= 1.0) || !(r >= 1.0)) throw Error(ErrorKind::invalid_params, "Besov indices need p >= 1 and r >= 1");
}

std::string BesovSpec::label() const {
    auto num = [](double x) {
        if (std::isinf(x)) return std::string("inf");
        std::ostringstream os;
        os << x;
        return os.str();
    };
    if (is_plain()) return "B^" + num(s) + "_" + num(p) + "," + num(r);
    return "Bt^" + num(s) + "," + num(t) + "_" + num(p) + "," + num(r);
}

namespace {
double quadrature_norm(const std::vector<RealBuffer>& comps, double p, double cell) {
    const std::size_t n = comps.front().size();
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (const auto& c : comps) s += c[i] * c[i];
            m = std::max(m, s);
        }
        return std::sqrt(m);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (const auto& c : comps) s += c[i] * c[i];
        acc += std::pow(std::sqrt(s), p);
    }
    return std::pow(acc * cell, 1.0 / p);
}
}  // namespace

double lp_norm(const Field& f, double p) {
    if (p == 2.0) return l2_norm(f);
    return quadrature_norm(f.physical_all(), p, f.grid().cell_volume());
}

std::vector<double> block_norms(const Field& f, double p, const DyadicPartition& P) {
    require_same_grid(f.grid(), *P.grid());
    std::vector<double> out(static_cast<std::size_t>(P.block_count()), 0.0);
    const Grid& g = f.grid();
    auto w = g.parseval_weight();
    auto nyq = g.nyquist();
    if (p == 2.0) {
        const double vol = g.volume();
        for (int l = P.l_min(); l <= P.l_max(); ++l) {
            double acc = 0.0;
            for (const auto& e : P.entries(l)) {
                if (nyq[e.index]) continue;
                double m2 = 0.0;
                for (int c = 0; c < f.components(); ++c) m2 += std::norm(f.coefficients(c)[e.index]);
                acc += w[e.index] * e.weight * e.weight * m2;
            }
            out[static_cast<std::size_t>(l - P.l_min())] = std::sqrt(acc * vol);
        }
        return out;
    }
    for (int l = P.l_min(); l <= P.l_max(); ++l) {
        if (P.entries(l).empty()) continue;
        Field b = dyadic_block(f, l, P);
        out[static_cast<std::size_t>(l - P.l_min())] = quadrature_norm(b.physical_all(), p, g.cell_volume());
    }
    return out;
}

namespace {
double r_sum(std::span<const double> norms, int l_min, double exponent, double r) {
    double acc = 0.0;
    const bool sup = std::isinf(r);
    for (std::size_t i = 0; i < norms.size(); ++i) {
        double v = std::pow(2.0, (l_min + static_cast<int>(i)) * exponent) * norms[i];
        acc = sup ? std::max(acc, v) : acc + std::pow(v, r);
    }
    return sup ? acc : std::pow(acc, 1.0 / r);
}
}  // namespace

double split_block_sum(std::span<const double> norms, int l_min, const BesovSpec& spec) {
    // blocks l <= 0 carry exponent s, blocks l > 0 carry t
    std::size_t n_low = static_cast<std::size_t>(std::clamp(1 - l_min, 0, static_cast<int>(norms.size())));
    double low = r_sum(norms.subspan(0, n_low), l_min, spec.s, spec.r);
    double high = r_sum(norms.subspan(n_low), l_min + static_cast<int>(n_low), spec.t, spec.r);
    return low + high;
}

double weighted_block_sum(std::span<const double> norms, int l_min, const BesovSpec& spec) {
    if (spec.is_plain()) return r_sum(norms, l_min, spec.s, spec.r);
    return split_block_sum(norms, l_min, spec);
}

double besov_norm(const Field& f, const BesovSpec& spec, const DyadicPartition& P) {
    spec.validate();
    if (!spec.is_plain()) throw Error(ErrorKind::invalid_params, "besov_norm needs s == t; use hybrid_norm");
    auto n = block_norms(f, spec.p, P);
    return r_sum(n, P.l_min(), spec.s, spec.r);
}

double hybrid_norm(const Field& f, const BesovSpec& spec, const DyadicPartition& P) {
    spec.validate();
    auto n = block_norms(f, spec.p, P);
    return split_block_sum(n, P.l_min(), spec);
}

}  // namespace swbesov
