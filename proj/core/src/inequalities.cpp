#include "swbesov/inequalities.hpp"

#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

InequalityReport make_report(std::string label, double lhs, double rhs, double c_max) {
    InequalityReport rep;
    rep.label = std::move(label);
    rep.lhs = lhs;
    rep.rhs = rhs;
    if (rhs > 0.0)
        rep.ratio = lhs / rhs;
    else
        rep.ratio = lhs > 0.0 ? kInf : 0.0;
    rep.pass = rep.ratio <= c_max;
    return rep;
}

const char* to_string(ProductLaw law) {
    switch (law) {
        case ProductLaw::algebra: return "algebra";
        case ProductLaw::hybrid_bilinear: return "hybrid_bilinear";
        case ProductLaw::limit_endpoint: return "limit_endpoint";
    }
    return "?";
}

InequalityReport verify_product_laws(const Field& u, const Field& v, ProductLaw law, const ProductLawParams& prm,
                                     const DyadicPartition& P) {
    if (u.components() != 1 || v.components() != 1)
        throw Error(ErrorKind::invalid_params, "product laws are checked on scalar fields");
    const double np = u.grid().dims() / prm.p;
    Field uv = dealiased_product(u, v);
    switch (law) {
        case ProductLaw::algebra: {
            BesovSpec sp = BesovSpec::hybrid(prm.s, prm.t, prm.p, prm.r);
            double lhs = hybrid_norm(uv, sp, P);
            double rhs = sup_norm(u) * hybrid_norm(v, sp, P) + sup_norm(v) * hybrid_norm(u, sp, P);
            return make_report("algebra " + sp.label(), lhs, rhs, prm.c_max);
        }
        case ProductLaw::hybrid_bilinear: {
            BesovSpec target = BesovSpec::hybrid(prm.s1 + prm.s2 - np, prm.t1 + prm.t2 - np, prm.p, prm.r);
            double lhs = hybrid_norm(uv, target, P);
            double rhs = hybrid_norm(u, BesovSpec::hybrid(prm.s1, prm.t1, prm.p, prm.r), P) *
                         hybrid_norm(v, BesovSpec::hybrid(prm.s2, prm.t2, prm.p, kInf), P);
            return make_report("hybrid_bilinear " + target.label(), lhs, rhs, prm.c_max);
        }
        case ProductLaw::limit_endpoint: {
            if (prm.p < 2.0 || !(prm.s > -np && prm.s <= np))
                throw Error(ErrorKind::invalid_params, "limit_endpoint needs p >= 2 and -N/p < s <= N/p");
            double lhs = besov_norm(uv, BesovSpec::plain(-np, prm.p, kInf), P);
            double rhs = besov_norm(u, BesovSpec::plain(prm.s, prm.p, 1.0), P) *
                         besov_norm(v, BesovSpec::plain(-prm.s, prm.p, kInf), P);
            return make_report("limit_endpoint", lhs, rhs, prm.c_max);
        }
    }
    throw Error(ErrorKind::invalid_params, "unknown product law");
}

std::pair<double, double> log_interpolation(const Field& f, double s, double eps, double p, const DyadicPartition& P) {
    if (!(eps > 0.0)) throw Error(ErrorKind::invalid_params, "log_interpolation needs eps > 0");
    auto n = block_norms(f, p, P);
    double lhs = weighted_block_sum(n, P.l_min(), BesovSpec::plain(s, p, 1.0));
    double mid = weighted_block_sum(n, P.l_min(), BesovSpec::plain(s, p, kInf));
    if (mid == 0.0) return {0.0, 0.0};
    double lo = weighted_block_sum(n, P.l_min(), BesovSpec::plain(s - eps, p, kInf));
    double hi = weighted_block_sum(n, P.l_min(), BesovSpec::plain(s + eps, p, kInf));
    double rhs = (1.0 + eps) / eps * mid * (1.0 + std::log((lo + hi) / mid));
    return {lhs, rhs};
}

}  // namespace swbesov
