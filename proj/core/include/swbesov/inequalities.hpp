#pragma once

#include <string>
#include <utility>

#include "swbesov/besov.hpp"

namespace swbesov {

struct InequalityReport {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;  // right-hand side without the constant
    double ratio = 0.0;
    bool pass = true;
};

InequalityReport make_report(std::string label, double lhs, double rhs, double c_max);

enum class ProductLaw { algebra, hybrid_bilinear, limit_endpoint };

struct ProductLawParams {
    double p = 2.0;
    double r = 1.0;
    double s = 1.0;   // algebra: target (s,t); limit_endpoint: the s of B^s_{p,1} x B^{-s}_{p,∞}
    double t = 1.0;
    double s1 = 0.5, t1 = 1.0, s2 = 0.5, t2 = 1.0;  // hybrid_bilinear
    double c_max = 100.0;
};

// algebra:          ‖uv‖_{B̃^{s,t}_{p,r}} ≤ C(‖u‖_∞‖v‖_{B̃^{s,t}} + ‖v‖_∞‖u‖_{B̃^{s,t}})
// hybrid_bilinear:  ‖uv‖_{B̃^{s1+s2-N/p, t1+t2-N/p}_{p,r}} ≤ C‖u‖_{B̃^{s1,t1}_{p,r}}‖v‖_{B̃^{s2,t2}_{p,∞}}
// limit_endpoint:   ‖uv‖_{B^{-N/p}_{p,∞}} ≤ C‖u‖_{B^s_{p,1}}‖v‖_{B^{-s}_{p,∞}}
// The product is formed pointwise (means included) and truncated by the 2/3 rule.
InequalityReport verify_product_laws(const Field& u, const Field& v, ProductLaw law, const ProductLawParams& prm,
                                     const DyadicPartition& P);

const char* to_string(ProductLaw law);

// (lhs, rhs) with lhs = ‖f‖_{B^s_{p,1}} and
// rhs = (1+ε)/ε ‖f‖_{B^s_{p,∞}} (1 + log((‖f‖_{B^{s-ε}_{p,∞}} + ‖f‖_{B^{s+ε}_{p,∞}})/‖f‖_{B^s_{p,∞}})).
std::pair<double, double> log_interpolation(const Field& f, double s, double eps, double p, const DyadicPartition& P);

}  // namespace swbesov
