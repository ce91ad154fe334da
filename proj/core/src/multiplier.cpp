#include "swbesov/multiplier.hpp"

#include <array>
#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

MultiplierSymbol MultiplierSymbol::identity() {
    return {[](std::span<const double>) { return Complex(1.0, 0.0); }, 0.0, Complex(1.0, 0.0), "identity"};
}

MultiplierSymbol MultiplierSymbol::laplacian() {
    return {[](std::span<const double> xi) {
                double m2 = 0.0;
                for (double x : xi) m2 += x * x;
                return Complex(-m2, 0.0);
            },
            2.0, std::nullopt, "laplacian"};
}

MultiplierSymbol MultiplierSymbol::lambda_power(double s) {
    return {[s](std::span<const double> xi) {
                double m2 = 0.0;
                for (double x : xi) m2 += x * x;
                return Complex(std::pow(m2, 0.5 * s), 0.0);
            },
            s, s == 0.0 ? std::optional<Complex>(Complex(1.0, 0.0)) : std::nullopt,
            "Lambda^" + std::to_string(s)};
}

MultiplierSymbol MultiplierSymbol::derivative(int axis) {
    return {[axis](std::span<const double> xi) { return Complex(0.0, xi[static_cast<std::size_t>(axis)]); }, 1.0,
            std::nullopt, "d/dx" + std::to_string(axis)};
}

MultiplierSymbol MultiplierSymbol::product(const MultiplierSymbol& a, const MultiplierSymbol& b) {
    MultiplierSymbol m;
    auto ea = a.evaluate;
    auto eb = b.evaluate;
    m.evaluate = [ea, eb](std::span<const double> xi) { return ea(xi) * eb(xi); };
    if (a.homogeneity_degree && b.homogeneity_degree) m.homogeneity_degree = *a.homogeneity_degree + *b.homogeneity_degree;
    if (a.value_at_zero && b.value_at_zero) m.value_at_zero = *a.value_at_zero * *b.value_at_zero;
    m.label = a.label + "*" + b.label;
    return m;
}

namespace {
// Resolved value of a symbol at ξ = 0 for field f.
Complex zero_value(const Field& f, const std::optional<Complex>& at_zero, const std::optional<double>& degree,
                   const std::string& label) {
    if (at_zero) return *at_zero;
    if (degree && *degree > 0.0) return Complex{};
    for (int c = 0; c < f.components(); ++c) {
        if (std::abs(f.coefficients(c)[0]) != 0.0)
            throw Error(ErrorKind::undefined_at_zero, "symbol " + label + " has no value at xi = 0 and the field has a mean");
    }
    return Complex{};
}
}  // namespace

Field fourier_multiplier(const Field& f, const MultiplierSymbol& m) {
    const Grid& g = f.grid();
    Complex z0 = zero_value(f, m.value_at_zero, m.homogeneity_degree, m.label);
    std::vector<Complex> table(g.spectral_size());
    auto nyq = g.nyquist();
    std::array<double, 3> xi{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (nyq[i]) continue;
        if (i == 0) {
            table[i] = z0;
            continue;
        }
        for (int d = 0; d < g.dims(); ++d) xi[static_cast<std::size_t>(d)] = g.xi(d)[i];
        table[i] = m.evaluate(std::span<const double>(xi.data(), static_cast<std::size_t>(g.dims())));
        if (!std::isfinite(table[i].real()) || !std::isfinite(table[i].imag()))
            throw Error(ErrorKind::invalid_params, "symbol " + m.label + " is not finite on the lattice");
    }
    Field out = f;
    for (int c = 0; c < f.components(); ++c) {
        auto z = out.coefficients(c);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] *= table[i];
    }
    return out;
}

Field radial_multiplier(const Field& f, const std::function<double(double)>& m, double at_zero) {
    const Grid& g = f.grid();
    auto r = g.xi_norm();
    auto nyq = g.nyquist();
    std::vector<double> table(g.spectral_size());
    table[0] = at_zero;
    for (std::size_t i = 1; i < table.size(); ++i) table[i] = nyq[i] ? 0.0 : m(r[i]);
    Field out = f;
    for (int c = 0; c < f.components(); ++c) {
        auto z = out.coefficients(c);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] *= table[i];
    }
    return out;
}

}  // namespace swbesov
