#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "swbesov/field.hpp"

namespace swbesov {

struct MultiplierSymbol {
    std::function<Complex(std::span<const double> xi)> evaluate;
    std::optional<double> homogeneity_degree;
    std::optional<Complex> value_at_zero;
    std::string label;

    static MultiplierSymbol identity();
    static MultiplierSymbol laplacian();                 // -|ξ|²
    static MultiplierSymbol lambda_power(double s);      // |ξ|^s
    static MultiplierSymbol derivative(int axis);        // iξ_axis
    static MultiplierSymbol product(const MultiplierSymbol& a, const MultiplierSymbol& b);
};

// Applies m to every component. Nyquist modes are zeroed. At ξ = 0 the value is
// value_at_zero if given, 0 for positive degree, and an error for other symbols
// unless the field is mean-free there.
Field fourier_multiplier(const Field& f, const MultiplierSymbol& m);

// Same contract for radial real symbols, evaluated on |ξ| without std::function
// dispatch per component.
Field radial_multiplier(const Field& f, const std::function<double(double)>& m, double at_zero);

}  // namespace swbesov
