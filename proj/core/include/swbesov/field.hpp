#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "swbesov/grid.hpp"

namespace swbesov {

// Real field with one or more components, stored as normalized Fourier
// coefficients in the half layout. The physical view is produced on demand.
class Field {
public:
    Field() = default;
    Field(GridPtr grid, int components);

    static Field from_physical(GridPtr grid, const std::vector<RealBuffer>& values);
    static Field scalar_from_physical(GridPtr grid, std::span<const double> values);
    // fn(x, component) -> value at grid point x
    static Field sample(GridPtr grid, int components,
                        const std::function<double(const std::array<double, 3>&, int)>& fn);

    bool empty() const { return comps_.empty(); }
    int components() const { return static_cast<int>(comps_.size()); }
    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }

    std::span<Complex> coefficients(int c = 0) { return comps_[static_cast<std::size_t>(c)]; }
    std::span<const Complex> coefficients(int c = 0) const { return comps_[static_cast<std::size_t>(c)]; }
    RealBuffer physical(int c = 0) const;
    std::vector<RealBuffer> physical_all() const;

    double mean(int c = 0) const { return comps_[static_cast<std::size_t>(c)][0].real(); }
    Field component(int c) const;
    Field without_mean() const;

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double a);
    void axpy(double a, const Field& x);  // this += a x

    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(double s, Field a) { return a *= s; }

private:
    GridPtr grid_;
    std::vector<ComplexBuffer> comps_;
};

Field stack(const std::vector<Field>& scalars);

// L² and inner products over the torus, via Parseval.
double l2_norm(const Field& f);
double l2_inner(const Field& f, const Field& g);
// Max over grid points of the pointwise Euclidean norm.
double sup_norm(const Field& f);

Field gradient(const Field& scalar);
Field divergence(const Field& vector);
Field laplacian(const Field& f);
// Pointwise product with 2/3-rule truncation of the result (scalar * any).
Field dealiased_product(const Field& a, const Field& b);
// Zero all modes outside the 2/3-rule band.
void apply_dealias(Field& f);
// Spectral interpolation/truncation onto another grid with the same period and dimension.
Field resample(const Field& f, const GridPtr& target);

}  // namespace swbesov
