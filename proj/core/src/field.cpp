#include "swbesov/field.hpp"

#include <algorithm>
#include <cmath>

#include "swbesov/error.hpp"

namespace swbesov {

Field::Field(GridPtr grid, int components) : grid_(std::move(grid)) {
    if (!grid_) throw Error(ErrorKind::invalid_params, "field needs a grid");
    comps_.assign(static_cast<std::size_t>(components), ComplexBuffer(grid_->spectral_size(), Complex{}));
}

Field Field::from_physical(GridPtr grid, const std::vector<RealBuffer>& values) {
    Field f(grid, static_cast<int>(values.size()));
    for (std::size_t c = 0; c < values.size(); ++c) {
        if (values[c].size() != grid->physical_size())
            throw Error(ErrorKind::grid_mismatch, "sample count does not match grid");
        grid->forward(values[c].data(), f.comps_[c].data());
    }
    return f;
}

Field Field::scalar_from_physical(GridPtr grid, std::span<const double> values) {
    if (values.size() != grid->physical_size())
        throw Error(ErrorKind::grid_mismatch, "sample count does not match grid");
    Field f(grid, 1);
    grid->forward(values.data(), f.comps_[0].data());
    return f;
}

Field Field::sample(GridPtr grid, int components,
                    const std::function<double(const std::array<double, 3>&, int)>& fn) {
    std::vector<RealBuffer> values(static_cast<std::size_t>(components), RealBuffer(grid->physical_size()));
    for (std::size_t i = 0; i < grid->physical_size(); ++i) {
        auto x = grid->point(i);
        for (int c = 0; c < components; ++c) values[static_cast<std::size_t>(c)][i] = fn(x, c);
    }
    return from_physical(grid, values);
}

RealBuffer Field::physical(int c) const {
    RealBuffer out(grid_->physical_size());
    grid_->inverse(comps_[static_cast<std::size_t>(c)].data(), out.data());
    return out;
}

std::vector<RealBuffer> Field::physical_all() const {
    std::vector<RealBuffer> out;
    out.reserve(comps_.size());
    for (int c = 0; c < components(); ++c) out.push_back(physical(c));
    return out;
}

Field Field::component(int c) const {
    Field f;
    f.grid_ = grid_;
    f.comps_.push_back(comps_.at(static_cast<std::size_t>(c)));
    return f;
}

Field Field::without_mean() const {
    Field f = *this;
    for (auto& comp : f.comps_) comp[0] = 0.0;
    return f;
}

Field& Field::operator+=(const Field& other) {
    axpy(1.0, other);
    return *this;
}

Field& Field::operator-=(const Field& other) {
    axpy(-1.0, other);
    return *this;
}

Field& Field::operator*=(double a) {
    for (auto& comp : comps_)
        for (auto& z : comp) z *= a;
    return *this;
}

void Field::axpy(double a, const Field& x) {
    require_same_grid(*grid_, *x.grid_);
    if (x.components() != components()) throw Error(ErrorKind::invalid_params, "component count mismatch");
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        auto& dst = comps_[c];
        const auto& src = x.comps_[c];
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
    }
}

Field stack(const std::vector<Field>& scalars) {
    if (scalars.empty()) throw Error(ErrorKind::empty_input, "nothing to stack");
    Field out(scalars.front().grid_ptr(), static_cast<int>(scalars.size()));
    for (std::size_t c = 0; c < scalars.size(); ++c) {
        require_same_grid(out.grid(), scalars[c].grid());
        auto src = scalars[c].coefficients(0);
        std::copy(src.begin(), src.end(), out.coefficients(static_cast<int>(c)).begin());
    }
    return out;
}

double l2_inner(const Field& f, const Field& g) {
    require_same_grid(f.grid(), g.grid());
    auto w = f.grid().parseval_weight();
    double acc = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto a = f.coefficients(c);
        auto b = g.coefficients(c);
        for (std::size_t i = 0; i < a.size(); ++i) acc += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
    }
    return acc * f.grid().volume();
}

double l2_norm(const Field& f) { return std::sqrt(std::max(0.0, l2_inner(f, f))); }

double sup_norm(const Field& f) {
    if (f.components() == 1) {
        auto v = f.physical(0);
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    auto vals = f.physical_all();
    double m = 0.0;
    for (std::size_t i = 0; i < f.grid().physical_size(); ++i) {
        double s = 0.0;
        for (const auto& comp : vals) s += comp[i] * comp[i];
        m = std::max(m, s);
    }
    return std::sqrt(m);
}

Field gradient(const Field& scalar) {
    const Grid& g = scalar.grid();
    Field out(scalar.grid_ptr(), g.dims());
    auto src = scalar.coefficients(0);
    auto nyq = g.nyquist();
    for (int d = 0; d < g.dims(); ++d) {
        auto xi = g.xi(d);
        auto dst = out.coefficients(d);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = nyq[i] ? Complex{} : Complex(0.0, xi[i]) * src[i];
    }
    return out;
}

Field divergence(const Field& vector) {
    const Grid& g = vector.grid();
    if (vector.components() != g.dims()) throw Error(ErrorKind::invalid_params, "divergence needs N components");
    Field out(vector.grid_ptr(), 1);
    auto dst = out.coefficients(0);
    auto nyq = g.nyquist();
    for (int d = 0; d < g.dims(); ++d) {
        auto xi = g.xi(d);
        auto src = vector.coefficients(d);
        for (std::size_t i = 0; i < src.size(); ++i)
            if (!nyq[i]) dst[i] += Complex(0.0, xi[i]) * src[i];
    }
    return out;
}

Field laplacian(const Field& f) {
    Field out = f;
    const Grid& g = f.grid();
    auto m = g.xi_norm();
    auto nyq = g.nyquist();
    for (int c = 0; c < f.components(); ++c) {
        auto z = out.coefficients(c);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = nyq[i] ? Complex{} : -m[i] * m[i] * z[i];
    }
    return out;
}

void apply_dealias(Field& f) {
    auto keep = f.grid().dealias();
    for (int c = 0; c < f.components(); ++c) {
        auto z = f.coefficients(c);
        for (std::size_t i = 0; i < z.size(); ++i)
            if (!keep[i]) z[i] = 0.0;
    }
}

Field dealiased_product(const Field& a, const Field& b) {
    require_same_grid(a.grid(), b.grid());
    const Field& s = a.components() == 1 ? a : b;
    const Field& v = a.components() == 1 ? b : a;
    if (s.components() != 1) throw Error(ErrorKind::invalid_params, "product needs a scalar factor");
    RealBuffer sp = s.physical(0);
    std::vector<RealBuffer> prod;
    for (int c = 0; c < v.components(); ++c) {
        RealBuffer vp = v.physical(c);
        for (std::size_t i = 0; i < vp.size(); ++i) vp[i] *= sp[i];
        prod.push_back(std::move(vp));
    }
    Field out = Field::from_physical(a.grid_ptr(), prod);
    apply_dealias(out);
    return out;
}

Field resample(const Field& f, const GridPtr& target) {
    const Grid& src = f.grid();
    if (src.dims() != target->dims() || src.period() != target->period())
        throw Error(ErrorKind::grid_mismatch, "resample needs matching dimension and period");
    Field out(target, f.components());
    const int limit = std::min(src.points_per_dim(), target->points_per_dim()) / 2;
    for (std::size_t i = 0; i < src.spectral_size(); ++i) {
        auto k = src.lattice(i);
        bool inside = true;
        for (int d = 0; d < src.dims(); ++d)
            if (std::abs(k[static_cast<std::size_t>(d)]) >= limit) inside = false;
        if (!inside) continue;
        bool conj = false;
        std::size_t j = target->spectral_index(k, conj);
        for (int c = 0; c < f.components(); ++c)
            out.coefficients(c)[j] = f.coefficients(c)[i];
    }
    return out;
}

}  // namespace swbesov
