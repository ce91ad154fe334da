#include "swbesov/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

#include "swbesov/error.hpp"

namespace swbesov {

namespace {
// FFTW planning is not thread safe; execution with new-array calls is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

int wrap(int i, int n) { return i <= n / 2 ? i : i - n; }
}  // namespace

struct Grid::Plans {
    fftw_plan forward = nullptr;
    fftw_plan inverse = nullptr;
    int alignment_real = 0;
    int alignment_complex = 0;
};

Grid::Grid(int dims, int n, double period)
    : dims_(dims), n_(n), period_(period), plans_(std::make_unique<Plans>()) {
    physical_size_ = 1;
    for (int d = 0; d < dims_; ++d) physical_size_ *= static_cast<std::size_t>(n_);
    spectral_size_ = physical_size_ / static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ / 2 + 1);
    // Largest K with 3K < n: products of modes |k| <= K never alias back into |k| <= K.
    dealias_cutoff_ = (n_ - 1) / 3;

    const double k0 = box_frequency();
    for (int d = 0; d < dims_; ++d) xi_[static_cast<std::size_t>(d)].resize(spectral_size_);
    xi_norm_.resize(spectral_size_);
    weight_.resize(spectral_size_);
    nyquist_.resize(spectral_size_);
    dealias_.resize(spectral_size_);
    for (std::size_t idx = 0; idx < spectral_size_; ++idx) {
        auto k = lattice(idx);
        double m2 = 0.0;
        bool nyq = false;
        bool keep = true;
        for (int d = 0; d < dims_; ++d) {
            double x = k0 * k[static_cast<std::size_t>(d)];
            xi_[static_cast<std::size_t>(d)][idx] = x;
            m2 += x * x;
            int a = std::abs(k[static_cast<std::size_t>(d)]);
            if (a == n_ / 2) nyq = true;
            if (a > dealias_cutoff_) keep = false;
        }
        xi_norm_[idx] = std::sqrt(m2);
        int last = k[static_cast<std::size_t>(dims_ - 1)];
        weight_[idx] = (last == 0 || last == n_ / 2) ? 1.0 : 2.0;
        nyquist_[idx] = nyq ? 1 : 0;
        dealias_[idx] = keep ? 1 : 0;
    }

    RealBuffer rtmp(physical_size_);
    ComplexBuffer ctmp(spectral_size_);
    std::array<int, 3> shape{n_, n_, n_};
    std::lock_guard<std::mutex> lock(planner_mutex());
    plans_->forward = fftw_plan_dft_r2c(dims_, shape.data(), rtmp.data(),
                                        reinterpret_cast<fftw_complex*>(ctmp.data()), FFTW_ESTIMATE);
    plans_->inverse = fftw_plan_dft_c2r(dims_, shape.data(), reinterpret_cast<fftw_complex*>(ctmp.data()),
                                        rtmp.data(), FFTW_ESTIMATE);
    plans_->alignment_real = fftw_alignment_of(rtmp.data());
    plans_->alignment_complex = fftw_alignment_of(reinterpret_cast<double*>(ctmp.data()));
}

Grid::~Grid() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plans_->forward) fftw_destroy_plan(plans_->forward);
    if (plans_->inverse) fftw_destroy_plan(plans_->inverse);
}

double Grid::cell_volume() const { return std::pow(spacing(), dims_); }
double Grid::volume() const { return std::pow(period_, dims_); }
double Grid::box_frequency() const { return 2.0 * std::numbers::pi / period_; }
double Grid::max_frequency() const { return box_frequency() * (n_ / 2) * std::sqrt(static_cast<double>(dims_)); }

std::array<int, 3> Grid::lattice(std::size_t idx) const {
    std::array<int, 3> k{0, 0, 0};
    const std::size_t half = static_cast<std::size_t>(n_ / 2 + 1);
    const std::size_t nn = static_cast<std::size_t>(n_);
    switch (dims_) {
        case 1:
            k[0] = static_cast<int>(idx);
            break;
        case 2:
            k[0] = wrap(static_cast<int>(idx / half), n_);
            k[1] = static_cast<int>(idx % half);
            break;
        default:
            k[0] = wrap(static_cast<int>(idx / (half * nn)), n_);
            k[1] = wrap(static_cast<int>((idx / half) % nn), n_);
            k[2] = static_cast<int>(idx % half);
            break;
    }
    return k;
}

std::size_t Grid::spectral_index(const std::array<int, 3>& kin, bool& conj) const {
    std::array<int, 3> k = kin;
    conj = false;
    if (k[static_cast<std::size_t>(dims_ - 1)] < 0) {
        for (auto& c : k) c = -c;
        conj = true;
    }
    for (int d = 0; d < dims_; ++d) {
        if (std::abs(k[static_cast<std::size_t>(d)]) > n_ / 2)
            throw Error(ErrorKind::out_of_range, "wavevector outside the grid lattice");
    }
    auto mod = [this](int i) { return static_cast<std::size_t>(((i % n_) + n_) % n_); };
    const std::size_t half = static_cast<std::size_t>(n_ / 2 + 1);
    const std::size_t nn = static_cast<std::size_t>(n_);
    switch (dims_) {
        case 1: return static_cast<std::size_t>(k[0]);
        case 2: return mod(k[0]) * half + static_cast<std::size_t>(k[1]);
        default: return (mod(k[0]) * nn + mod(k[1])) * half + static_cast<std::size_t>(k[2]);
    }
}

std::array<double, 3> Grid::point(std::size_t idx) const {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    const double h = spacing();
    const std::size_t nn = static_cast<std::size_t>(n_);
    for (int d = dims_ - 1; d >= 0; --d) {
        x[static_cast<std::size_t>(d)] = h * static_cast<double>(idx % nn);
        idx /= nn;
    }
    return x;
}

bool Grid::same_as(const Grid& other) const {
    return this == &other || (dims_ == other.dims_ && n_ == other.n_ && period_ == other.period_);
}

void Grid::forward(const double* in, Complex* out) const {
    const double scale = 1.0 / static_cast<double>(physical_size_);
    auto* cout = reinterpret_cast<fftw_complex*>(out);
    bool aligned = fftw_alignment_of(const_cast<double*>(in)) == plans_->alignment_real &&
                   fftw_alignment_of(reinterpret_cast<double*>(out)) == plans_->alignment_complex;
    if (aligned) {
        // r2c plans preserve their input by default.
        fftw_execute_dft_r2c(plans_->forward, const_cast<double*>(in), cout);
    } else {
        RealBuffer rin(in, in + physical_size_);
        ComplexBuffer cbuf(spectral_size_);
        fftw_execute_dft_r2c(plans_->forward, rin.data(), reinterpret_cast<fftw_complex*>(cbuf.data()));
        std::copy(cbuf.begin(), cbuf.end(), out);
    }
    for (std::size_t i = 0; i < spectral_size_; ++i) out[i] *= scale;
}

void Grid::inverse(const Complex* in, double* out) const {
    // c2r overwrites its input, so always work on a copy.
    ComplexBuffer scratch(in, in + spectral_size_);
    if (fftw_alignment_of(out) == plans_->alignment_real) {
        fftw_execute_dft_c2r(plans_->inverse, reinterpret_cast<fftw_complex*>(scratch.data()), out);
    } else {
        RealBuffer rbuf(physical_size_);
        fftw_execute_dft_c2r(plans_->inverse, reinterpret_cast<fftw_complex*>(scratch.data()), rbuf.data());
        std::copy(rbuf.begin(), rbuf.end(), out);
    }
}

GridPtr make_grid(int dims, int points_per_dim, double period) {
    if (dims < 1 || dims > 3) throw Error(ErrorKind::invalid_dimension, "dims must be 1, 2 or 3");
    if (points_per_dim < 8 || (points_per_dim & (points_per_dim - 1)) != 0)
        throw Error(ErrorKind::non_power_of_two, "points_per_dim must be a power of two >= 8");
    if (!(period > 0.0) || !std::isfinite(period))
        throw Error(ErrorKind::non_positive_period, "period must be positive");
    return GridPtr(new Grid(dims, points_per_dim, period));
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (!a.same_as(b)) throw Error(ErrorKind::grid_mismatch, "fields live on different grids");
}

}  // namespace swbesov
