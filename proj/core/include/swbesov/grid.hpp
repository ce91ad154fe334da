#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <new>
#include <span>
#include <vector>

namespace swbesov {

using Complex = std::complex<double>;

// 64-byte aligned storage so every buffer matches the alignment FFTW planned with.
template <class T>
struct AlignedAllocator {
    using value_type = T;
    AlignedAllocator() noexcept = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

    T* allocate(std::size_t n) {
        std::size_t bytes = ((n * sizeof(T) + 63) / 64) * 64;
        void* p = std::aligned_alloc(64, bytes == 0 ? 64 : bytes);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) noexcept { std::free(p); }

    template <class U>
    bool operator==(const AlignedAllocator<U>&) const noexcept { return true; }
};

using RealBuffer = std::vector<double, AlignedAllocator<double>>;
using ComplexBuffer = std::vector<Complex, AlignedAllocator<Complex>>;

class Grid;
using GridPtr = std::shared_ptr<const Grid>;

// Periodic torus [0,L)^N sampled with n points per axis. Spectral data use the
// real-to-complex half layout: shape (n, n, n/2+1) in 3D, (n, n/2+1) in 2D,
// (n/2+1) in 1D, last axis fastest.
class Grid {
public:
    ~Grid();
    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    int dims() const { return dims_; }
    int points_per_dim() const { return n_; }
    double period() const { return period_; }
    std::size_t physical_size() const { return physical_size_; }
    std::size_t spectral_size() const { return spectral_size_; }
    double spacing() const { return period_ / n_; }
    double cell_volume() const;
    double volume() const;
    double box_frequency() const;  // 2π/L
    double max_frequency() const;  // largest |ξ| on the lattice, Nyquist included
    int dealias_cutoff() const { return dealias_cutoff_; }

    std::span<const double> xi(int axis) const { return xi_[static_cast<std::size_t>(axis)]; }
    std::span<const double> xi_norm() const { return xi_norm_; }
    // 1 for modes stored once in the half layout, 2 for modes standing in for ±k.
    std::span<const double> parseval_weight() const { return weight_; }
    std::span<const std::uint8_t> nyquist() const { return nyquist_; }
    std::span<const std::uint8_t> dealias() const { return dealias_; }

    std::array<int, 3> lattice(std::size_t spectral_index) const;
    // Index of integer wavevector k in the half layout. If the last component is
    // negative the stored coefficient is that of -k and conj is set.
    std::size_t spectral_index(const std::array<int, 3>& k, bool& conj) const;
    std::array<double, 3> point(std::size_t physical_index) const;

    bool same_as(const Grid& other) const;

    // Normalized so that f(x) = Σ_k c_k exp(iξ_k·x).
    void forward(const double* in, Complex* out) const;
    void inverse(const Complex* in, double* out) const;

private:
    Grid(int dims, int n, double period);
    friend GridPtr make_grid(int dims, int points_per_dim, double period);

    int dims_;
    int n_;
    double period_;
    std::size_t physical_size_;
    std::size_t spectral_size_;
    int dealias_cutoff_;
    std::array<std::vector<double>, 3> xi_;
    std::vector<double> xi_norm_;
    std::vector<double> weight_;
    std::vector<std::uint8_t> nyquist_;
    std::vector<std::uint8_t> dealias_;

    struct Plans;
    std::unique_ptr<Plans> plans_;
};

GridPtr make_grid(int dims, int points_per_dim, double period);

void require_same_grid(const Grid& a, const Grid& b);

}  // namespace swbesov
