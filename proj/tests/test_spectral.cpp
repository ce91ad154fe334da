#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "generators.hpp"
#include "swbesov/error.hpp"
#include "swbesov/hodge.hpp"
#include "swbesov/kernel.hpp"
#include "swbesov/multiplier.hpp"
#include "swbesov/snapshot.hpp"

using namespace swbesov;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace {

double max_diff(const Field& a, const Field& b) { return sup_norm(a - b); }

}  // namespace

TEST(Grid, RejectsBadShapes) {
    EXPECT_THROW(make_grid(4, 16, 1.0), Error);
    EXPECT_THROW(make_grid(2, 24, 1.0), Error);
    EXPECT_THROW(make_grid(2, 16, 0.0), Error);
    try {
        make_grid(2, 16, -1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::non_positive_period);
    }
}

TEST(Grid, DealiasCutoffFollowsTwoThirdsRule) {
    EXPECT_EQ(make_grid(2, 128, kTwoPi)->dealias_cutoff(), 42);
    EXPECT_EQ(make_grid(1, 256, kTwoPi)->dealias_cutoff(), 85);
}

TEST(Field, RoundTripThroughPhysicalSpace) {
    gen::Rng r(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto d = gen::grid(r);
        auto g = make_grid(d.dims, d.points, d.period);
        Field f = random_field(g, d.dims, r.seed(), gen::corpus(r, g->dealias_cutoff()));
        Field back = Field::from_physical(g, f.physical_all());
        EXPECT_LT(max_diff(f, back), 1e-12 * (1.0 + sup_norm(f))) << d.dims << "D n=" << d.points;
    }
}

TEST(Field, ParsevalMatchesQuadrature) {
    gen::Rng r(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = gen::grid(r);
        auto g = make_grid(d.dims, d.points, d.period);
        Field f = random_field(g, 1, r.seed(), gen::corpus(r, g->dealias_cutoff()));
        auto v = f.physical();
        double s = 0.0;
        for (double x : v) s += x * x;
        const double quad = std::sqrt(s / double(v.size()) * std::pow(d.period, d.dims));
        EXPECT_NEAR(l2_norm(f), quad, 1e-12 * (1.0 + quad));
    }
}

TEST(Field, CosineModeAmplitude) {
    auto g = make_grid(2, 32, kTwoPi);
    Field f = cosine_mode(g, {3, 1, 0}, 2.0);
    EXPECT_NEAR(sup_norm(f), 2.0, 1e-12);
    EXPECT_NEAR(l2_norm(f), std::sqrt(2.0) * kTwoPi, 1e-12);  // ‖2cos‖² = 2·|T²|
}

TEST(Field, GradientOfSine) {
    const double L = 3.0;
    auto g = make_grid(2, 64, L);
    const double k = kTwoPi / L;
    Field f = Field::sample(g, 1, [&](const std::array<double, 3>& x, int) { return std::sin(2 * k * x[0] + k * x[1]); });
    Field exact = Field::sample(g, 2, [&](const std::array<double, 3>& x, int c) {
        return (c == 0 ? 2 * k : k) * std::cos(2 * k * x[0] + k * x[1]);
    });
    EXPECT_LT(max_diff(gradient(f), exact), 1e-12);
    EXPECT_LT(sup_norm(divergence(exact) - laplacian(f)), 1e-11);
}

TEST(Field, DealiasedProductOfResolvedModes) {
    auto g = make_grid(1, 64, kTwoPi);
    Field a = cosine_mode(g, {3, 0, 0});
    Field b = cosine_mode(g, {5, 0, 0});
    // cos3x cos5x = (cos8x + cos2x)/2
    Field exact = 0.5 * (cosine_mode(g, {8, 0, 0}) + cosine_mode(g, {2, 0, 0}));
    EXPECT_LT(max_diff(dealiased_product(a, b), exact), 1e-14);
    // 15+15 exceeds the cutoff of 21 and is removed
    Field c = cosine_mode(g, {15, 0, 0});
    Field sq = dealiased_product(c, c);
    EXPECT_NEAR(sq.mean(), 0.5, 1e-14);
    EXPECT_LT(sup_norm(sq.without_mean()), 1e-14);
}

TEST(Field, ResampleKeepsBandLimitedData) {
    gen::Rng r(3);
    for (int dims = 1; dims <= 2; ++dims) {
        auto g64 = make_grid(dims, 64, kTwoPi);
        auto g256 = make_grid(dims, 256, kTwoPi);
        CorpusSpec cs;
        cs.band = 10;
        const auto seed = r.seed();
        Field coarse = random_field(g64, 1, seed, cs);
        Field fine = random_field(g256, 1, seed, cs);
        EXPECT_LT(max_diff(resample(coarse, g256), fine), 1e-12);
        EXPECT_LT(max_diff(resample(fine, g64), coarse), 1e-12);
    }
}

TEST(Multiplier, SymbolIdentities) {
    auto g = make_grid(2, 32, kTwoPi);
    Field f = random_field(g, 1, 5, {.band = 8, .gamma = 1.0, .min_mode = 1});
    Field lap = fourier_multiplier(f, MultiplierSymbol::laplacian());
    EXPECT_LT(max_diff(lap, laplacian(f)), 1e-12);
    Field l2 = fourier_multiplier(f, MultiplierSymbol::lambda_power(2.0));
    EXPECT_LT(max_diff(l2, -1.0 * lap), 1e-12);
    Field dx = fourier_multiplier(f, MultiplierSymbol::derivative(0));
    EXPECT_LT(max_diff(dx, gradient(f).component(0)), 1e-12);
    // Λ^{-1}Λ = id on mean-free data
    Field back = fourier_multiplier(fourier_multiplier(f, MultiplierSymbol::lambda_power(1.0)),
                                    MultiplierSymbol::lambda_power(-1.0));
    EXPECT_LT(max_diff(back, f), 1e-12);
}

TEST(Multiplier, NegativeDegreeRejectsMean) {
    auto g = make_grid(1, 16, kTwoPi);
    Field f = cosine_mode(g, {1, 0, 0});
    f.coefficients()[0] = 1.0;
    EXPECT_THROW(fourier_multiplier(f, MultiplierSymbol::lambda_power(-1.0)), Error);
}

TEST(Hodge, SplitReconstructs) {
    gen::Rng r(21);
    for (int trial = 0; trial < 8; ++trial) {
        const int dims = r.integer(1, 3);
        auto g = make_grid(dims, dims == 3 ? 16 : 32, r.real(1.0, 8.0));
        Field u = random_field(g, dims, r.seed(), {.band = 5, .gamma = 0.5, .min_mode = 1});
        auto parts = hodge_split(u);
        EXPECT_EQ(parts.omega.components(), omega_components(dims));
        EXPECT_LT(max_diff(hodge_reconstruct(parts.d, parts.omega), u), 1e-12) << dims;
        // ‖u‖² = ‖d‖² + ‖Ω‖² for mean-free u
        const double om = parts.omega.empty() ? 0.0 : l2_norm(parts.omega);
        const double uu = l2_norm(u) * l2_norm(u);
        EXPECT_NEAR(uu, l2_norm(parts.d) * l2_norm(parts.d) + om * om, 1e-12 * uu);
    }
}

TEST(Hodge, GradientFieldHasNoRotation) {
    auto g = make_grid(2, 32, kTwoPi);
    Field psi = random_field(g, 1, 9, {.band = 6});
    auto parts = hodge_split(gradient(psi));
    EXPECT_LT(sup_norm(parts.omega), 1e-12);
}

TEST(Hodge, MeanPolicy) {
    auto g = make_grid(2, 16, kTwoPi);
    Field u(g, 2);
    u.coefficients(0)[0] = 0.3;
    EXPECT_THROW(hodge_split(u), Error);
    auto parts = hodge_split(u, MeanPolicy::carry);
    ASSERT_EQ(parts.mean.size(), 2u);
    EXPECT_DOUBLE_EQ(parts.mean[0], 0.3);
}

TEST(Kernel, UnitMassAndBoundedSymbol) {
    for (int dims = 1; dims <= 3; ++dims) {
        auto g = make_grid(dims, dims == 3 ? 16 : 64, kTwoPi);
        auto k = gaussian_kernel(g);
        EXPECT_NEAR(k->spectral_hat[0], 1.0, 1e-12);
        EXPECT_LE(k->sup_hat, 1.0 + 1e-12);
        Field one(g, 1);
        one.coefficients()[0] = 2.5;
        EXPECT_NEAR(convolve_kernel(one, *k).mean(), 2.5, 1e-12);
    }
    auto g = make_grid(2, 32, kTwoPi);
    Field f = random_field(g, 1, 3, {.band = 8});
    EXPECT_LT(max_diff(convolve_kernel(f, *dirac_kernel(g)), f), 1e-15);
}

TEST(Kernel, GaussianSymbolDecaysWithFrequency) {
    auto g = make_grid(1, 64, kTwoPi);
    auto k = gaussian_kernel(g, 0.3);
    for (std::size_t i = 1; i + 1 < g->spectral_size(); ++i) EXPECT_LE(k->spectral_hat[i + 1], k->spectral_hat[i] + 1e-15);
}

TEST(Snapshot, RoundTrip) {
    auto g = make_grid(2, 16, 3.5);
    Field u = random_field(g, 2, 4, {.band = 5});
    std::stringstream ss;
    write_snapshot(ss, u);
    const std::string bytes = ss.str();
    ASSERT_GE(bytes.size(), 4u);
    EXPECT_EQ(bytes.substr(0, 4), "SWF1");
    Field back = read_snapshot(ss);
    EXPECT_EQ(back.components(), 2);
    EXPECT_DOUBLE_EQ(back.grid().period(), 3.5);
    EXPECT_LT(max_diff(back, u), 1e-14);
}

TEST(Snapshot, RejectsGarbage) {
    std::stringstream ss("XXXX not a snapshot");
    EXPECT_THROW(read_snapshot(ss), Error);
}
