#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "swbesov/besov.hpp"
#include "swbesov/diagnostics.hpp"
#include "swbesov/error.hpp"
#include "swbesov/inequalities.hpp"
#include "swbesov/trajectory.hpp"

using namespace swbesov;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST(Bump, ShapeOfChiAndPhi) {
    EXPECT_EQ(lp_chi(0.0), 1.0);
    EXPECT_EQ(lp_chi(0.75), 1.0);
    EXPECT_EQ(lp_chi(4.0 / 3.0), 0.0);
    EXPECT_EQ(lp_bump(0.7), 0.0);
    EXPECT_EQ(lp_bump(2.7), 0.0);
    for (double r = 0.0; r < 4.0; r += 0.01) {
        EXPECT_GE(lp_bump(r), 0.0);
        EXPECT_LE(lp_bump(r), 1.0);
        EXPECT_LE(lp_chi(r + 0.01), lp_chi(r));
    }
    // telescoping: Σ_{l} ϕ(2^{-l} r) = 1 for r > 0
    for (double r : {0.01, 0.3, 1.0, 1.7, 5.0, 123.4}) {
        double s = 0.0;
        for (int l = -12; l <= 12; ++l) s += lp_bump(std::ldexp(r, -l));
        EXPECT_NEAR(s, 1.0, 1e-15) << r;
    }
}

TEST(Partition, RangeOnStandardGrids) {
    auto P = build_partition(make_grid(2, 256, kTwoPi));
    EXPECT_EQ(P.l_min(), -1);
    EXPECT_EQ(P.l_max(), 7);
}

TEST(Partition, UnityAndReconstructionProperty) {
    gen::Rng r(101);
    for (int trial = 0; trial < 25; ++trial) {
        auto d = gen::grid(r);
        auto g = make_grid(d.dims, d.points, d.period);
        auto P = build_partition(g);
        EXPECT_LT(partition_unity_deviation(P), 1e-12) << d.dims << "D n=" << d.points << " L=" << d.period;
        Field f = random_field(g, 1, r.seed(), gen::corpus(r, g->dealias_cutoff()));
        EXPECT_LT(block_reconstruction_error(f, P), 1e-10);
    }
}

TEST(Partition, BlocksAreAlmostOrthogonal) {
    // 0 ≤ ϕ ≤ 1 with Σϕ = 1 gives Σ_l ‖Δ_l f‖² ≤ ‖f - mean‖² and Δ_l Δ_k = 0 for |l-k| ≥ 2
    gen::Rng r(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = gen::grid(r);
        auto g = make_grid(d.dims, d.points, d.period);
        auto P = build_partition(g);
        Field f = random_field(g, 1, r.seed(), gen::corpus(r, g->dealias_cutoff()));
        double s = 0.0;
        for (double n : block_norms(f, 2.0, P)) s += n * n;
        const double total = l2_norm(f.without_mean());
        EXPECT_LE(s, total * total * (1.0 + 1e-12));
        for (int l = P.l_min(); l + 2 <= P.l_max(); ++l)
            EXPECT_LT(std::abs(l2_inner(dyadic_block(f, l, P), dyadic_block(f, l + 2, P))), 1e-14 * (1.0 + total * total));
    }
}

TEST(Besov, SingleBlockCosineIsExact) {
    // |ξ| = √2, 6 and 12 sit where ϕ(2^{-l}|ξ|) = 1 for l = 0, 2, 3
    auto g = make_grid(2, 128, kTwoPi);
    auto P = build_partition(g);
    struct Case {
        std::array<int, 3> k;
        int l;
    };
    for (const auto& c : {Case{{1, 1, 0}, 0}, Case{{6, 0, 0}, 2}, Case{{12, 0, 0}, 3}}) {
        Field f = cosine_mode(g, c.k, 0.7);
        const double m = l2_norm(f);
        auto norms = block_norms(f, 2.0, P);
        for (int l = P.l_min(); l <= P.l_max(); ++l)
            EXPECT_NEAR(norms[static_cast<std::size_t>(l - P.l_min())], l == c.l ? m : 0.0, 1e-14);
        for (double s : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
            EXPECT_NEAR(besov_norm(f, BesovSpec::plain(s), P), std::ldexp(m, 0) * std::pow(2.0, c.l * s), 1e-12);
            EXPECT_NEAR(besov_norm(f, BesovSpec::plain(s, 2.0, kInf), P), m * std::pow(2.0, c.l * s), 1e-12);
        }
        // hybrid: s on l ≤ 0, t above
        const double expect = m * std::pow(2.0, c.l * (c.l <= 0 ? 0.5 : 1.5));
        EXPECT_NEAR(hybrid_norm(f, BesovSpec::hybrid(0.5, 1.5), P), expect, 1e-12);
    }
}

TEST(Besov, LpBlockNormOfSingleModeMatchesClosedForm) {
    // ‖a cos‖_{L^p} over the torus: a (L Γ((p+1)/2)/(√π Γ(p/2+1)))^{1/p}
    auto g = make_grid(1, 256, kTwoPi);
    auto P = build_partition(g);
    Field f = cosine_mode(g, {6, 0, 0}, 1.3);
    // even p keeps |cos|^p band-limited, so the grid quadrature is exact
    for (double p : {4.0, 6.0}) {
        const double mean_abs_p = std::tgamma((p + 1) / 2) / (std::sqrt(std::numbers::pi) * std::tgamma(p / 2 + 1));
        const double expect = 1.3 * std::pow(kTwoPi * mean_abs_p, 1.0 / p);
        auto n = block_norms(f, p, P);
        EXPECT_NEAR(n[static_cast<std::size_t>(2 - P.l_min())], expect, 1e-10) << p;
    }
    EXPECT_NEAR(lp_norm(f, kInf), 1.3, 1e-12);
}

TEST(Besov, MonotoneInRegularityOnHighBlocks) {
    gen::Rng r(17);
    auto g = make_grid(2, 64, kTwoPi);
    auto P = build_partition(g);
    for (int trial = 0; trial < 10; ++trial) {
        CorpusSpec cs = gen::corpus(r, g->dealias_cutoff());
        cs.min_mode = 2;  // |ξ| ≥ 2 keeps every block at l ≥ 0
        Field f = random_field(g, 1, r.seed(), cs);
        double prev = 0.0;
        for (double s : {0.0, 0.5, 1.0, 1.5}) {
            const double n = besov_norm(f, BesovSpec::plain(s), P);
            EXPECT_GE(n, prev);
            prev = n;
        }
        // r-summation: ℓ¹ ≥ ℓ² ≥ ℓ^∞
        const double n1 = besov_norm(f, BesovSpec::plain(1.0, 2.0, 1.0), P);
        const double n2 = besov_norm(f, BesovSpec::plain(1.0, 2.0, 2.0), P);
        const double ni = besov_norm(f, BesovSpec::plain(1.0, 2.0, kInf), P);
        EXPECT_GE(n1, n2);
        EXPECT_GE(n2, ni);
    }
}

TEST(Besov, DyadicDilation) {
    // b(x) = a(2x) on half the period: same samples, every frequency doubled, so block l
    // moves to l+1. The volume shrinks by 4, so B^0 halves and B^1 is unchanged.
    CorpusSpec cs{.band = 10, .gamma = 1.0, .min_mode = 1};
    auto g1 = make_grid(2, 64, kTwoPi);
    auto g2 = make_grid(2, 64, kTwoPi / 2.0);
    Field a = random_field(g1, 1, 42, cs);
    Field b = Field::scalar_from_physical(g2, a.physical());
    auto P1 = build_partition(g1);
    auto P2 = build_partition(g2);
    const double n1 = besov_norm(a, BesovSpec::plain(0.0), P1);
    EXPECT_NEAR(besov_norm(b, BesovSpec::plain(0.0), P2), 0.5 * n1, 1e-12 * n1);
    const double m1 = besov_norm(a, BesovSpec::plain(1.0), P1);
    EXPECT_NEAR(besov_norm(b, BesovSpec::plain(1.0), P2), m1, 1e-12 * m1);
}

TEST(Besov, SpecValidation) {
    EXPECT_THROW(BesovSpec::plain(0.0, 0.5).validate(), Error);
    EXPECT_THROW(BesovSpec::plain(0.0, 2.0, 0.0).validate(), Error);
    EXPECT_NO_THROW(BesovSpec::hybrid(0.0, 1.0, kInf, kInf).validate());
}

TEST(DerivativeRatio, SingleModeOracle) {
    // ‖∇f‖_{B^{s-1}}/‖f‖_{B^s} = |ξ| 2^{-l} on a single full-weight block
    auto g = make_grid(2, 128, kTwoPi);
    auto P = build_partition(g);
    EXPECT_NEAR(derivative_norm_ratio(cosine_mode(g, {6, 0, 0}), 0.3, P), 1.5, 1e-12);
    EXPECT_NEAR(derivative_norm_ratio(cosine_mode(g, {1, 1, 0}), 1.0, P), std::sqrt(2.0), 1e-12);
}

TEST(DerivativeRatio, CorpusStaysInBernsteinRange) {
    gen::Rng r(33);
    for (int trial = 0; trial < 15; ++trial) {
        auto d = gen::grid(r);
        auto g = make_grid(d.dims, d.points, d.period);
        auto P = build_partition(g);
        Field f = random_field(g, 1, r.seed(), gen::corpus(r, g->dealias_cutoff()));
        const double s = r.real(-1.0, 2.0);
        const double ratio = derivative_norm_ratio(f, s, P);
        EXPECT_GE(ratio, 0.75 - 1e-12);
        EXPECT_LE(ratio, 8.0 / 3.0 + 1e-12);
    }
}

TEST(Trajectory, TrapezoidWeights) {
    std::vector<double> t{0.0, 0.1, 0.35, 1.0};
    auto w = trapezoid_weights(t);
    double s = 0.0;
    for (double x : w) s += x;
    EXPECT_NEAR(s, 1.0, 1e-15);
    EXPECT_EQ(trapezoid_weights(std::vector<double>{2.0})[0], 0.0);
    std::vector<double> v{1.0, 1.0, 1.0, 1.0};
    EXPECT_NEAR(time_norm(t, v, 1.0), 1.0, 1e-15);
    EXPECT_NEAR(time_norm(t, std::vector<double>{1, 3, 2, 0}, kInf), 3.0, 0.0);
}

TEST(Trajectory, CheminLernerDominatesTimeSpaceForRhoAtLeastR) {
    gen::Rng r(8);
    for (int trial = 0; trial < 20; ++trial) {
        BlockSeries s;
        s.l_min = -1;
        const int nt = r.integer(2, 12), nb = r.integer(1, 8);
        double t = 0.0;
        for (int k = 0; k < nt; ++k) {
            std::vector<double> n(static_cast<std::size_t>(nb));
            for (double& x : n) x = r.real(0.0, 2.0);
            s.push(t, n);
            t += r.real(0.01, 0.5);
        }
        const BesovSpec sp = BesovSpec::plain(r.real(-1.0, 1.5));
        // r = 1: Minkowski puts the time norm of the block sum below the block sum of time norms
        for (double rho : {1.0, 2.0, kInf}) EXPECT_GE(chemin_lerner_norm(s, rho, sp) * (1 + 1e-12) + 1e-15, time_space_norm(s, rho, sp));
    }
}

TEST(Trajectory, RejectsNonIncreasingTimes) {
    Trajectory<int> tr;
    tr.push(0.0, 1);
    EXPECT_THROW(tr.push(0.0, 2), Error);
}

TEST(ProductLaws, HoldWithModestConstants) {
    auto g = make_grid(2, 64, kTwoPi);
    auto P = build_partition(g);
    gen::Rng r(77);
    for (int trial = 0; trial < 6; ++trial) {
        CorpusSpec cs{.band = 12, .gamma = r.real(0.5, 2.0), .min_mode = 1};
        Field a = random_field(g, 1, r.seed(), cs), b = random_field(g, 1, r.seed(), cs);
        ProductLawParams prm;
        for (auto law : {ProductLaw::algebra, ProductLaw::hybrid_bilinear, ProductLaw::limit_endpoint}) {
            auto rep = verify_product_laws(a, b, law, prm, P);
            EXPECT_TRUE(rep.pass) << to_string(law) << " ratio " << rep.ratio;
            EXPECT_GT(rep.lhs, 0.0);
        }
    }
}

TEST(LogInterpolation, RightSideDominates) {
    auto g = make_grid(2, 64, kTwoPi);
    auto P = build_partition(g);
    gen::Rng r(4);
    for (int trial = 0; trial < 8; ++trial) {
        Field f = random_field(g, 1, r.seed(), gen::corpus(r, g->dealias_cutoff()));
        auto [lhs, rhs] = log_interpolation(f, 1.0, r.real(0.1, 1.0), 2.0, P);
        EXPECT_LE(lhs, rhs * (1 + 1e-12));
    }
}
