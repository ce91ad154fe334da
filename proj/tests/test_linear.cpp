#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "swbesov/damping.hpp"
#include "swbesov/error.hpp"
#include "swbesov/linear_evolution.hpp"
#include "swbesov/lyapunov.hpp"
#include "swbesov/model_problems.hpp"

using namespace swbesov;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace {

// exp(tM) by scaling and squaring a long Taylor series
Mat2 expm_taylor(const Mat2& m, double t) {
    int k = 0;
    double norm = std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
    while (norm * std::abs(t) > 0.1) {
        t *= 0.5;
        ++k;
    }
    Mat2 term = Mat2::identity(), sum = Mat2::identity();
    for (int n = 1; n < 30; ++n) {
        term = term * Mat2{m.a * t / n, m.b * t / n, m.c * t / n, m.d * t / n};
        sum = {sum.a + term.a, sum.b + term.b, sum.c + term.c, sum.d + term.d};
    }
    for (int i = 0; i < k; ++i) sum = sum * sum;
    return sum;
}

// RK4 on q' = -r d, d' = r b q - ν̄ r² d
std::pair<double, double> mode_rk4(double q, double d, double r, double b, double nu, double T, int steps) {
    const double h = T / steps;
    auto f = [&](double x, double y) { return std::pair{-r * y, r * b * x - nu * r * r * y}; };
    for (int i = 0; i < steps; ++i) {
        auto [k1q, k1d] = f(q, d);
        auto [k2q, k2d] = f(q + 0.5 * h * k1q, d + 0.5 * h * k1d);
        auto [k3q, k3d] = f(q + 0.5 * h * k2q, d + 0.5 * h * k2d);
        auto [k4q, k4d] = f(q + h * k3q, d + h * k3d);
        q += h / 6 * (k1q + 2 * k2q + 2 * k3q + k4q);
        d += h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
    }
    return {q, d};
}

LinearParams params(const GridPtr& g, double kappa_bar) {
    LinearParams p;
    p.mu_bar = 0.5;
    p.kappa_bar = kappa_bar;
    p.kernel = gaussian_kernel(g);
    return p;
}

}  // namespace

TEST(Mat2, ExpmMatchesTaylor) {
    gen::Rng r(12);
    for (int trial = 0; trial < 200; ++trial) {
        const double rr = r.real(0.0, 30.0), b = r.real(0.05, 2.0), nu = r.real(0.05, 3.0);
        Mat2 m{0.0, -rr, rr * b, -nu * rr * rr};
        const double t = r.real(0.0, 0.5);
        Mat2 e = expm2(m, t), o = expm_taylor(m, t);
        const double scale = 1.0 + std::abs(o.a) + std::abs(o.b) + std::abs(o.c) + std::abs(o.d);
        EXPECT_NEAR(e.a, o.a, 1e-10 * scale);
        EXPECT_NEAR(e.b, o.b, 1e-10 * scale);
        EXPECT_NEAR(e.c, o.c, 1e-10 * scale);
        EXPECT_NEAR(e.d, o.d, 1e-10 * scale);
    }
}

TEST(Mat2, EigenvaluesSatisfyCharacteristicPolynomial) {
    gen::Rng r(2);
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 m{r.real(-3, 3), r.real(-3, 3), r.real(-3, 3), r.real(-3, 3)};
        for (auto lam : eigenvalues(m)) {
            auto res = lam * lam - m.trace() * lam + m.det();
            EXPECT_LT(std::abs(res), 1e-10);
        }
    }
}

TEST(Acoustic, ExactPropagatorMatchesModeODE) {
    auto g = make_grid(1, 64, kTwoPi);
    LinearParams p;
    p.mu_bar = 0.4;
    p.delta_bar = 1.3;
    p.kernel = dirac_kernel(g);
    for (int k : {1, 3, 7, 20}) {
        AcousticState s = AcousticState::zeros(g);
        s.q = cosine_mode(g, {k, 0, 0}, 0.8);
        s.d = cosine_mode(g, {k, 0, 0}, -0.3);
        const double T = 0.7;
        AcousticState e = propagate_exact(s, p, T);
        auto [qo, d_o] = mode_rk4(0.8, -0.3, double(k), p.delta_bar, p.nu_bar(), T, 200000);
        EXPECT_LT(sup_norm(e.q - cosine_mode(g, {k, 0, 0}, qo)), 1e-9) << k;
        EXPECT_LT(sup_norm(e.d - cosine_mode(g, {k, 0, 0}, d_o)), 1e-9) << k;
    }
}

TEST(Acoustic, PropagatorSemigroup) {
    auto g = make_grid(2, 32, kTwoPi);
    auto p = params(g, 0.3);
    AcousticState s = AcousticState::from_velocity(random_field(g, 1, 1, {.band = 8}), random_field(g, 2, 2, {.band = 8}));
    AcousticPropagator half(g, p, 0.05), full(g, p, 0.1);
    AcousticState a = s, b = s;
    half.apply(a);
    half.apply(a);
    full.apply(b);
    EXPECT_LT(sup_norm(a.q - b.q) + sup_norm(a.d - b.d) + sup_norm(a.omega - b.omega), 1e-13);
    AcousticState c = propagate_exact(s, p, 0.1);
    EXPECT_LT(sup_norm(c.q - b.q) + sup_norm(c.d - b.d), 1e-13);
}

TEST(Acoustic, VelocityRoundTrip) {
    auto g = make_grid(3, 16, kTwoPi);
    Field u = random_field(g, 3, 6, {.band = 5});
    Field q = random_field(g, 1, 7, {.band = 5});
    AcousticState s = AcousticState::from_velocity(q, u);
    EXPECT_LT(sup_norm(s.velocity() - u), 1e-12);
}

TEST(LinearParams, ValidationNamesTheGap) {
    auto g = make_grid(2, 32, kTwoPi);
    LinearParams p;
    p.delta_bar = 0.5;
    p.kappa_bar = 1.0;
    p.kernel = dirac_kernel(g);
    try {
        p.validate();
        FAIL() << "expected config_invariant";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::config_invariant);
        EXPECT_NE(std::string(e.what()).find("δ̄−κ̄‖φ̂‖_{L^∞}≥c>0"), std::string::npos) << e.what();
    }
    p.kappa_bar = 0.2;
    EXPECT_NO_THROW(p.validate());
    p.mu_bar = -1.0;
    EXPECT_THROW(p.validate(), Error);
}

TEST(Lyapunov, DefaultsValidateAndEquivalenceIsPositive) {
    gen::Rng r(44);
    for (int trial = 0; trial < 8; ++trial) {
        const int dims = r.integer(1, 2);
        auto g = make_grid(dims, 64, kTwoPi);
        auto P = build_partition(g);
        LinearParams p;
        p.mu_bar = r.real(0.1, 2.0);
        p.lambda_bar = r.real(-0.1, 1.0);
        p.delta_bar = r.real(0.5, 2.0);
        p.kappa_bar = r.real(0.0, 0.4) * p.delta_bar;
        p.kernel = gaussian_kernel(g);
        auto cfg = LyapunovConfig::defaults(p, P);
        EXPECT_NO_THROW(cfg.validate(p, P));
        AcousticState s = AcousticState::from_velocity(random_field(g, 1, r.seed(), {.band = 16}),
                                                       random_field(g, dims, r.seed(), {.band = 16}));
        for (double v : lyapunov_equivalence(s, cfg, p, P))
            if (!std::isnan(v)) EXPECT_GT(v, 0.0);
    }
}

TEST(Lyapunov, OversizedK1IsRejected) {
    auto g = make_grid(1, 64, kTwoPi);
    auto P = build_partition(g);
    auto p = params(g, 0.0);
    auto cfg = LyapunovConfig::defaults(p, P);
    cfg.K1 = 10.0;
    try {
        cfg.validate(p, P);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("K₁<"), std::string::npos) << e.what();
    }
    cfg = LyapunovConfig::defaults(p, P);
    cfg.A = 0.5;
    EXPECT_THROW(cfg.validate(p, P), Error);
}

TEST(Damping, FunctionalsNonincreasingOnRandomStates) {
    gen::Rng r(90);
    for (int trial = 0; trial < 6; ++trial) {
        const int dims = r.integer(1, 2);
        auto g = make_grid(dims, 64, kTwoPi);
        auto P = build_partition(g);
        auto p = params(g, r.pick(std::vector<double>{0.0, 0.3}));
        auto cfg = LyapunovConfig::defaults(p, P);
        AcousticState s = AcousticState::from_velocity(random_field(g, 1, r.seed(), {.band = 20}),
                                                       random_field(g, dims, r.seed(), {.band = 20}));
        DampingOptions o;
        o.T = 2.0;
        o.samples = 60;
        auto rep = verify_damping(s, p, cfg, P, o);
        for (const auto& b : rep.blocks) EXPECT_TRUE(b.monotone) << "l=" << b.l << " increase " << b.max_increase;
        EXPECT_GT(rep.alpha_fit, 0.0);
    }
}

TEST(Damping, SingleHighModeRateMatchesEigenvalue) {
    // |k| = 12 has real eigenvalues; the slow one is (-ν̄r² + √(ν̄²r⁴ - 4r²δ̄))/2
    auto g = make_grid(1, 256, kTwoPi);
    auto P = build_partition(g);
    LinearParams p;
    p.mu_bar = 0.5;
    p.kernel = dirac_kernel(g);
    AcousticState s = AcousticState::zeros(g);
    s.q = cosine_mode(g, {12, 0, 0});
    const double r = 12.0, nu = p.nu_bar();
    const double slow = (nu * r * r - std::sqrt(nu * nu * r * r * r * r - 4.0 * r * r * p.delta_bar)) / 2.0;
    auto rep = verify_damping(s, p, LyapunovConfig::defaults(p, P), P);
    bool seen = false;
    for (const auto& b : rep.blocks)
        if (b.l == 3) {
            seen = true;
            EXPECT_NEAR(b.rate_oracle, slow, 1e-10);
            EXPECT_NEAR(b.rate_fit, slow, 0.01 * slow);
        }
    EXPECT_TRUE(seen);
}

TEST(Damping, FitDecayRateIsExactOnExponentials) {
    std::vector<double> t, y;
    for (int i = 0; i <= 50; ++i) {
        t.push_back(0.1 * i);
        y.push_back(3.0 * std::exp(-0.7 * t.back()));
    }
    EXPECT_NEAR(fit_decay_rate(t, y), 0.7, 1e-12);
}

TEST(LinearEvolution, SampledTrajectoryIsExact) {
    auto g = make_grid(2, 32, kTwoPi);
    auto p = params(g, 0.3);
    AcousticState s = AcousticState::from_velocity(random_field(g, 1, 3, {.band = 8}), random_field(g, 2, 4, {.band = 8}));
    LinearEvolveOptions o;
    o.T = 2.0;
    o.sample_times = geometric_times(2.0, 1e-3, 1.5);
    auto tr = evolve_linear(s, p, o);
    ASSERT_EQ(tr.times.front(), 0.0);
    ASSERT_DOUBLE_EQ(tr.times.back(), 2.0);
    for (std::size_t i = 0; i < tr.size(); i += 3) {
        auto e = propagate_exact(s, p, tr.times[i]);
        EXPECT_LT(sup_norm(e.q - tr.states[i].q) + sup_norm(e.d - tr.states[i].d), 1e-12);
    }
}

TEST(LinearEvolution, GeometricTimes) {
    auto t = geometric_times(10.0, 1e-3, 1.2);
    ASSERT_FALSE(t.empty());
    EXPECT_DOUBLE_EQ(t.front(), 1e-3);
    EXPECT_DOUBLE_EQ(t.back(), 10.0);
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
}

TEST(LinearEvolution, ForcedSchemeConvergesSecondOrder) {
    // constant forcing F on q: compare against the exact unforced flow plus Duhamel by fine steps
    auto g = make_grid(1, 32, kTwoPi);
    auto p = params(g, 0.0);
    AcousticState s = AcousticState::zeros(g);
    s.q = cosine_mode(g, {2, 0, 0}, 0.5);
    Field F = cosine_mode(g, {3, 0, 0}, 0.2), G = cosine_mode(g, {1, 0, 0}, -0.1);
    LinearForcing forcing = [&](double t) { return std::pair{std::cos(t) * F, G}; };
    auto run = [&](double dt) {
        LinearEvolveOptions o;
        o.T = 1.0;
        o.dt = dt;
        o.sample_times = {1.0};
        return evolve_linear(s, p, o, forcing);
    };
    auto ref = run(1e-4);
    std::vector<double> err;
    for (double dt : {0.04, 0.02, 0.01}) {
        auto tr = run(dt);
        const auto& a = tr.states.back();
        const auto& b = ref.states.back();
        err.push_back(sup_norm(a.q - b.q) + sup_norm(a.d - b.d));
    }
    EXPECT_GT(std::log2(err[0] / err[1]), 1.8);
    EXPECT_GT(std::log2(err[1] / err[2]), 1.8);
}

TEST(Smoothing, RatioBoundedOnCorpus) {
    auto g = make_grid(2, 64, kTwoPi);
    auto P = build_partition(g);
    auto p = params(g, 0.3);
    auto cfg = LyapunovConfig::defaults(p, P);
    gen::Rng r(70);
    for (int trial = 0; trial < 4; ++trial) {
        AcousticState s = AcousticState::from_velocity(random_field(g, 1, r.seed(), {.band = 20}),
                                                       random_field(g, 2, r.seed(), {.band = 20}));
        LinearEvolveOptions o;
        o.T = 5.0;
        o.sample_times = geometric_times(5.0, 1e-5, 1.1);
        auto rep = verify_smoothing(evolve_linear(s, p, o), 1.0, cfg, P, 100.0);
        EXPECT_TRUE(rep.pass) << rep.ratio;
        EXPECT_GT(rep.lhs, 0.0);
    }
}

TEST(Heat, SingleModeDecayIsExact) {
    for (int dims = 1; dims <= 3; ++dims) {
        auto g = make_grid(dims, dims == 3 ? 16 : 64, 3.0);
        auto P = build_partition(g);
        std::array<int, 3> k{2, dims > 1 ? 1 : 0, dims > 2 ? 1 : 0};
        Field u0 = cosine_mode(g, k);
        HeatOptions o;
        o.T = 2.0;
        o.sample_times = {0.5, 2.0};
        auto [tr, rep] = solve_heat(u0, {}, 0.7, BesovSpec::plain(0.0), P, o);
        const double kk = kTwoPi / 3.0;
        const double xi2 = kk * kk * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        for (std::size_t i = 0; i < tr.size(); ++i)
            EXPECT_LT(sup_norm(tr.states[i] - std::exp(-0.7 * xi2 * tr.times[i]) * u0), 1e-13);
    }
}

TEST(Transport, ZeroVelocityKeepsData) {
    auto g = make_grid(2, 32, kTwoPi);
    auto P = build_partition(g);
    Field q0 = random_field(g, 1, 5, {.band = 6});
    Field zero(g, 2);
    TransportOptions o;
    o.T = 0.5;
    o.dt = 0.05;
    auto [tr, rep] = solve_transport(q0, [&](double) { return zero; }, {}, BesovSpec::plain(0.5), P, o);
    EXPECT_LT(sup_norm(tr.states.back() - q0), 1e-14);
}

TEST(Transport, ConstantVelocityTranslates) {
    auto g = make_grid(1, 64, kTwoPi);
    auto P = build_partition(g);
    Field q0 = cosine_mode(g, {3, 0, 0});
    Field c(g, 1);
    c.coefficients()[0] = 0.4;
    TransportOptions o;
    o.T = 1.0;
    o.dt = 0.01;
    auto [tr, rep] = solve_transport(q0, [&](double) { return c; }, {}, BesovSpec::plain(0.0), P, o);
    Field exact = cosine_mode(g, {3, 0, 0}, 1.0, -3.0 * 0.4 * 1.0);
    EXPECT_LT(sup_norm(tr.states.back() - exact), 1e-8);
}

TEST(VariableHeat, LowerBoundEnforced) {
    auto g = make_grid(1, 32, kTwoPi);
    auto P = build_partition(g);
    Field a = Field::sample(g, 1, [](const std::array<double, 3>& x, int) { return 0.5 + 0.4 * std::sin(x[0]); });
    VariableHeatOptions o;
    o.a_lower = 0.2;
    o.T = 0.1;
    o.dt = 0.01;
    Field u0 = random_field(g, 1, 2, {.band = 4});
    EXPECT_THROW(solve_heat_variable(u0, {}, [&](double) { return a; }, 1.0, 0.0, P, o), Error);
}
