#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "subapprox/angles.hpp"
#include "subapprox/metric_geometry.hpp"

using namespace subapprox;

TEST(XiEta, Examples) {
    const auto z = to_xi_eta(Mat2{1, 0, 0, 1});
    EXPECT_EQ(z.xi1, 1);
    EXPECT_EQ(z.xi2, 0);
    EXPECT_EQ(z.eta1, 0);
    EXPECT_EQ(z.eta2, 0);
    EXPECT_EQ(to_xi_eta(Mat2{}).norm(), 0);
}

TEST(XiEta, InverseAndScaledIsometry) {
    std::mt19937_64 gen(1);
    std::normal_distribution<double> n;
    for (int t = 0; t < 1000; ++t) {
        const Mat2 c{n(gen), n(gen), n(gen), n(gen)};
        const auto z = to_xi_eta(c);
        const Mat2 back = from_xi_eta(z);
        EXPECT_NEAR((back - c).max_abs(), 0, 1e-14);
        EXPECT_NEAR(z.norm(), c.frobenius() / std::sqrt(2.0), 1e-12);
        // det c = |xi|^2 - |eta|^2, so singular matrices form the cone |xi| = |eta|.
        EXPECT_NEAR(c.det(), z.xi_norm() * z.xi_norm() - z.eta_norm() * z.eta_norm(), 1e-12);
    }
}

TEST(DistToSigmaB, Examples) {
    const Mat2 b{0.3, 0.4, 0.5, 0.6};
    EXPECT_EQ(dist_to_sigma_b(b, b), 0);
    EXPECT_NEAR(dist_to_sigma_b(b + Mat2{1, 0, 0, 1}, b), 1, 1e-15);
    EXPECT_NEAR(oracles::nearest_singular_distance(Mat2{1, 0, 0, 1}), 1, 1e-9);
    EXPECT_NEAR(dist_to_sigma_b(Mat2{3, 0, 0, 1.0 / 3}, Mat2{}), 1.0 / 3, 1e-15);
    const auto z = to_xi_eta(Mat2{3, 0, 0, 1.0 / 3});
    EXPECT_NEAR(z.xi_norm(), 5.0 / 3, 1e-15);
    EXPECT_NEAR(z.eta_norm(), 4.0 / 3, 1e-15);
}

TEST(DistToSigmaB, MatchesNumericNearestPoint) {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(-2, 2);
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
        const Mat2 a{u(gen), u(gen), u(gen), u(gen)};
        const Mat2 b{u(gen), u(gen), u(gen), u(gen)};
        worst = std::max(worst, std::abs(dist_to_sigma_b(a, b) - oracles::nearest_singular_distance(a - b)));
    }
    EXPECT_LE(worst, 1e-6);
}

TEST(DistToShiftedCone, TranslationEquivariantAndScaled) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 1000; ++t) {
        const XiEtaPoint z{u(gen), u(gen), u(gen), u(gen)};
        const XiEtaPoint s{u(gen), u(gen), u(gen), u(gen)};
        const XiEtaPoint w{u(gen), u(gen), u(gen), u(gen)};
        const XiEtaPoint zw{z.xi1 + w.xi1, z.xi2 + w.xi2, z.eta1 + w.eta1, z.eta2 + w.eta2};
        const XiEtaPoint sw{s.xi1 + w.xi1, s.xi2 + w.xi2, s.eta1 + w.eta1, s.eta2 + w.eta2};
        EXPECT_NEAR(dist_to_shifted_cone(zw, sw), dist_to_shifted_cone(z, s), 1e-12);
        // The cone distance in zeta-space is the matrix distance divided by sqrt 2.
        EXPECT_NEAR(dist_to_shifted_cone(z, s), dist_to_sigma_b(from_xi_eta(z), from_xi_eta(s)) / std::sqrt(2.0),
                    1e-12);
    }
}

TEST(Hilfssatz4, Radius) {
    EXPECT_NEAR(hilfssatz4_radius(1e-2, 0.1), 3e-2 * std::sqrt(2 + 400), 1e-15);
    EXPECT_THROW((void)hilfssatz4_radius(-1, 0.1), std::invalid_argument);
}

TEST(Hilfssatz4, OwnGraphMatrixHasZeroDistance) {
    const auto b = RationalSubspace::from_spanning(make_matrix({5, 0, 2, 3}, {0, 5, 3, 2}));
    const OmegaNeighborhoodSpec spec{b, 1e-2, DeltaBand(0.1)};
    const GraphChart a(ChartLabel(1, 2), Mat2{0.4, 0.6, 0.6, 0.4});
    // (5,0,2,3), (0,5,3,2) is the graph of [[0.4,0.6],[0.6,0.4]] scaled by 5.
    const auto w = check_hilfssatz4(spec, a);
    ASSERT_TRUE(w.has_value());
    EXPECT_LE(w->psi, 1e-9);
    EXPECT_LE(w->distance, 1e-12);
    EXPECT_TRUE(w->holds);
}

TEST(Hilfssatz4, SkipsWhenPreconditionsFail) {
    const auto b = RationalSubspace::from_spanning(make_matrix({5, 0, 2, 3}, {0, 5, 3, 2}));
    const OmegaNeighborhoodSpec spec{b, 1e-3, DeltaBand(0.1)};
    // Outside E(delta): an entry is 0.
    EXPECT_FALSE(check_hilfssatz4(spec, GraphChart(ChartLabel(1, 2), Mat2{0, 0.6, 0.6, 0.4})).has_value());
    // In the band but far from B, so psi > eps.
    EXPECT_FALSE(check_hilfssatz4(spec, GraphChart(ChartLabel(1, 2), Mat2{-0.4, 0.6, 0.6, -0.2})).has_value());
}

TEST(Hilfssatz4, SmallPerturbationsHold) {
    const auto b = RationalSubspace::from_spanning(make_matrix({5, 0, 2, 3}, {0, 5, 3, 2}));
    const OmegaNeighborhoodSpec spec{b, 1e-2, DeltaBand(0.1)};
    std::mt19937_64 gen(4);
    std::normal_distribution<double> n;
    int checked = 0;
    for (int t = 0; t < 2000; ++t) {
        Mat2 d{n(gen), n(gen), n(gen), n(gen)};
        d = (0.001 / d.frobenius()) * d;
        const auto w = check_hilfssatz4(spec, GraphChart(ChartLabel(1, 2), Mat2{0.4, 0.6, 0.6, 0.4} + d));
        if (!w) continue;
        ++checked;
        EXPECT_TRUE(w->holds);
        EXPECT_LE(w->ratio, 1.0);
    }
    EXPECT_GT(checked, 1000);
}

TEST(TubeVolume, SaturationAndZero) {
    const double t = 2.0;
    EXPECT_NEAR(ball_volume_4d(t), std::numbers::pi * std::numbers::pi * 8, 1e-12);
    const auto full = tube_volume({}, t, std::sqrt(2.0) * t, 100000, 9);
    EXPECT_EQ(full.hits, full.samples);
    EXPECT_NEAR(full.estimate, ball_volume_4d(t), 1e-9);
    const auto none = tube_volume({}, t, 0.0, 100000, 9);
    EXPECT_EQ(none.estimate, 0);
    EXPECT_THROW((void)tube_volume({}, t, 0.1, 10, 9), std::invalid_argument);
}

TEST(TubeVolume, DeterministicPerSeed) {
    const auto a = tube_volume({0.1, 0.2, 0.3, 0.4}, 2.0, 0.05, 200000, 42);
    const auto b = tube_volume({0.1, 0.2, 0.3, 0.4}, 2.0, 0.05, 200000, 42);
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(a.estimate, b.estimate);
}
