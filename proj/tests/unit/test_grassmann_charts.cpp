#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "subapprox/error.hpp"
#include "subapprox/grassmann_charts.hpp"

using namespace subapprox;

namespace {

std::array<BigInt, 6> big6(std::array<long, 6> v) {
    std::array<BigInt, 6> out;
    for (std::size_t k = 0; k < 6; ++k) out[k] = v[k];
    return out;
}

void expect_mat_near(const Mat2& a, const Mat2& b, double tol) {
    EXPECT_NEAR(a.m11, b.m11, tol);
    EXPECT_NEAR(a.m12, b.m12, tol);
    EXPECT_NEAR(a.m21, b.m21, tol);
    EXPECT_NEAR(a.m22, b.m22, tol);
}

const Mat2 kSample{0.5, 0.25, 0.25, 0.5};

Mat2 random_in_band(std::mt19937_64& gen, double delta) {
    std::uniform_real_distribution<double> mag(delta, 1.0 - delta);
    std::bernoulli_distribution sign(0.5);
    for (;;) {
        Mat2 l;
        for (double* x : {&l.m11, &l.m12, &l.m21, &l.m22}) *x = (sign(gen) ? 1 : -1) * mag(gen);
        const double d = std::abs(l.det());
        if (d >= delta && d <= 1.0 - delta) return l;
    }
}

}  // namespace

TEST(ChartLabel, Validates) {
    EXPECT_THROW(ChartLabel(2, 1), std::invalid_argument);
    EXPECT_THROW(ChartLabel(0, 1), std::invalid_argument);
    EXPECT_THROW(ChartLabel(3, 5), std::invalid_argument);
    EXPECT_EQ(ChartLabel(1, 4).complement(), (std::array<int, 2>{2, 3}));
    EXPECT_EQ(ChartLabel(2, 3).index(), 3u);
}

TEST(DeltaBand, Validates) {
    EXPECT_THROW(DeltaBand(0.0), std::invalid_argument);
    EXPECT_THROW(DeltaBand(0.5), std::invalid_argument);
    EXPECT_NO_THROW(DeltaBand(0.49));
}

TEST(ChartOfSubspace, Examples) {
    const auto c1 = chart_of_subspace(PlueckerVector::from_raw(big6({1, 0, 0, 0, 0, 0})));
    EXPECT_EQ(c1.label, ChartLabel(1, 2));
    EXPECT_EQ(c1.ell, (Mat2{0, 0, 0, 0}));

    const auto c2 = chart_of_subspace(PlueckerVector::from_raw(big6({1, 0, 2, -1, 0, 2})));
    EXPECT_EQ(c2.label, ChartLabel(1, 4));
    expect_mat_near(c2.ell, Mat2{0, 0.5, 1, 0}, 1e-15);
    EXPECT_DOUBLE_EQ(c2.delta_of_ell, -0.5);
    // Graph equations z2 = z4 / 2, z3 = z1 hold on the basis (1,0,1,0), (0,1,0,2).
    const auto g = subspace_from_graph(c2);
    for (const auto& u : {g.basis.u1, g.basis.u2}) {
        EXPECT_NEAR(u[1], u[3] / 2, 1e-15);
        EXPECT_NEAR(u[2], u[0], 1e-15);
    }

    const RealPluecker bad{1, 0.2, 0.3, 0.4, 0.5, 0.2 * 0.5 - 0.3 * 0.4 + 1e-3};
    EXPECT_THROW((void)chart_of_subspace(bad), GeometryError);
    EXPECT_THROW((void)chart_of_subspace(RealPluecker{0, 0, 0, 0, 0, 0}), GeometryError);
}

TEST(SubspaceFromGraph, Examples) {
    const auto e12 = subspace_from_graph(GraphChart(ChartLabel(1, 2), Mat2{}));
    EXPECT_EQ(e12.basis.u1, (Vec4{1, 0, 0, 0}));
    EXPECT_EQ(e12.basis.u2, (Vec4{0, 1, 0, 0}));
    const auto g = subspace_from_graph(GraphChart(ChartLabel(1, 2), kSample));
    EXPECT_EQ(g.basis.u1, (Vec4{1, 0, 0.5, 0.25}));
    EXPECT_EQ(g.basis.u2, (Vec4{0, 1, 0.25, 0.5}));
    double n = 0;
    for (double x : g.pluecker) n += x * x;
    EXPECT_NEAR(n, 1.0, 1e-15);
}

TEST(SubspaceFromGraph, RoundTripOfIntegerExample) {
    const auto c = chart_of_subspace(PlueckerVector::from_raw(big6({1, 0, 2, -1, 0, 2})));
    const auto back = chart_of_subspace(subspace_from_graph(c).pluecker);
    EXPECT_EQ(back.label, c.label);
    expect_mat_near(back.ell, c.ell, 1e-12);
}

TEST(InDeltaBand, Examples) {
    EXPECT_TRUE(in_delta_band(GraphChart(ChartLabel(1, 2), kSample), DeltaBand(0.125)));
    EXPECT_FALSE(in_delta_band(GraphChart(ChartLabel(1, 2), Mat2{}), DeltaBand(0.01)));
    EXPECT_FALSE(in_delta_band(GraphChart(ChartLabel(1, 2), kSample), DeltaBand(0.2)));
}

TEST(ChartTransition, Examples) {
    const GraphChart c(ChartLabel(1, 2), kSample);
    expect_mat_near(chart_transition(c, ChartLabel(3, 4)).ell, Mat2{8.0 / 3, -4.0 / 3, -4.0 / 3, 8.0 / 3}, 1e-14);
    expect_mat_near(chart_transition(c, ChartLabel(1, 3)).ell, Mat2{-2, 4, -0.75, 2}, 1e-14);
    const auto same = chart_transition(c, ChartLabel(1, 2));
    EXPECT_EQ(same.ell, kSample);
    EXPECT_EQ(same.label, ChartLabel(1, 2));
}

TEST(ChartTransition, SingularTargetThrows) {
    // span{e1, e2} has p34 = 0.
    try {
        (void)chart_transition(GraphChart(ChartLabel(1, 2), Mat2{}), ChartLabel(3, 4));
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_STREQ(e.what(), "chart singular here");
    }
}

TEST(ChartTransition, MatchesClosedForms) {
    std::mt19937_64 gen(3);
    for (int t = 0; t < 1000; ++t) {
        const Mat2 l = random_in_band(gen, 0.05);
        const GraphChart c(ChartLabel(1, 2), l);
        expect_mat_near(chart_transition(c, ChartLabel(3, 4)).ell, oracles::transition_to_34(l), 1e-12);
        expect_mat_near(chart_transition(c, ChartLabel(1, 3)).ell, oracles::transition_to_13(l), 1e-12);
    }
}

TEST(ChartTransition, ComposesBackToIdentity) {
    std::mt19937_64 gen(5);
    for (int t = 0; t < 500; ++t) {
        const GraphChart c(ChartLabel(1, 2), random_in_band(gen, 0.1));
        for (const auto& target : ChartLabel::all()) {
            const auto there = chart_transition(c, target);
            expect_mat_near(chart_transition(there, c.label).ell, c.ell, 1e-12);
        }
    }
}

TEST(Charts, RoundTripsAndHilfssatz2) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    double worst = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto label = ChartLabel::all()[pick(gen)];
        const GraphChart c(label, Mat2{u(gen), u(gen), u(gen), u(gen)});
        const auto back = chart_over(subspace_from_graph(c).pluecker, label);
        worst = std::max(worst, (back.ell - c.ell).max_abs());
    }
    EXPECT_LE(worst, 1e-9);

    for (double delta : {0.05, 0.1, 0.2}) {
        for (int t = 0; t < 2000; ++t) {
            const GraphChart c(ChartLabel(1, 2), random_in_band(gen, delta));
            for (const auto& target : ChartLabel::all())
                EXPECT_LE(chart_transition(c, target).ell.max_abs(), 1.0 / delta);
        }
    }
}

TEST(ChartOfSubspace, MaxChartIsBounded) {
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 1000; ++t) {
        const GraphChart c(ChartLabel(2, 4), Mat2{u(gen), u(gen), u(gen), u(gen)});
        const auto best = chart_of_subspace(subspace_from_graph(c).pluecker);
        EXPECT_LE(best.ell.max_abs(), 1.0 + 1e-12);
        EXPECT_LE(std::abs(best.delta_of_ell), 1.0 + 1e-12);
    }
}

TEST(ChartOfSubspace, ExactAndRealPathsAgree) {
    std::mt19937_64 gen(29);
    std::uniform_int_distribution<long> d(-6, 6);
    std::set<std::size_t> labels;
    for (int t = 0; t < 2000; ++t) {
        const auto m = make_matrix({d(gen), d(gen), d(gen), d(gen)}, {d(gen), d(gen), d(gen), d(gen)});
        bool zero = true;
        for (const auto& x : minors(m)) zero = zero && x == 0;
        if (zero) continue;
        const auto p = pluecker(m);
        const auto exact = chart_of_subspace(p);
        const auto real = chart_of_subspace(p.to_double());
        labels.insert(exact.label.index());
        EXPECT_EQ(exact.label, real.label);
        expect_mat_near(exact.ell, real.ell, 1e-15);
        // The graph basis spans the plane: its minors are proportional to p.
        const auto g = subspace_from_graph(exact).pluecker;
        const auto pd = p.to_double();
        double n = 0;
        for (double x : pd) n += x * x;
        const double s = pd[exact.label.index()] / g[exact.label.index()];
        for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(g[k] * s, pd[k], 1e-12 * std::sqrt(n));
    }
    EXPECT_EQ(labels.size(), 6u);
}
