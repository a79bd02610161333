#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "subapprox/enumeration.hpp"

using namespace subapprox;

namespace {

std::set<oracles::IPluecker> as_set(const std::vector<SmallPluecker>& v) {
    return {v.begin(), v.end()};
}

// Independent brute force over all 6-tuples with entries in [-r, r].
std::set<oracles::IPluecker> brute_force(std::int64_t h_sq_max) {
    const auto r = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(h_sq_max))));
    std::set<oracles::IPluecker> out;
    oracles::IPluecker p{};
    auto rec = [&](auto&& self, std::size_t k, std::int64_t n) -> void {
        if (k == 6) {
            if (n == 0 || p[0] * p[5] - p[1] * p[4] + p[2] * p[3] != 0) return;
            if (oracles::canonical(p) == p) out.insert(p);
            return;
        }
        for (std::int64_t x = -r; x <= r; ++x)
            if (n + x * x <= h_sq_max) {
                p[k] = x;
                self(self, k + 1, n + x * x);
            }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST(HeightBudget, Validates) {
    EXPECT_THROW(HeightBudget(-1), std::invalid_argument);
    EXPECT_THROW(HeightBudget(std::int64_t{1} << 62), std::invalid_argument);
    EXPECT_NO_THROW(HeightBudget(0));
}

TEST(Enumerate, Examples) {
    EXPECT_TRUE(enumerate_pluecker(HeightBudget(0)).empty());
    const auto one = enumerate_pluecker(HeightBudget(1));
    ASSERT_EQ(one.size(), 6u);
    for (const auto& p : one) EXPECT_EQ(norm_sq(p), 1);
    const auto two = as_set(enumerate_pluecker(HeightBudget(2)));
    EXPECT_EQ(two, oracles::basis_pair_planes(2));
    EXPECT_EQ(two, brute_force(2));
    // Height sqrt 2: two nonzero unit entries, not on complementary pairs.
    EXPECT_EQ(two.size(), 6u + 24u);
}

TEST(Enumerate, MatchesBruteForce) {
    for (std::int64_t h : {3, 5, 9, 12}) EXPECT_EQ(as_set(enumerate_pluecker(HeightBudget(h))), brute_force(h)) << h;
}

TEST(Enumerate, MatchesBasisPairOracle) {
    EXPECT_EQ(as_set(enumerate_pluecker(HeightBudget(16))), oracles::basis_pair_planes(16));
}

TEST(Enumerate, SortedCanonicalAndUnique) {
    const auto v = enumerate_pluecker(HeightBudget(20));
    for (std::size_t k = 0; k < v.size(); ++k) {
        EXPECT_EQ(oracles::canonical(v[k]), v[k]);
        EXPECT_EQ(pluecker_relation(v[k]), 0);
        if (k > 0) EXPECT_LT(v[k - 1], v[k]);
    }
}

TEST(EnumerateSubspaces, VisitsSameSet) {
    std::size_t n = 0;
    enumerate_subspaces(HeightBudget(10), [&](const RationalSubspace& s) {
        ++n;
        EXPECT_LE(s.height_sq(), 10);
        EXPECT_EQ(gram_det(s.basis()), s.height_sq());
    });
    EXPECT_EQ(n, enumerate_pluecker(HeightBudget(10)).size());
    EXPECT_EQ(enumerate_subspaces(HeightBudget(10)).size(), n);
}

TEST(Count, LevelsAndCumulative) {
    const auto counts = count_by_height(HeightBudget(5));
    EXPECT_EQ(counts.at(1), 6);
    EXPECT_EQ(counts.at(2), 24);
    const auto cum = cumulative_counts(counts, 5);
    ASSERT_EQ(cum.size(), 6u);
    EXPECT_EQ(cum[0], 0);
    for (std::size_t k = 1; k < cum.size(); ++k) EXPECT_LE(cum[k - 1], cum[k]);
    EXPECT_EQ(cum[1], 6);
    EXPECT_EQ(cum[5], static_cast<std::int64_t>(enumerate_pluecker(HeightBudget(5)).size()));
    EXPECT_TRUE(count_by_height(HeightBudget(0)).empty());
}

TEST(Catalog, OrderedByHeight) {
    const auto cat = PlaneCatalog::build(HeightBudget(12));
    ASSERT_EQ(cat.size(), enumerate_pluecker(HeightBudget(12)).size());
    for (std::size_t k = 1; k < cat.size(); ++k)
        EXPECT_LE(cat.entries()[k - 1].height_sq, cat.entries()[k].height_sq);
}

TEST(BestApprox, CoordinatePlaneFindsItself) {
    const GraphChart a(ChartLabel(1, 2), Mat2{});
    const auto rec = best_approx(a, HeightBudget(30));
    ASSERT_FALSE(rec.empty());
    EXPECT_EQ(rec.front().psi_value.radians(), 0.0);
    EXPECT_EQ(rec.front().height_sq, 1);
    EXPECT_EQ(rec.size(), 1u);
}

TEST(BestApprox, BudgetOneIsMinOverCoordinatePlanes) {
    const GraphChart a(ChartLabel(1, 2), Mat2{0.5, 0.25, 0.25, 0.5});
    const auto frame = frame_of(a);
    double expected = 10;
    for (const auto& p : enumerate_pluecker(HeightBudget(1)))
        expected = std::min(expected, psi(frame, frame_of(to_pluecker(p))).radians());
    const auto rec = best_approx(a, HeightBudget(1));
    ASSERT_EQ(rec.size(), 1u);
    EXPECT_DOUBLE_EQ(rec[0].psi_value.radians(), expected);
}

TEST(BestApprox, RecordsStrictlyImprove) {
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> u(-1, 1);
    const auto cat = PlaneCatalog::build(HeightBudget(40));
    for (int t = 0; t < 10; ++t) {
        const auto a = frame_of(GraphChart(ChartLabel(1, 2), Mat2{u(gen), u(gen), u(gen), u(gen)}));
        const auto rec = best_approx(a, cat);
        for (std::size_t k = 1; k < rec.size(); ++k) {
            EXPECT_LT(rec[k].psi_value.radians(), rec[k - 1].psi_value.radians());
            EXPECT_GT(rec[k].height_sq, rec[k - 1].height_sq);
        }
        const auto mins = level_minima(a, cat);
        for (std::size_t k = 1; k < mins.size(); ++k) EXPECT_LE(mins[k].min_psi, mins[k - 1].min_psi);
        EXPECT_DOUBLE_EQ(mins.back().min_psi, rec.back().psi_value.radians());
    }
}

TEST(BestApprox, RationalPlaneReachesZero) {
    const auto s = RationalSubspace::from_spanning(make_matrix({1, 0, 2, -1}, {0, 1, 1, 1}));
    const auto h = s.height_sq().get_si();
    const auto rec = best_approx(frame_of(s), HeightBudget(h));
    EXPECT_LE(rec.back().psi_value.radians(), 1e-9);
}
