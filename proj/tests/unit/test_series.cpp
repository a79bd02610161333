#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "subapprox/enumeration.hpp"
#include "subapprox/omega.hpp"
#include "subapprox/series.hpp"

using namespace subapprox;

TEST(Omega, Power) {
    const auto w = OmegaFunction::power(4.0);
    EXPECT_DOUBLE_EQ(w(2.0), 1.0 / 16);
    EXPECT_EQ(w.kind(), OmegaFunction::Kind::power);
    EXPECT_THROW((void)OmegaFunction::power(0.0), std::invalid_argument);
}

TEST(Omega, ParseSpecs) {
    EXPECT_DOUBLE_EQ(OmegaFunction::parse("pow:4.5")(4.0), std::pow(4.0, -4.5));
    const auto e = OmegaFunction::parse("expr:j^-4 / log(j + 2)^2");
    EXPECT_NEAR(e(3.0), std::pow(3.0, -4) / std::pow(std::log(5.0), 2), 1e-15);
    EXPECT_THROW((void)OmegaFunction::parse("bogus"), std::invalid_argument);
    EXPECT_THROW((void)OmegaFunction::parse("expr:j^"), std::invalid_argument);
    EXPECT_THROW((void)OmegaFunction::parse("pow:abc"), std::invalid_argument);
}

TEST(Omega, TableInterpolatesAndLoads) {
    const auto t = OmegaFunction::table({{1, 1}, {2, 0.5}, {4, 0.1}});
    EXPECT_DOUBLE_EQ(t(1.5), 0.75);
    EXPECT_THROW((void)t(5.0), std::out_of_range);
    EXPECT_THROW((void)OmegaFunction::table({{1, 1}, {1, 0.5}}), std::invalid_argument);

    const std::string path = ::testing::TempDir() + "omega_table.csv";
    {
        std::ofstream f(path);
        f << "j,omega\n1,1\n2,0.5\n4,0.1\n";
    }
    EXPECT_DOUBLE_EQ(OmegaFunction::parse("table:" + path)(3.0), 0.3);
    std::remove(path.c_str());
}

TEST(Omega, MonotoneCheck) {
    EXPECT_NO_THROW(OmegaFunction::power(4).check_monotone(100));
    EXPECT_THROW(OmegaFunction::expression("j").check_monotone(100), std::invalid_argument);
    EXPECT_THROW(OmegaFunction::table({{1, 1}, {2, 2}}).check_monotone(2), std::invalid_argument);
}

TEST(Series, AnalyticPowers) {
    const auto d = check_series(OmegaFunction::power(4.0), 10000);
    EXPECT_EQ(d.classification, SeriesClass::diverges);
    EXPECT_EQ(d.method, "analytic");
    const auto c = check_series(OmegaFunction::power(4.1), 10000);
    EXPECT_EQ(c.classification, SeriesClass::converges);
    EXPECT_EQ(c.method, "analytic");
    EXPECT_FALSE(c.partial_sums.empty());
    EXPECT_THROW((void)check_series(OmegaFunction::power(4.1), 10), std::invalid_argument);
    EXPECT_EQ(to_string(SeriesClass::inconclusive), "inconclusive");
}

TEST(Series, RatioTestOnNonPowerWeights) {
    const auto fast = check_series(OmegaFunction::parse("expr:j^-6"), 100000);
    EXPECT_EQ(fast.classification, SeriesClass::converges);
    EXPECT_EQ(fast.method, "dyadic-ratio");
    const auto slow = check_series(OmegaFunction::parse("expr:j^-3"), 100000);
    EXPECT_EQ(slow.classification, SeriesClass::diverges);
    // Written as a formula, j^-4 gives harmonic terms whose dyadic blocks grow.
    EXPECT_EQ(check_series(OmegaFunction::parse("expr:j^-4"), 100000).classification, SeriesClass::diverges);
    // Terms ~ 1/(j log j): blocks shrink like k/(k+1), between the thresholds.
    const auto edge = check_series(OmegaFunction::parse("expr:j^-4 / log(j^2 + 1)"), 100000);
    EXPECT_EQ(edge.classification, SeriesClass::inconclusive);
    EXPECT_EQ(edge.method, "dyadic-ratio");
}

TEST(Series, AbelSummationIdentity) {
    const auto counts = count_by_height(HeightBudget(400));
    for (double beta : {3.0, 4.0, 4.5, 6.0}) {
        for (std::int64_t w : {1, 2, 17, 100, 400}) {
            const auto r = abel_summation_check(counts, OmegaFunction::power(beta), w);
            EXPECT_LE(r.relative_error, 1e-9) << beta << " " << w;
            EXPECT_GT(r.direct, 0);
        }
    }
}
