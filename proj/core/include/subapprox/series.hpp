#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subapprox/omega.hpp"

namespace subapprox {

enum class SeriesClass { converges, diverges, inconclusive };

[[nodiscard]] std::string to_string(SeriesClass c);

/// Thresholds of the dyadic-block ratio test. With D_k the sum of the terms
/// j omega(sqrt j) over 2^k < j <= 2^(k+1), the series is reported as
/// converging when the last kRatioWindow ratios D_{k+1}/D_k are all
/// <= kConvergeRatio and as diverging when they are all >= kDivergeRatio.
inline constexpr double kConvergeRatio = 0.9;
inline constexpr double kDivergeRatio = 1.0;
inline constexpr int kRatioWindow = 3;

struct SeriesVerdict {
    SeriesClass classification = SeriesClass::inconclusive;
    std::string method;                                         // "analytic" or "dyadic-ratio"
    std::vector<std::pair<std::int64_t, double>> partial_sums;  // (W, sum_{j<=W} j omega(sqrt j))
    std::vector<double> block_ratios;
};

/// Partial sums of sum_j j omega(sqrt j) on the doubling schedule
/// W = 1, 2, 4, ... (plus w_max itself). Power weights are classified
/// analytically (j^-beta gives terms j^(1 - beta/2), converging iff
/// beta > 4); other kinds use the dyadic ratio test. Throws
/// std::invalid_argument for w_max < 100 or a non-monotone omega.
[[nodiscard]] SeriesVerdict check_series(const OmegaFunction& omega, std::int64_t w_max);

struct AbelCheck {
    double direct = 0.0;      // sum_{j<=W} N(sqrt j) omega(sqrt j)
    double rearranged = 0.0;  // sum_{j<W} C(j) (omega(sqrt j) - omega(sqrt(j+1))) + omega(sqrt W) C(W)
    double relative_error = 0.0;
};

/// Both sides of the Abel partial-summation identity, with C(j) the
/// cumulative plane count up to level j.
[[nodiscard]] AbelCheck abel_summation_check(const std::map<std::int64_t, std::int64_t>& counts,
                                             const OmegaFunction& omega, std::int64_t w);

}  // namespace subapprox
