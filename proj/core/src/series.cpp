#include "subapprox/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subapprox/enumeration.hpp"

namespace subapprox {

std::string to_string(SeriesClass c) {
    switch (c) {
        case SeriesClass::converges: return "converges";
        case SeriesClass::diverges: return "diverges";
        case SeriesClass::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

SeriesVerdict check_series(const OmegaFunction& omega, std::int64_t w_max) {
    if (w_max < 100) throw std::invalid_argument("check_series needs w_max >= 100");
    omega.check_monotone(std::sqrt(static_cast<double>(w_max)));

    SeriesVerdict v;
    long double sum = 0.0L;
    std::int64_t next_mark = 1;
    std::vector<long double> power_sums;  // S(2^k)
    for (std::int64_t j = 1; j <= w_max; ++j) {
        sum += static_cast<long double>(j) * omega(std::sqrt(static_cast<double>(j)));
        if (j == next_mark) {
            power_sums.push_back(sum);
            v.partial_sums.emplace_back(j, static_cast<double>(sum));
            next_mark *= 2;
        } else if (j == w_max) {
            v.partial_sums.emplace_back(j, static_cast<double>(sum));
        }
    }

    for (std::size_t k = 2; k < power_sums.size(); ++k) {
        const long double prev_block = power_sums[k - 1] - power_sums[k - 2];
        const long double block = power_sums[k] - power_sums[k - 1];
        v.block_ratios.push_back(prev_block > 0 ? static_cast<double>(block / prev_block) : 0.0);
    }

    if (omega.kind() == OmegaFunction::Kind::power) {
        v.method = "analytic";
        v.classification = omega.exponent() > 4.0 ? SeriesClass::converges : SeriesClass::diverges;
        return v;
    }

    v.method = "dyadic-ratio";
    if (v.block_ratios.size() >= static_cast<std::size_t>(kRatioWindow)) {
        const auto tail = v.block_ratios.end() - kRatioWindow;
        if (std::all_of(tail, v.block_ratios.end(), [](double r) { return r <= kConvergeRatio; }))
            v.classification = SeriesClass::converges;
        else if (std::all_of(tail, v.block_ratios.end(), [](double r) { return r >= kDivergeRatio; }))
            v.classification = SeriesClass::diverges;
    }
    return v;
}

AbelCheck abel_summation_check(const std::map<std::int64_t, std::int64_t>& counts, const OmegaFunction& omega,
                               std::int64_t w) {
    if (w < 1) throw std::invalid_argument("abel check needs W >= 1");
    const auto cumulative = cumulative_counts(counts, w);
    auto n_at = [&](std::int64_t j) {
        auto it = counts.find(j);
        return it == counts.end() ? 0.0L : static_cast<long double>(it->second);
    };
    auto om = [&](std::int64_t j) { return static_cast<long double>(omega(std::sqrt(static_cast<double>(j)))); };
    auto c_at = [&](std::int64_t j) { return static_cast<long double>(cumulative[static_cast<std::size_t>(j)]); };

    long double direct = 0.0L;
    for (std::int64_t j = 1; j <= w; ++j) direct += n_at(j) * om(j);

    long double rearranged = 0.0L;
    for (std::int64_t j = 1; j < w; ++j) rearranged += c_at(j) * (om(j) - om(j + 1));
    rearranged += om(w) * c_at(w);

    AbelCheck out;
    out.direct = static_cast<double>(direct);
    out.rearranged = static_cast<double>(rearranged);
    const long double scale = std::max(std::abs(direct), std::abs(rearranged));
    out.relative_error = scale > 0 ? static_cast<double>(std::abs(direct - rearranged) / scale) : 0.0;
    return out;
}

}  // namespace subapprox
