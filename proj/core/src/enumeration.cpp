#include "subapprox/enumeration.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "subapprox/parallel.hpp"

namespace subapprox {
namespace {

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct Unit {
    std::int64_t p12;
    std::int64_t p13;
};

// Completes the tuple behind a fixed (p12, p13) prefix. Canonical sign:
// while every earlier entry is zero the next one is restricted to >= 0.
void search_unit(std::int64_t budget, Unit unit, std::vector<SmallPluecker>& out) {
    const std::int64_t p12 = unit.p12;
    const std::int64_t p13 = unit.p13;
    const std::int64_t rem13 = budget - p12 * p12 - p13 * p13;
    if (rem13 < 0) return;
    bool lead = p12 != 0 || p13 != 0;

    auto emit = [&](SmallPluecker p) {
        std::int64_t g = 0;
        for (auto x : p) g = std::gcd(g, x);
        if (g == 1) out.push_back(p);
    };

    const std::int64_t r14 = isqrt(rem13);
    for (std::int64_t p14 = lead ? -r14 : 0; p14 <= r14; ++p14) {
        const std::int64_t rem14 = rem13 - p14 * p14;
        const bool lead14 = lead || p14 != 0;
        const std::int64_t r23 = isqrt(rem14);
        for (std::int64_t p23 = lead14 ? -r23 : 0; p23 <= r23; ++p23) {
            const std::int64_t rem23 = rem14 - p23 * p23;
            const bool lead23 = lead14 || p23 != 0;
            const std::int64_t r24 = isqrt(rem23);
            for (std::int64_t p24 = lead23 ? -r24 : 0; p24 <= r24; ++p24) {
                const std::int64_t rem24 = rem23 - p24 * p24;
                const bool lead24 = lead23 || p24 != 0;
                // p12 p34 = p13 p24 - p14 p23
                const std::int64_t rhs = p13 * p24 - p14 * p23;
                if (p12 != 0) {
                    if (rhs % p12 != 0) continue;
                    const std::int64_t p34 = rhs / p12;
                    if (p34 * p34 <= rem24) emit({p12, p13, p14, p23, p24, p34});
                } else {
                    if (rhs != 0) continue;
                    const std::int64_t r34 = isqrt(rem24);
                    for (std::int64_t p34 = lead24 ? -r34 : 1; p34 <= r34; ++p34)
                        emit({p12, p13, p14, p23, p24, p34});
                }
            }
        }
    }
}

}  // namespace

HeightBudget::HeightBudget(std::int64_t h_sq_max) : h_sq_max_(h_sq_max) {
    if (h_sq_max < 0) throw std::invalid_argument("height budget must be non-negative");
    if (h_sq_max >= (std::int64_t{1} << 62)) throw std::invalid_argument("height budget too large");
}

std::int64_t norm_sq(const SmallPluecker& p) {
    std::int64_t s = 0;
    for (auto x : p) s += x * x;
    return s;
}

PlueckerVector to_pluecker(const SmallPluecker& p) {
    std::array<BigInt, 6> raw;
    for (std::size_t k = 0; k < 6; ++k) raw[k] = static_cast<long>(p[k]);
    return PlueckerVector::from_raw(std::move(raw));
}

std::vector<SmallPluecker> enumerate_pluecker(HeightBudget budget) {
    const std::int64_t b = budget.value();
    std::vector<Unit> units;
    const std::int64_t r12 = isqrt(b);
    for (std::int64_t p12 = 0; p12 <= r12; ++p12) {
        const std::int64_t r13 = isqrt(b - p12 * p12);
        for (std::int64_t p13 = p12 == 0 ? 0 : -r13; p13 <= r13; ++p13) units.push_back({p12, p13});
    }
    std::vector<std::vector<SmallPluecker>> parts(units.size());
    parallel_for(units.size(), [&](std::size_t k) { search_unit(b, units[k], parts[k]); });

    std::vector<SmallPluecker> all;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    all.reserve(total);
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    return all;
}

void enumerate_subspaces(HeightBudget budget, const std::function<void(const RationalSubspace&)>& visit) {
    for (const auto& p : enumerate_pluecker(budget)) visit(subspace_from_pluecker(to_pluecker(p)));
}

std::vector<RationalSubspace> enumerate_subspaces(HeightBudget budget) {
    std::vector<RationalSubspace> out;
    enumerate_subspaces(budget, [&](const RationalSubspace& s) { out.push_back(s); });
    return out;
}

std::map<std::int64_t, std::int64_t> count_by_height(HeightBudget budget) {
    std::map<std::int64_t, std::int64_t> counts;
    for (const auto& p : enumerate_pluecker(budget)) ++counts[norm_sq(p)];
    return counts;
}

std::vector<std::int64_t> cumulative_counts(const std::map<std::int64_t, std::int64_t>& counts, std::int64_t budget) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(std::max<std::int64_t>(budget, 0) + 1));
    std::int64_t running = 0;
    for (std::int64_t l = 1; l <= budget; ++l) {
        if (auto it = counts.find(l); it != counts.end()) running += it->second;
        out[static_cast<std::size_t>(l)] = running;
    }
    return out;
}

PlaneCatalog PlaneCatalog::build(HeightBudget budget) {
    const auto tuples = enumerate_pluecker(budget);
    std::vector<std::size_t> order(tuples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norm_sq(tuples[x]) < norm_sq(tuples[y]); });

    std::vector<std::optional<Entry>> slots(order.size());
    parallel_for(order.size(), [&](std::size_t k) {
        const auto& p = tuples[order[k]];
        slots[k].emplace(Entry{p, norm_sq(p), frame_of(to_pluecker(p))});
    });

    PlaneCatalog catalog;
    catalog.budget_ = budget.value();
    catalog.entries_.reserve(slots.size());
    for (auto& s : slots) catalog.entries_.push_back(std::move(*s));
    return catalog;
}

std::vector<LevelMinimum> level_minima(const OrthoBasis2x4& a, const PlaneCatalog& catalog) {
    std::vector<LevelMinimum> out;
    const auto& entries = catalog.entries();
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const double v = psi(a, entries[k].frame).radians();
        if (v < best) {
            best = v;
            arg = k;
        }
        const bool level_ends = k + 1 == entries.size() || entries[k + 1].height_sq != entries[k].height_sq;
        if (level_ends) out.push_back({entries[k].height_sq, best, arg});
    }
    return out;
}

std::vector<ApproxRecord> best_approx(const OrthoBasis2x4& a, const PlaneCatalog& catalog) {
    std::vector<ApproxRecord> records;
    double previous = std::numeric_limits<double>::infinity();
    for (const auto& m : level_minima(a, catalog)) {
        if (!(m.min_psi < previous)) continue;
        previous = m.min_psi;
        const auto& e = catalog.entries()[m.argmin];
        records.push_back({subspace_from_pluecker(to_pluecker(e.pluecker)), Angle(m.min_psi),
                           BigInt(static_cast<long>(e.height_sq))});
    }
    return records;
}

std::vector<ApproxRecord> best_approx(const OrthoBasis2x4& a, HeightBudget budget) {
    return best_approx(a, PlaneCatalog::build(budget));
}

std::vector<ApproxRecord> best_approx(const GraphChart& a, HeightBudget budget) {
    return best_approx(frame_of(a), budget);
}

}  // namespace subapprox
