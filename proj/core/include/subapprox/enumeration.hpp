#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "subapprox/angles.hpp"
#include "subapprox/exact_lattice.hpp"

namespace subapprox {

/// Upper bound on H(B)^2. A budget of 0 admits no plane.
class HeightBudget {
public:
    /// Throws std::invalid_argument for negative values or values too large
    /// for the 64-bit search (>= 2^62).
    explicit HeightBudget(std::int64_t h_sq_max);
    [[nodiscard]] std::int64_t value() const { return h_sq_max_; }

private:
    std::int64_t h_sq_max_;
};

/// Canonical Plücker vector with machine-size entries. Entries are bounded
/// by sqrt(h_sq_max), so products never overflow for admissible budgets.
using SmallPluecker = std::array<std::int64_t, 6>;

[[nodiscard]] std::int64_t norm_sq(const SmallPluecker& p);
[[nodiscard]] PlueckerVector to_pluecker(const SmallPluecker& p);

/// Every canonical primitive Plücker vector with squared norm <= budget, in
/// lexicographic order of (p12, ..., p34). Work is split into disjoint
/// (p12, p13) prefixes and run on the worker pool; the result does not
/// depend on the number of threads.
[[nodiscard]] std::vector<SmallPluecker> enumerate_pluecker(HeightBudget budget);

/// Visits each rational plane with H^2 <= budget exactly once, in the same
/// order as enumerate_pluecker.
void enumerate_subspaces(HeightBudget budget, const std::function<void(const RationalSubspace&)>& visit);
[[nodiscard]] std::vector<RationalSubspace> enumerate_subspaces(HeightBudget budget);

/// N(sqrt(l)) for every level l <= budget with at least one plane.
[[nodiscard]] std::map<std::int64_t, std::int64_t> count_by_height(HeightBudget budget);

/// Running totals C(level) = sum_{l <= level} N(sqrt(l)), indexed by level
/// 0..budget (C(0) = 0).
[[nodiscard]] std::vector<std::int64_t> cumulative_counts(const std::map<std::int64_t, std::int64_t>& counts,
                                                          std::int64_t budget);

/// Enumerated planes with cached orthonormal frames, sorted by height then
/// by canonical vector.
class PlaneCatalog {
public:
    struct Entry {
        SmallPluecker pluecker;
        std::int64_t height_sq;
        OrthoBasis2x4 frame;
    };

    static PlaneCatalog build(HeightBudget budget);

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] std::int64_t budget() const { return budget_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

private:
    std::vector<Entry> entries_;
    std::int64_t budget_ = 0;
};

struct ApproxRecord {
    RationalSubspace best;
    Angle psi_value;
    BigInt height_sq;
};

/// Minimum of psi(A, B) over all B with H(B)^2 <= level, for each level
/// present in the catalog.
struct LevelMinimum {
    std::int64_t level_hsq;
    double min_psi;
    std::size_t argmin;  // index into the catalog
};

[[nodiscard]] std::vector<LevelMinimum> level_minima(const OrthoBasis2x4& a, const PlaneCatalog& catalog);

/// Best approximations: walking the levels in increasing order, one record
/// per level at which min psi strictly improves. Ties inside a level go to
/// the first plane in canonical order.
[[nodiscard]] std::vector<ApproxRecord> best_approx(const OrthoBasis2x4& a, const PlaneCatalog& catalog);
[[nodiscard]] std::vector<ApproxRecord> best_approx(const OrthoBasis2x4& a, HeightBudget budget);
[[nodiscard]] std::vector<ApproxRecord> best_approx(const GraphChart& a, HeightBudget budget);

}  // namespace subapprox
