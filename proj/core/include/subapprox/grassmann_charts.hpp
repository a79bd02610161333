#pragma once

// Affine graph charts of the Grassmannian of 2-planes in R^4.
//
// A chart (i1, i2) with complement (i3, i4), i1 < i2 and i3 < i4, writes a
// plane as the graph
//
//     z_{i3} = l11 z_{i1} + l12 z_{i2}
//     z_{i4} = l21 z_{i1} + l22 z_{i2}
//
// and, after scaling p_{i1,i2} = 1, its Plücker coordinates are
//
//     p_{i1,i3} = l12,  p_{i1,i4} = l22,  p_{i2,i3} = -l11,
//     p_{i2,i4} = -l21, p_{i3,i4} = det(l).

#include <array>
#include <cstddef>

#include "subapprox/exact_lattice.hpp"
#include "subapprox/mat2.hpp"

namespace subapprox {

using RealPluecker = std::array<double, 6>;
using Vec4 = std::array<double, 4>;

/// One of the six coordinate pairs (i, j), 1 <= i < j <= 4.
class ChartLabel {
public:
    /// Throws std::invalid_argument unless 1 <= i < j <= 4.
    ChartLabel(int i, int j);

    [[nodiscard]] int i() const { return i_; }
    [[nodiscard]] int j() const { return j_; }
    [[nodiscard]] std::size_t index() const { return pair_index(i_, j_); }
    /// The remaining pair (i3, i4) in increasing order.
    [[nodiscard]] std::array<int, 2> complement() const;

    [[nodiscard]] static std::array<ChartLabel, 6> all();

    friend bool operator==(const ChartLabel&, const ChartLabel&) = default;

private:
    int i_;
    int j_;
};

/// A plane written as a graph over the coordinates of `label`.
struct GraphChart {
    ChartLabel label;
    Mat2 ell;
    double delta_of_ell;

    GraphChart(ChartLabel l, const Mat2& m) : label(l), ell(m), delta_of_ell(m.det()) {}
};

/// Width of the band E(delta): entries and determinant in [delta, 1 - delta].
class DeltaBand {
public:
    /// Throws std::invalid_argument unless 0 < delta < 1/2.
    explicit DeltaBand(double delta);
    [[nodiscard]] double value() const { return delta_; }

private:
    double delta_;
};

struct RealBasis2x4 {
    Vec4 u1;
    Vec4 u2;
};

struct GraphPlane {
    RealPluecker pluecker;  // unit Euclidean norm
    RealBasis2x4 basis;     // the graph basis, minors proportional to `pluecker`
};

inline constexpr double kRelationTolerance = 1e-9;

/// Plücker coordinates (unnormalised) of a real spanning pair.
[[nodiscard]] RealPluecker real_minors(const RealBasis2x4& basis);

/// Chart in which |p_{i1,i2}| is maximal (first in the fixed pair order on
/// ties), so that max |l| <= 1 and |det l| <= 1. Throws GeometryError for the
/// zero vector or when the real relation exceeds the tolerance
/// 1e-9 * |p|^2.
[[nodiscard]] GraphChart chart_of_subspace(const PlueckerVector& p);
[[nodiscard]] GraphChart chart_of_subspace(const RealPluecker& p);

/// Graph chart of `p` over a prescribed label. Throws
/// GeometryError("chart singular here") when p at that label vanishes.
[[nodiscard]] GraphChart chart_over(const RealPluecker& p, ChartLabel label);

/// The plane of a chart in ambient coordinates.
[[nodiscard]] GraphPlane subspace_from_graph(const GraphChart& chart);

[[nodiscard]] bool in_delta_band(const GraphChart& chart, DeltaBand band);

/// Re-expresses the plane of `chart` as a graph over `target`, by solving the
/// 2x2 system relating the two parametrisations. Throws
/// GeometryError("chart singular here") when the target minor vanishes.
[[nodiscard]] GraphChart chart_transition(const GraphChart& chart, ChartLabel target);

}  // namespace subapprox
