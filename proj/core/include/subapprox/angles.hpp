#pragma once

#include "subapprox/exact_lattice.hpp"
#include "subapprox/grassmann_charts.hpp"

namespace subapprox {

/// Orthonormal frame (u1, u2) of a 2-plane in R^4.
class OrthoBasis2x4 {
public:
    [[nodiscard]] const Vec4& u1() const { return u1_; }
    [[nodiscard]] const Vec4& u2() const { return u2_; }

    friend OrthoBasis2x4 orthonormalize(const RealBasis2x4& basis);

private:
    OrthoBasis2x4(const Vec4& a, const Vec4& b) : u1_(a), u2_(b) {}
    Vec4 u1_;
    Vec4 u2_;
};

/// An angle in [0, pi/2].
class Angle {
public:
    /// Throws std::invalid_argument outside [0, pi/2].
    explicit Angle(double radians);
    [[nodiscard]] double radians() const { return radians_; }

private:
    double radians_;
};

/// Modified Gram-Schmidt with one reorthogonalisation pass. Throws
/// GeometryError("not a plane") when the second vector's residual is below
/// 1e-9 of its length.
[[nodiscard]] OrthoBasis2x4 orthonormalize(const RealBasis2x4& basis);

[[nodiscard]] OrthoBasis2x4 frame_of(const RationalSubspace& s);
[[nodiscard]] OrthoBasis2x4 frame_of(const PlueckerVector& p);
[[nodiscard]] OrthoBasis2x4 frame_of(const GraphChart& chart);
[[nodiscard]] OrthoBasis2x4 frame_of(const GraphPlane& plane);

[[nodiscard]] double dot(const Vec4& a, const Vec4& b);

/// Angle between two nonzero vectors, in [0, pi].
[[nodiscard]] double sigma(const Vec4& w, const Vec4& z);

/// Smallest principal angle between two planes, equivalently the minimum of
/// sigma(w, z) over unit vectors w in A and z in B.
///
/// With M the 2x2 matrix <u_i, v_j>, cos(psi) is the largest singular value
/// of M and sin(psi) the smallest singular value of the part of A's frame
/// orthogonal to B; psi = atan2(sin, cos), which stays accurate near zero.
[[nodiscard]] Angle psi(const OrthoBasis2x4& a, const OrthoBasis2x4& b);

/// Grid minimisation of sigma over grid x grid pairs of unit vectors
/// cos(t) u1 + sin(t) u2. Never below psi(a, b); requires grid >= 8.
[[nodiscard]] Angle psi_bruteforce(const OrthoBasis2x4& a, const OrthoBasis2x4& b, int grid);

/// Exact test for A ∩ B != {0}: the stacked 4x4 integer matrix is singular.
[[nodiscard]] bool intersects_nontrivially(const RationalSubspace& a, const RationalSubspace& b);

}  // namespace subapprox
