#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace subapprox {

/// Real 2x2 matrix stored row-major as (m11, m12, m21, m22).
struct Mat2 {
    double m11 = 0.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 0.0;

    [[nodiscard]] constexpr double det() const { return m11 * m22 - m21 * m12; }

    [[nodiscard]] double max_abs() const {
        return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
    }

    [[nodiscard]] double frobenius() const {
        return std::sqrt(m11 * m11 + m12 * m12 + m21 * m21 + m22 * m22);
    }

    [[nodiscard]] constexpr std::array<double, 4> entries() const { return {m11, m12, m21, m22}; }

    friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }
    friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
    }
    friend constexpr Mat2 operator*(double s, const Mat2& a) {
        return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

struct SingularValues2 {
    double largest = 0.0;
    double smallest = 0.0;
};

/// Closed-form singular values of a 2x2 matrix.
///
/// Any 2x2 matrix splits into a rotation-scaling part and a
/// reflection-scaling part; with p, q the magnitudes of those two parts the
/// singular values are p + q and |p - q|.
[[nodiscard]] inline SingularValues2 singular_values(const Mat2& m) {
    const double p = std::hypot(0.5 * (m.m11 + m.m22), 0.5 * (m.m21 - m.m12));
    const double q = std::hypot(0.5 * (m.m11 - m.m22), 0.5 * (m.m21 + m.m12));
    return {p + q, std::abs(p - q)};
}

}  // namespace subapprox
