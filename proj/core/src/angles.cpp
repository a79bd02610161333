#include "subapprox/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "subapprox/error.hpp"

namespace subapprox {
namespace {

Vec4 axpy(double s, const Vec4& x, const Vec4& y) {
    return {y[0] + s * x[0], y[1] + s * x[1], y[2] + s * x[2], y[3] + s * x[3]};
}

double norm(const Vec4& v) { return std::sqrt(dot(v, v)); }

Vec4 scaled(const Vec4& v, double s) { return {v[0] * s, v[1] * s, v[2] * s, v[3] * s}; }

// Smallest singular value of the 4x2 matrix [a b], via a pivoted QR step.
double smallest_singular_value(Vec4 a, Vec4 b) {
    double na = norm(a);
    double nb = norm(b);
    if (na < nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    if (na == 0.0) return 0.0;
    const Vec4 q = scaled(a, 1.0 / na);
    const double r12 = dot(q, b);
    Vec4 rest = axpy(-r12, q, b);
    const double c = dot(q, rest);
    rest = axpy(-c, q, rest);
    const double r22 = norm(rest);
    return singular_values(Mat2{na, r12, 0.0, r22}).smallest;
}

BigInt det4(std::array<IntVector4, 4> m) {
    // Fraction-free (Bareiss) elimination.
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t piv = k;
        while (piv < 4 && m[piv][k] == 0) ++piv;
        if (piv == 4) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < 4; ++i) {
            for (std::size_t j = k + 1; j < 4; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        }
        prev = m[k][k];
    }
    return sign * m[3][3];
}

}  // namespace

Angle::Angle(double radians) : radians_(radians) {
    if (!(radians >= 0.0 && radians <= std::numbers::pi / 2)) throw std::invalid_argument("angle outside [0, pi/2]");
}

double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

OrthoBasis2x4 orthonormalize(const RealBasis2x4& basis) {
    const double n1 = norm(basis.u1);
    const double n2 = norm(basis.u2);
    if (!(n1 > 0.0) || !(n2 > 0.0)) throw GeometryError("not a plane");
    const Vec4 e1 = scaled(basis.u1, 1.0 / n1);
    Vec4 r = axpy(-dot(e1, basis.u2), e1, basis.u2);
    r = axpy(-dot(e1, r), e1, r);
    const double nr = norm(r);
    if (!(nr > 1e-9 * n2)) throw GeometryError("not a plane");
    return OrthoBasis2x4(e1, scaled(r, 1.0 / nr));
}

OrthoBasis2x4 frame_of(const RationalSubspace& s) {
    const auto& b = s.basis();
    RealBasis2x4 rb{};
    for (std::size_t c = 0; c < 4; ++c) {
        rb.u1[c] = b.q1[c].get_d();
        rb.u2[c] = b.q2[c].get_d();
    }
    return orthonormalize(rb);
}

OrthoBasis2x4 frame_of(const PlueckerVector& p) { return frame_of(subspace_from_graph(chart_of_subspace(p))); }

OrthoBasis2x4 frame_of(const GraphChart& chart) { return orthonormalize(subspace_from_graph(chart).basis); }

OrthoBasis2x4 frame_of(const GraphPlane& plane) { return orthonormalize(plane.basis); }

double sigma(const Vec4& w, const Vec4& z) {
    const double c = dot(w, z) / (norm(w) * norm(z));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

Angle psi(const OrthoBasis2x4& a, const OrthoBasis2x4& b) {
    const Mat2 cross{dot(a.u1(), b.u1()), dot(a.u1(), b.u2()), dot(a.u2(), b.u1()), dot(a.u2(), b.u2())};
    const double cos_psi = std::clamp(singular_values(cross).largest, 0.0, 1.0);
    // Residuals of A's frame after projecting onto B.
    const Vec4 r1 = axpy(-cross.m12, b.u2(), axpy(-cross.m11, b.u1(), a.u1()));
    const Vec4 r2 = axpy(-cross.m22, b.u2(), axpy(-cross.m21, b.u1(), a.u2()));
    const double sin_psi = std::clamp(smallest_singular_value(r1, r2), 0.0, 1.0);
    return Angle(std::clamp(std::atan2(sin_psi, cos_psi), 0.0, std::numbers::pi / 2));
}

Angle psi_bruteforce(const OrthoBasis2x4& a, const OrthoBasis2x4& b, int grid) {
    if (grid < 8) throw std::invalid_argument("grid must be >= 8");
    const double step = std::numbers::pi / grid;
    std::vector<Vec4> wa;
    std::vector<Vec4> wb;
    wa.reserve(static_cast<std::size_t>(grid));
    wb.reserve(static_cast<std::size_t>(grid));
    // Half circles suffice: sigma(w, -z) = pi - sigma(w, z) and the minimum
    // over both signs is taken below.
    for (int k = 0; k < grid; ++k) {
        const double t = k * step;
        wa.push_back(axpy(std::sin(t), a.u2(), scaled(a.u1(), std::cos(t))));
        wb.push_back(axpy(std::sin(t), b.u2(), scaled(b.u1(), std::cos(t))));
    }
    // Chord lengths avoid the acos cancellation near zero, so coincident
    // grid points give exactly 0.
    double best_chord = 2.0;
    for (const auto& w : wa) {
        for (const auto& z : wb) {
            double minus = 0.0;
            double plus = 0.0;
            for (std::size_t c = 0; c < 4; ++c) {
                minus += (w[c] - z[c]) * (w[c] - z[c]);
                plus += (w[c] + z[c]) * (w[c] + z[c]);
            }
            best_chord = std::min({best_chord, std::sqrt(minus), std::sqrt(plus)});
        }
    }
    return Angle(std::min(2.0 * std::asin(std::min(best_chord / 2.0, 1.0)), std::numbers::pi / 2));
}

bool intersects_nontrivially(const RationalSubspace& a, const RationalSubspace& b) {
    return det4({a.basis().q1, a.basis().q2, b.basis().q1, b.basis().q2}) == 0;
}

}  // namespace subapprox
