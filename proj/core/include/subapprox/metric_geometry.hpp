#pragma once

// Geometry of the determinantal surface Sigma_B = {a : det(a - b) = 0} in
// the space of graph matrices, and of its tube neighbourhoods.

#include <cstdint>
#include <optional>

#include "subapprox/exact_lattice.hpp"
#include "subapprox/grassmann_charts.hpp"
#include "subapprox/mat2.hpp"

namespace subapprox {

/// Graph matrix (a11, a12, a21, a22) of a plane y_j = a_j1 x1 + a_j2 x2.
using MatrixPoint = Mat2;

/// Rotated coordinates in which det c = xi1^2 + xi2^2 - eta1^2 - eta2^2:
///   xi1 = (c11 + c22)/2, eta1 = (c11 - c22)/2,
///   xi2 = (c21 - c12)/2, eta2 = (c21 + c12)/2.
struct XiEtaPoint {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;

    [[nodiscard]] double norm() const;
    [[nodiscard]] double xi_norm() const;
    [[nodiscard]] double eta_norm() const;
};

[[nodiscard]] XiEtaPoint to_xi_eta(const MatrixPoint& c);
[[nodiscard]] MatrixPoint from_xi_eta(const XiEtaPoint& z);

/// The ball K_T = {|zeta| <= T} shifted to `center`.
struct Ball {
    double radius;
    XiEtaPoint center;
};

/// Data of the neighbourhood Omega(B, eps; delta).
struct OmegaNeighborhoodSpec {
    RationalSubspace b;
    double epsilon;
    DeltaBand delta;
};

/// Euclidean distance in R^4 from a to Sigma_B.
///
/// In zeta = to_xi_eta(a - b) the surface is the cone |xi| = |eta|; moving
/// radially inside the (|xi|, |eta|) quarter-plane gives distance
/// ||xi| - |eta|| / sqrt(2) in zeta-space, i.e. ||xi| - |eta|| in the matrix
/// coordinates. This is the smallest singular value of a - b.
[[nodiscard]] double dist_to_sigma_b(const MatrixPoint& a, const MatrixPoint& b);

/// Distance from zeta to the cone Z + Sigma, measured in zeta-space.
[[nodiscard]] double dist_to_shifted_cone(const XiEtaPoint& zeta, const XiEtaPoint& shift);

/// 3 eps sqrt(2 + 4 / delta^2).
[[nodiscard]] double hilfssatz4_radius(double epsilon, double delta);

struct Hilfssatz4Witness {
    double psi;        // psi(A, B)
    double distance;   // dist(a, Sigma_B) in B's chart
    double radius;     // eps_1
    double ratio;      // distance / radius
    bool holds;        // distance <= radius
};

/// Checks dist(a, Sigma_B) <= eps_1 for the plane A given by `a_chart`,
/// where a is A's graph matrix over the chart of B with maximal |p|.
/// Returns nullopt (a skip, not a failure) when A is outside E(delta), when
/// A is singular over B's chart, when a leaves the box max|a| <= 1/delta, or
/// when psi(A, B) > eps.
[[nodiscard]] std::optional<Hilfssatz4Witness> check_hilfssatz4(const OmegaNeighborhoodSpec& spec,
                                                                const GraphChart& a_chart);

struct TubeVolumeEstimate {
    double estimate = 0.0;
    double half_width = 0.0;  // 3 sigma binomial interval
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    double ball_volume = 0.0;
};

/// Monte-Carlo estimate of mu_4(U_eps(Z + Sigma) ∩ K_T), with K_T centred at
/// the origin of zeta-space. `samples` uniform points of K_T are drawn in
/// fixed-size chunks, each from its own split stream of `seed`, so the
/// result depends only on (Z, T, eps, samples, seed). Requires
/// samples >= 10^4, T > 0 and eps >= 0.
[[nodiscard]] TubeVolumeEstimate tube_volume(const XiEtaPoint& z, double t, double epsilon, std::uint64_t samples,
                                             std::uint64_t seed);

/// pi^2 T^4 / 2.
[[nodiscard]] double ball_volume_4d(double t);

}  // namespace subapprox
