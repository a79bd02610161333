#include "subapprox/metric_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "subapprox/angles.hpp"
#include "subapprox/error.hpp"
#include "subapprox/parallel.hpp"
#include "subapprox/rng.hpp"

namespace subapprox {
namespace {

constexpr std::uint64_t kChunk = 1 << 16;

}  // namespace

double XiEtaPoint::norm() const { return std::sqrt(xi1 * xi1 + xi2 * xi2 + eta1 * eta1 + eta2 * eta2); }
double XiEtaPoint::xi_norm() const { return std::hypot(xi1, xi2); }
double XiEtaPoint::eta_norm() const { return std::hypot(eta1, eta2); }

XiEtaPoint to_xi_eta(const MatrixPoint& c) {
    return {0.5 * (c.m11 + c.m22), 0.5 * (c.m21 - c.m12), 0.5 * (c.m11 - c.m22), 0.5 * (c.m21 + c.m12)};
}

MatrixPoint from_xi_eta(const XiEtaPoint& z) {
    return {z.xi1 + z.eta1, z.eta2 - z.xi2, z.xi2 + z.eta2, z.xi1 - z.eta1};
}

double dist_to_sigma_b(const MatrixPoint& a, const MatrixPoint& b) {
    const XiEtaPoint z = to_xi_eta(a - b);
    return std::abs(z.xi_norm() - z.eta_norm());
}

double dist_to_shifted_cone(const XiEtaPoint& zeta, const XiEtaPoint& shift) {
    const XiEtaPoint d{zeta.xi1 - shift.xi1, zeta.xi2 - shift.xi2, zeta.eta1 - shift.eta1, zeta.eta2 - shift.eta2};
    return std::abs(d.xi_norm() - d.eta_norm()) / std::numbers::sqrt2;
}

double hilfssatz4_radius(double epsilon, double delta) {
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    static_cast<void>(DeltaBand(delta));  // validates 0 < delta < 1/2
    return 3.0 * epsilon * std::sqrt(2.0 + 4.0 / (delta * delta));
}

std::optional<Hilfssatz4Witness> check_hilfssatz4(const OmegaNeighborhoodSpec& spec, const GraphChart& a_chart) {
    const double delta = spec.delta.value();
    if (!in_delta_band(a_chart, spec.delta)) return std::nullopt;

    const GraphChart b_chart = chart_of_subspace(spec.b.pluecker());
    std::optional<GraphChart> a_in_b;
    try {
        a_in_b.emplace(chart_transition(a_chart, b_chart.label));
    } catch (const GeometryError&) {
        return std::nullopt;
    }
    if (a_in_b->ell.max_abs() > 1.0 / delta) return std::nullopt;

    const double angle = psi(frame_of(a_chart), frame_of(spec.b)).radians();
    if (angle > spec.epsilon) return std::nullopt;

    const double distance = dist_to_sigma_b(a_in_b->ell, b_chart.ell);
    const double radius = hilfssatz4_radius(spec.epsilon, delta);
    return Hilfssatz4Witness{angle, distance, radius, distance / radius, distance <= radius};
}

double ball_volume_4d(double t) { return std::numbers::pi * std::numbers::pi * t * t * t * t / 2.0; }

TubeVolumeEstimate tube_volume(const XiEtaPoint& z, double t, double epsilon, std::uint64_t samples,
                               std::uint64_t seed) {
    if (samples < 10000) throw std::invalid_argument("tube_volume needs at least 10^4 samples");
    if (!(t > 0.0)) throw std::invalid_argument("ball radius must be positive");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");

    const StreamRng root(seed);
    const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<std::uint64_t> hits(chunks, 0);
    parallel_for(chunks, [&](std::size_t c) {
        StreamRng rng = root.split(c);
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t n = std::min<std::uint64_t>(kChunk, samples - begin);
        std::uint64_t local = 0;
        for (std::uint64_t k = 0; k < n;) {
            const XiEtaPoint p{rng.uniform(-t, t), rng.uniform(-t, t), rng.uniform(-t, t), rng.uniform(-t, t)};
            if (p.norm() > t) continue;
            ++k;
            if (dist_to_shifted_cone(p, z) <= epsilon) ++local;
        }
        hits[c] = local;
    });

    TubeVolumeEstimate out;
    out.samples = samples;
    for (auto h : hits) out.hits += h;
    out.ball_volume = ball_volume_4d(t);
    const double frac = static_cast<double>(out.hits) / static_cast<double>(samples);
    out.estimate = frac * out.ball_volume;
    out.half_width = 3.0 * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples)) * out.ball_volume;
    return out;
}

}  // namespace subapprox
