#include "subapprox/grassmann_charts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subapprox/error.hpp"

namespace subapprox {
namespace {

double signed_at(const RealPluecker& p, int i, int j) {
    return i < j ? p[pair_index(i, j)] : -p[pair_index(j, i)];
}

double norm(const RealPluecker& p) {
    double s = 0.0;
    for (double x : p) s += x * x;
    return std::sqrt(s);
}

// Position of coordinate c (1-based) inside the basis vector.
double& coord(Vec4& v, int c) { return v[static_cast<std::size_t>(c - 1)]; }
double coord(const Vec4& v, int c) { return v[static_cast<std::size_t>(c - 1)]; }

}  // namespace

ChartLabel::ChartLabel(int i, int j) : i_(i), j_(j) {
    if (i < 1 || j > 4 || i >= j) throw std::invalid_argument("chart label needs 1 <= i < j <= 4");
}

std::array<int, 2> ChartLabel::complement() const {
    std::array<int, 2> out{};
    std::size_t n = 0;
    for (int c = 1; c <= 4; ++c)
        if (c != i_ && c != j_) out[n++] = c;
    return out;
}

std::array<ChartLabel, 6> ChartLabel::all() {
    return {ChartLabel{1, 2}, ChartLabel{1, 3}, ChartLabel{1, 4},
            ChartLabel{2, 3}, ChartLabel{2, 4}, ChartLabel{3, 4}};
}

DeltaBand::DeltaBand(double delta) : delta_(delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
}

RealPluecker real_minors(const RealBasis2x4& basis) {
    RealPluecker p{};
    for (std::size_t k = 0; k < 6; ++k) {
        const int i = kPairs[k][0];
        const int j = kPairs[k][1];
        p[k] = coord(basis.u1, i) * coord(basis.u2, j) - coord(basis.u1, j) * coord(basis.u2, i);
    }
    return p;
}

GraphChart chart_over(const RealPluecker& p, ChartLabel label) {
    const double pivot = p[label.index()];
    if (!(std::abs(pivot) > 1e-14 * norm(p))) throw GeometryError("chart singular here");
    const int i1 = label.i();
    const int i2 = label.j();
    const auto [i3, i4] = label.complement();
    const Mat2 ell{-signed_at(p, i2, i3) / pivot, signed_at(p, i1, i3) / pivot,
                   -signed_at(p, i2, i4) / pivot, signed_at(p, i1, i4) / pivot};
    return GraphChart(label, ell);
}

GraphChart chart_of_subspace(const RealPluecker& p) {
    const double n = norm(p);
    if (n == 0.0) throw GeometryError("zero vector");
    if (std::abs(pluecker_relation(p)) > kRelationTolerance * n * n) throw GeometryError("not decomposable");
    std::size_t best = 0;
    for (std::size_t k = 1; k < 6; ++k)
        if (std::abs(p[k]) > std::abs(p[best])) best = k;
    return chart_over(p, ChartLabel(kPairs[best][0], kPairs[best][1]));
}

GraphChart chart_of_subspace(const PlueckerVector& p) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < 6; ++k)
        if (abs(p[k]) > abs(p[best])) best = k;
    const ChartLabel label(kPairs[best][0], kPairs[best][1]);
    const int i1 = label.i();
    const int i2 = label.j();
    const auto [i3, i4] = label.complement();
    const BigInt& pivot = p[best];
    auto ratio = [&](const BigInt& num) {
        mpq_class q(num, pivot);
        q.canonicalize();  // the pivot may be negative
        return q.get_d();
    };
    const Mat2 ell{ratio(-p.at(i2, i3)), ratio(p.at(i1, i3)), ratio(-p.at(i2, i4)), ratio(p.at(i1, i4))};
    return GraphChart(label, ell);
}

GraphPlane subspace_from_graph(const GraphChart& chart) {
    const int i1 = chart.label.i();
    const int i2 = chart.label.j();
    const auto [i3, i4] = chart.label.complement();
    GraphPlane out{};
    coord(out.basis.u1, i1) = 1.0;
    coord(out.basis.u1, i3) = chart.ell.m11;
    coord(out.basis.u1, i4) = chart.ell.m21;
    coord(out.basis.u2, i2) = 1.0;
    coord(out.basis.u2, i3) = chart.ell.m12;
    coord(out.basis.u2, i4) = chart.ell.m22;
    out.pluecker = real_minors(out.basis);
    const double n = norm(out.pluecker);
    for (double& x : out.pluecker) x /= n;
    return out;
}

bool in_delta_band(const GraphChart& chart, DeltaBand band) {
    const double lo = band.value();
    const double hi = 1.0 - band.value();
    const auto e = chart.ell.entries();
    const auto inside = [&](double v) { return std::abs(v) >= lo && std::abs(v) <= hi; };
    return std::all_of(e.begin(), e.end(), inside) && inside(chart.delta_of_ell);
}

GraphChart chart_transition(const GraphChart& chart, ChartLabel target) {
    if (target == chart.label) return chart;
    const GraphPlane plane = subspace_from_graph(chart);
    const Vec4& u = plane.basis.u1;
    const Vec4& v = plane.basis.u2;
    const int k = target.i();
    const int l = target.j();
    const auto [m, n] = target.complement();

    // Every basis row satisfies (z_m, z_n)^T = l' (z_k, z_l)^T, hence
    // l' = Y^T X^{-T} with X, Y the 2x2 column blocks (k,l) and (m,n).
    const double d = coord(u, k) * coord(v, l) - coord(v, k) * coord(u, l);
    double scale = 0.0;
    for (std::size_t c = 0; c < 4; ++c) scale = std::max({scale, std::abs(u[c]), std::abs(v[c])});
    if (!(std::abs(d) > 1e-14 * scale * scale)) throw GeometryError("chart singular here");

    const Mat2 yt{coord(u, m), coord(v, m), coord(u, n), coord(v, n)};
    const Mat2 xt_inv{coord(v, l) / d, -coord(v, k) / d, -coord(u, l) / d, coord(u, k) / d};
    const Mat2 ell{yt.m11 * xt_inv.m11 + yt.m12 * xt_inv.m21, yt.m11 * xt_inv.m12 + yt.m12 * xt_inv.m22,
                   yt.m21 * xt_inv.m11 + yt.m22 * xt_inv.m21, yt.m21 * xt_inv.m12 + yt.m22 * xt_inv.m22};
    return GraphChart(target, ell);
}

}  // namespace subapprox
