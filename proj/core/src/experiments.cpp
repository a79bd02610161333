#include "subapprox/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "subapprox/metric_geometry.hpp"
#include "subapprox/parallel.hpp"
#include "subapprox/rng.hpp"
#include "subapprox/series.hpp"

namespace subapprox {
namespace {

constexpr std::uint64_t kMaxRejections = 10'000'000;
constexpr std::uint64_t kH4Chunk = 4096;

std::vector<Cell> pluecker_cells(const SmallPluecker& p) {
    return {Cell{p[0]}, Cell{p[1]}, Cell{p[2]}, Cell{p[3]}, Cell{p[4]}, Cell{p[5]}};
}

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Vec4 random_direction(StreamRng& rng) {
    for (;;) {
        const Vec4 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double n2 = dot(v, v);
        if (n2 > 1e-12 && n2 <= 1.0) {
            const double n = std::sqrt(n2);
            return {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
        }
    }
}

std::vector<OrthoBasis2x4> frames_of(const std::vector<GraphChart>& charts) {
    std::vector<OrthoBasis2x4> frames;
    frames.reserve(charts.size());
    for (const auto& c : charts) frames.push_back(frame_of(c));
    return frames;
}

}  // namespace

void ExperimentConfig::validate() const {
    (void)DeltaBand(delta);
    if (h_sq_max < 1) throw std::invalid_argument("h_sq_max must be >= 1");
    if (num_planes < 1) throw std::invalid_argument("num_planes must be positive");
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    if (w_max < 100) throw std::invalid_argument("w_max must be >= 100");
    for (double e : epsilon_list)
        if (!(e > 0.0)) throw std::invalid_argument("epsilons must be positive");
}

std::vector<std::pair<std::string, Cell>> ExperimentConfig::describe() const {
    std::string eps;
    for (std::size_t k = 0; k < epsilon_list.size(); ++k) eps += (k ? ";" : "") + format_real(epsilon_list[k]);
    return {{"seed", Cell{static_cast<std::int64_t>(seed)}},
            {"delta", Cell{delta}},
            {"h_sq_max", Cell{h_sq_max}},
            {"num_planes", Cell{num_planes}},
            {"epsilon_list", Cell{eps}},
            {"samples", Cell{static_cast<std::int64_t>(samples)}},
            {"w_max", Cell{w_max}}};
}

std::vector<GraphChart> sample_planes(std::uint64_t seed, DeltaBand band, std::int64_t count) {
    if (count < 0) throw std::invalid_argument("sample count must be non-negative");
    const StreamRng root(seed);
    std::vector<std::optional<GraphChart>> slots(static_cast<std::size_t>(count));
    parallel_for(slots.size(), [&](std::size_t k) {
        StreamRng rng = root.split(k);
        for (std::uint64_t attempt = 0; attempt < kMaxRejections; ++attempt) {
            const Mat2 ell{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            GraphChart chart(ChartLabel(1, 2), ell);
            if (in_delta_band(chart, band)) {
                slots[k].emplace(chart);
                return;
            }
        }
        throw std::runtime_error("rejection sampler for E(delta) did not terminate");
    });
    std::vector<GraphChart> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(*s);
    return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs >= 2 paired points");
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += std::log(x[k]);
        my += std::log(y[k]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = std::log(x[k]) - mx;
        sxy += dx * (std::log(y[k]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct x values");
    return sxy / sxx;
}

DirichletResult run_dirichlet(std::span<const OrthoBasis2x4> planes, const PlaneCatalog& catalog) {
    if (catalog.size() == 0) throw std::invalid_argument("empty enumeration");
    std::vector<std::vector<LevelMinimum>> minima(planes.size());
    parallel_for(planes.size(), [&](std::size_t k) { minima[k] = level_minima(planes[k], catalog); });

    DirichletResult out;
    out.table.schema = "subapprox.dirichlet.v1";
    out.table.columns = {"sample",   "level_hsq", "height",   "min_psi",  "psi_h3",  "best_p12",
                         "best_p13", "best_p14",  "best_p23", "best_p24", "best_p34"};
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t k = 0; k < planes.size(); ++k) {
        for (const auto& m : minima[k]) {
            const double h = std::sqrt(static_cast<double>(m.level_hsq));
            const double prod = m.min_psi * h * h * h;
            out.max_psi_h3 = std::max(out.max_psi_h3, prod);
            std::vector<Cell> row{Cell{static_cast<std::int64_t>(k)}, Cell{m.level_hsq}, Cell{h}, Cell{m.min_psi},
                                  Cell{prod}};
            for (auto& c : pluecker_cells(catalog.entries()[m.argmin].pluecker)) row.push_back(std::move(c));
            out.table.add_row(std::move(row));
            if (m.level_hsq > 1 && m.min_psi > 0.0) {
                xs.push_back(h);
                ys.push_back(m.min_psi);
            }
        }
    }
    out.fit_points = xs.size();
    out.slope = xs.size() >= 2 ? loglog_slope(xs, ys) : std::numeric_limits<double>::quiet_NaN();
    return out;
}

DirichletResult dirichlet_experiment(const ExperimentConfig& config) {
    config.validate();
    const auto frames = frames_of(sample_planes(config.seed, DeltaBand(config.delta), config.num_planes));
    const PlaneCatalog catalog = PlaneCatalog::build(HeightBudget(config.h_sq_max));
    DirichletResult r = run_dirichlet(frames, catalog);
    r.table.config = config.describe();
    r.table.config.emplace_back("max_psi_h3", Cell{r.max_psi_h3});
    r.table.config.emplace_back("slope", Cell{r.slope});
    return r;
}

double lower_bound_constant(const OrthoBasis2x4& a, const PlaneCatalog& catalog, const OmegaFunction& omega,
                            std::size_t* argmin) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    double omega_h = 0.0;
    std::int64_t level = -1;
    const auto& entries = catalog.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].height_sq != level) {
            level = entries[k].height_sq;
            omega_h = omega(std::sqrt(static_cast<double>(level)));
            if (!(omega_h > 0.0)) throw std::domain_error("omega(H) = 0 encountered");
        }
        const double v = psi(a, entries[k].frame).radians() / omega_h;
        if (v < best) {
            best = v;
            arg = k;
        }
    }
    if (argmin) *argmin = arg;
    return best;
}

LowerBoundResult run_lower_bound(std::span<const OrthoBasis2x4> planes, const PlaneCatalog& catalog,
                                 const OmegaFunction& omega) {
    if (catalog.size() == 0) throw std::invalid_argument("empty enumeration");
    if (planes.empty()) throw std::invalid_argument("no planes to evaluate");
    std::vector<double> constants(planes.size());
    std::vector<std::size_t> args(planes.size());
    parallel_for(planes.size(),
                 [&](std::size_t k) { constants[k] = lower_bound_constant(planes[k], catalog, omega, &args[k]); });

    LowerBoundResult out;
    out.constants = constants;
    out.table.schema = "subapprox.lower_bound.v1";
    out.table.columns = {"sample",     "c_a",        "argmin_hsq", "argmin_psi", "argmin_p12",
                         "argmin_p13", "argmin_p14", "argmin_p23", "argmin_p24", "argmin_p34"};
    for (std::size_t k = 0; k < planes.size(); ++k) {
        const auto& e = catalog.entries()[args[k]];
        std::vector<Cell> row{Cell{static_cast<std::int64_t>(k)}, Cell{constants[k]}, Cell{e.height_sq},
                              Cell{psi(planes[k], e.frame).radians()}};
        for (auto& c : pluecker_cells(e.pluecker)) row.push_back(std::move(c));
        out.table.add_row(std::move(row));
    }
    std::sort(constants.begin(), constants.end());
    out.min = constants.front();
    out.q1 = quantile(constants, 0.25);
    out.median = quantile(constants, 0.5);
    out.q3 = quantile(constants, 0.75);
    out.max = constants.back();
    return out;
}

LowerBoundResult lower_bound_experiment(const ExperimentConfig& config, const OmegaFunction& omega) {
    config.validate();
    std::string warning;
    try {
        const auto verdict = check_series(omega, config.w_max);
        if (verdict.classification != SeriesClass::converges)
            warning = "series sum j*omega(sqrt j) " + to_string(verdict.classification) + " for " +
                      omega.description();
    } catch (const std::out_of_range& e) {
        warning = std::string("series not checked: ") + e.what();
    }
    const auto frames = frames_of(sample_planes(config.seed, DeltaBand(config.delta), config.num_planes));
    const PlaneCatalog catalog = PlaneCatalog::build(HeightBudget(config.h_sq_max));
    LowerBoundResult r = run_lower_bound(frames, catalog, omega);
    r.warning = warning;
    r.table.config = config.describe();
    r.table.config.emplace_back("omega", Cell{omega.description()});
    r.table.config.emplace_back("c_min", Cell{r.min});
    r.table.config.emplace_back("c_q1", Cell{r.q1});
    r.table.config.emplace_back("c_median", Cell{r.median});
    r.table.config.emplace_back("c_q3", Cell{r.q3});
    r.table.config.emplace_back("c_max", Cell{r.max});
    return r;
}

std::vector<RationalSubspace> banded_rational_planes(DeltaBand band, std::int64_t h_sq_max) {
    std::vector<RationalSubspace> out;
    for (const auto& p : enumerate_pluecker(HeightBudget(h_sq_max))) {
        const PlueckerVector pv = to_pluecker(p);
        if (in_delta_band(chart_of_subspace(pv), band)) out.push_back(subspace_from_pluecker(pv));
    }
    return out;
}

Hilfssatz4Stats hilfssatz4_monte_carlo(DeltaBand band, double epsilon, std::uint64_t admissible, std::uint64_t seed,
                                       std::int64_t b_height_sq_max) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const auto planes = banded_rational_planes(band, b_height_sq_max);
    if (planes.empty()) throw std::invalid_argument("no rational plane inside E(delta) within the height budget");
    std::vector<GraphChart> b_charts;
    b_charts.reserve(planes.size());
    for (const auto& b : planes) b_charts.push_back(chart_of_subspace(b.pluecker()));

    struct Partial {
        std::uint64_t admissible = 0;
        std::uint64_t attempts = 0;
        std::uint64_t violations = 0;
        double max_ratio = 0.0;
        double sum_ratio = 0.0;
    };
    const std::size_t chunks = static_cast<std::size_t>((admissible + kH4Chunk - 1) / kH4Chunk);
    std::vector<Partial> parts(chunks);
    const StreamRng root(seed);
    parallel_for(chunks, [&](std::size_t c) {
        StreamRng rng = root.split(c);
        const std::uint64_t target = std::min<std::uint64_t>(kH4Chunk, admissible - c * kH4Chunk);
        Partial& part = parts[c];
        while (part.admissible < target) {
            if (++part.attempts > kMaxRejections) throw std::runtime_error("hilfssatz4 sampler starved");
            const auto idx = static_cast<std::size_t>(rng.next() % planes.size());
            const Vec4 u = random_direction(rng);
            const double r = rng.uniform(0.0, 2.0 * epsilon);
            const Mat2 a = b_charts[idx].ell + r * Mat2{u[0], u[1], u[2], u[3]};
            const GraphChart own =
                chart_of_subspace(subspace_from_graph(GraphChart(b_charts[idx].label, a)).pluecker);
            const auto w = check_hilfssatz4(OmegaNeighborhoodSpec{planes[idx], epsilon, band}, own);
            if (!w) continue;
            ++part.admissible;
            if (!w->holds) ++part.violations;
            part.max_ratio = std::max(part.max_ratio, w->ratio);
            part.sum_ratio += w->ratio;
        }
    });

    Hilfssatz4Stats s;
    s.delta = band.value();
    s.epsilon = epsilon;
    double sum_ratio = 0.0;
    for (const auto& p : parts) {
        s.admissible += p.admissible;
        s.attempts += p.attempts;
        s.violations += p.violations;
        s.max_ratio = std::max(s.max_ratio, p.max_ratio);
        sum_ratio += p.sum_ratio;
    }
    s.mean_ratio = s.admissible ? sum_ratio / static_cast<double>(s.admissible) : 0.0;
    return s;
}

Table hilfssatz4_experiment(const ExperimentConfig& config) {
    config.validate();
    Table t;
    t.schema = "subapprox.hilfssatz4.v1";
    t.config = config.describe();
    t.columns = {"delta", "epsilon", "eps1", "admissible", "attempts", "violations", "max_ratio", "mean_ratio"};
    for (std::size_t k = 0; k < config.epsilon_list.size(); ++k) {
        const double eps = config.epsilon_list[k];
        const auto s = hilfssatz4_monte_carlo(DeltaBand(config.delta), eps, config.samples,
                                              StreamRng(config.seed).split(k).key(), config.h_sq_max);
        t.add_row({Cell{s.delta}, Cell{eps}, Cell{hilfssatz4_radius(eps, s.delta)},
                   Cell{static_cast<std::int64_t>(s.admissible)}, Cell{static_cast<std::int64_t>(s.attempts)},
                   Cell{static_cast<std::int64_t>(s.violations)}, Cell{s.max_ratio}, Cell{s.mean_ratio}});
    }
    return t;
}

}  // namespace subapprox
