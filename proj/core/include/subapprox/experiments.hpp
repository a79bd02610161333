#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subapprox/angles.hpp"
#include "subapprox/enumeration.hpp"
#include "subapprox/grassmann_charts.hpp"
#include "subapprox/omega.hpp"
#include "subapprox/table.hpp"

namespace subapprox {

struct ExperimentConfig {
    std::uint64_t seed = 1;
    double delta = 0.1;
    std::int64_t h_sq_max = 100;
    std::int64_t num_planes = 50;
    std::vector<double> epsilon_list{1e-2, 1e-3};
    std::uint64_t samples = 100000;  // admissible samples per epsilon (hilfssatz4)
    std::int64_t w_max = 10000;      // series horizon used to vet omega (lower-bound)
    std::string output_path;

    /// Throws std::invalid_argument on non-positive counts, h_sq_max < 1,
    /// delta outside (0, 1/2) or non-positive epsilons.
    void validate() const;
    [[nodiscard]] std::vector<std::pair<std::string, Cell>> describe() const;
};

/// Graph charts over (1,2) with l uniform on [-1,1]^4 conditioned on E(delta).
/// Sample k is drawn from stream k of `seed`.
[[nodiscard]] std::vector<GraphChart> sample_planes(std::uint64_t seed, DeltaBand band, std::int64_t count);

/// Least-squares slope of log(y) against log(x).
[[nodiscard]] double loglog_slope(std::span<const double> x, std::span<const double> y);

struct DirichletResult {
    Table table;
    double max_psi_h3 = 0.0;
    double slope = 0.0;
    std::size_t fit_points = 0;
};

/// One row per (plane, level): the smallest psi over all B with
/// H(B)^2 <= level and the product psi * H^3. The slope is fitted on the
/// pooled rows with level > 1 and psi > 0.
[[nodiscard]] DirichletResult run_dirichlet(std::span<const OrthoBasis2x4> planes, const PlaneCatalog& catalog);
[[nodiscard]] DirichletResult dirichlet_experiment(const ExperimentConfig& config);

/// min over the catalog of psi(A, B) / omega(H(B)); `argmin` receives the
/// catalog index attaining it. Throws std::domain_error if omega(H) == 0.
[[nodiscard]] double lower_bound_constant(const OrthoBasis2x4& a, const PlaneCatalog& catalog,
                                          const OmegaFunction& omega, std::size_t* argmin = nullptr);

struct LowerBoundResult {
    Table table;
    std::vector<double> constants;  // c(A) per sample, in sample order
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    std::string warning;  // non-empty when omega's series is not known to converge
};

[[nodiscard]] LowerBoundResult run_lower_bound(std::span<const OrthoBasis2x4> planes, const PlaneCatalog& catalog,
                                               const OmegaFunction& omega);
[[nodiscard]] LowerBoundResult lower_bound_experiment(const ExperimentConfig& config, const OmegaFunction& omega);

struct Hilfssatz4Stats {
    double delta = 0.0;
    double epsilon = 0.0;
    std::uint64_t admissible = 0;
    std::uint64_t attempts = 0;
    std::uint64_t violations = 0;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
};

/// Rational planes B (H(B)^2 <= h_sq_max) whose own chart lies in E(delta).
[[nodiscard]] std::vector<RationalSubspace> banded_rational_planes(DeltaBand band, std::int64_t h_sq_max);

/// Draws `admissible` samples A = graph(b + r u) with B from
/// banded_rational_planes, u uniform on the unit sphere and r uniform in
/// [0, 2 eps), keeping those accepted by check_hilfssatz4, and counts
/// violations of dist <= eps_1.
[[nodiscard]] Hilfssatz4Stats hilfssatz4_monte_carlo(DeltaBand band, double epsilon, std::uint64_t admissible,
                                                     std::uint64_t seed, std::int64_t b_height_sq_max = 100);

[[nodiscard]] Table hilfssatz4_experiment(const ExperimentConfig& config);

}  // namespace subapprox
