#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace subapprox {

/// A positive, non-increasing weight omega(j), j >= 1.
///
/// Three kinds are supported:
///   power       omega(j) = j^-beta, beta > 0
///   table       piecewise-linear through (j, omega) samples, strictly
///               increasing j; evaluation outside the sampled range throws
///   expression  a formula in j, e.g. "j^-4.5 / log(j + 2)^2"
class OmegaFunction {
public:
    enum class Kind { power, table, expression };

    static OmegaFunction power(double beta);
    static OmegaFunction table(std::vector<std::pair<double, double>> points);
    /// Two-column CSV (j, omega), optional header line.
    static OmegaFunction load_table(const std::string& path);
    static OmegaFunction expression(const std::string& formula);

    /// "pow:<beta>", "table:<path>" or "expr:<formula>".
    static OmegaFunction parse(const std::string& spec);

    [[nodiscard]] double operator()(double j) const;

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double exponent() const { return beta_; }
    [[nodiscard]] const std::string& description() const { return description_; }

    /// Throws std::invalid_argument if omega is negative or increases
    /// anywhere on a 2001-point grid over [1, j_max] (plus table knots).
    void check_monotone(double j_max) const;

    class Node;

private:
    OmegaFunction() = default;

    Kind kind_ = Kind::power;
    double beta_ = 0.0;
    std::vector<std::pair<double, double>> points_;
    std::shared_ptr<const Node> formula_;
    std::string description_;
};

}  // namespace subapprox
