#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "subapprox/angles.hpp"
#include "subapprox/enumeration.hpp"
#include "subapprox/error.hpp"
#include "subapprox/exact_lattice.hpp"
#include "subapprox/experiments.hpp"
#include "subapprox/grassmann_charts.hpp"
#include "subapprox/metric_geometry.hpp"
#include "subapprox/omega.hpp"
#include "subapprox/series.hpp"
#include "subapprox/table.hpp"

namespace subapprox::cli {
namespace {

// Malformed argument text; reported like a CLI11 parse failure (exit 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--out", c.out, "Write the result to this file instead of stdout");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

bool parse_integer(const std::string& s, BigInt& v) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return v.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::vector<double> parse_reals(const std::string& s, std::size_t expected) {
    std::vector<double> v;
    for (const auto& part : split(s, ',')) v.push_back(parse_real(part));
    if (expected && v.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " comma-separated numbers in '" + s + "'");
    return v;
}

// A plane given on the command line. Exact input keeps its rational form.
struct PlaneArg {
    std::optional<RationalSubspace> rational;
    std::optional<OrthoBasis2x4> frame;
};

PlaneArg parse_plane(const std::string& text) {
    PlaneArg arg;
    // Coordinate planes: "e1e2", "e3e4", ...
    if (text.size() == 4 && text[0] == 'e' && text[2] == 'e' && std::isdigit(static_cast<unsigned char>(text[1])) &&
        std::isdigit(static_cast<unsigned char>(text[3]))) {
        const int i = text[1] - '0';
        const int j = text[3] - '0';
        if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) throw UsageError("bad coordinate plane '" + text + "'");
        std::array<long, 4> a{}, b{};
        a[static_cast<std::size_t>(i - 1)] = 1;
        b[static_cast<std::size_t>(j - 1)] = 1;
        arg.rational.emplace(RationalSubspace::from_spanning(make_matrix(a, b)));
        arg.frame.emplace(frame_of(*arg.rational));
        return arg;
    }

    const auto colon = text.find(':');
    const std::string kind = colon == std::string::npos ? "basis" : text.substr(0, colon);
    const std::string body = colon == std::string::npos ? text : text.substr(colon + 1);

    if (kind == "pluecker") {
        const auto parts = split(body, ',');
        if (parts.size() != 6) throw UsageError("pluecker: needs six integers");
        std::array<BigInt, 6> raw;
        for (std::size_t k = 0; k < 6; ++k)
            if (!parse_integer(parts[k], raw[k])) throw UsageError("pluecker: entries must be integers");
        arg.rational.emplace(subspace_from_pluecker(raw));
        arg.frame.emplace(frame_of(*arg.rational));
        return arg;
    }
    if (kind == "chart") {
        const auto parts = split(body, ':');
        if (parts.size() != 2 || parts[0].size() != 2) throw UsageError("chart: expects chart:IJ:l11,l12,l21,l22");
        const auto l = parse_reals(parts[1], 4);
        std::optional<ChartLabel> label;
        try {
            label.emplace(parts[0][0] - '0', parts[0][1] - '0');
        } catch (const std::invalid_argument&) {
            throw UsageError("chart: bad label '" + parts[0] + "'");
        }
        arg.frame.emplace(frame_of(GraphChart(*label, Mat2{l[0], l[1], l[2], l[3]})));
        return arg;
    }
    if (kind == "basis") {
        const auto rows = split(body, ';');
        if (rows.size() != 2) throw UsageError("basis: expects two ';'-separated rows");
        std::array<std::vector<std::string>, 2> cells{split(rows[0], ','), split(rows[1], ',')};
        if (cells[0].size() != 4 || cells[1].size() != 4) throw UsageError("basis: rows need four entries");
        IntMatrix2x4 m;
        bool integral = true;
        for (std::size_t c = 0; c < 4 && integral; ++c)
            integral = parse_integer(cells[0][c], m.q1[c]) && parse_integer(cells[1][c], m.q2[c]);
        if (integral) {
            arg.rational.emplace(RationalSubspace::from_spanning(m));
            arg.frame.emplace(frame_of(*arg.rational));
        } else {
            RealBasis2x4 rb{};
            for (std::size_t c = 0; c < 4; ++c) {
                rb.u1[c] = parse_real(cells[0][c]);
                rb.u2[c] = parse_real(cells[1][c]);
            }
            arg.frame.emplace(orthonormalize(rb));
        }
        return arg;
    }
    throw UsageError("unknown plane syntax '" + text + "'");
}

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

class Output {
public:
    Output(const Common& c, std::ostream& fallback) : format_(c.format) {
        if (!c.out.empty()) {
            file_ = std::make_unique<std::ofstream>(c.out, std::ios::binary);
            if (!*file_) throw std::runtime_error("cannot open output file " + c.out);
        }
        os_ = file_ ? file_.get() : &fallback;
    }

    void table(const Table& t) {
        if (format_ == "json") t.write_json(*os_);
        else t.write_csv(*os_);
    }

    std::ostream& stream() { return *os_; }

private:
    std::string format_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

Table plain_table(std::string schema, std::vector<std::string> columns) {
    Table t;
    t.schema = std::move(schema);
    t.csv_schema_column = false;
    t.columns = std::move(columns);
    return t;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Approximation of 2-planes in R^4 by rational planes", "subapprox"};
    app.require_subcommand(1);
    app.fallthrough(false);

    int status = 0;
    std::function<void()> action;

    // height
    Common c_height;
    std::string height_plane;
    auto* height = app.add_subcommand("height", "H(B)^2 of a rational plane");
    add_common(height, c_height);
    height->add_option("--plane", height_plane, "Plane: e1e2, basis:..., pluecker:...")->required();
    height->callback([&] {
        action = [&] {
            const PlaneArg p = parse_plane(height_plane);
            if (!p.rational) throw UsageError("height needs a rational plane");
            const BigInt h = height_sq(*p.rational);
            Table t = plain_table("subapprox.height.v1", {"height_sq", "height"});
            t.add_row({Cell{to_int64(h)}, Cell{std::sqrt(h.get_d())}});
            Output(c_height, out).table(t);
        };
    });

    // pluecker
    Common c_pl;
    std::string pl_plane;
    auto* pl = app.add_subcommand("pluecker", "Canonical Plücker vector of a rational plane");
    add_common(pl, c_pl);
    pl->add_option("--plane", pl_plane, "Plane: e1e2, basis:..., pluecker:...")->required();
    pl->callback([&] {
        action = [&] {
            const PlaneArg p = parse_plane(pl_plane);
            if (!p.rational) throw UsageError("pluecker needs a rational plane");
            Table t = plain_table("subapprox.pluecker.v1", {"p12", "p13", "p14", "p23", "p24", "p34"});
            std::vector<Cell> row;
            for (const auto& x : p.rational->pluecker().entries()) row.emplace_back(to_int64(x));
            t.add_row(std::move(row));
            Output(c_pl, out).table(t);
        };
    });

    // angle
    Common c_angle;
    std::string angle_a, angle_b;
    auto* angle = app.add_subcommand("angle", "Smallest principal angle psi(A, B)");
    add_common(angle, c_angle);
    angle->add_option("--a", angle_a, "First plane")->required();
    angle->add_option("--b", angle_b, "Second plane")->required();
    angle->callback([&] {
        action = [&] {
            const PlaneArg a = parse_plane(angle_a);
            const PlaneArg b = parse_plane(angle_b);
            const double v = psi(*a.frame, *b.frame).radians();
            Output o(c_angle, out);
            if (c_angle.format == "json") {
                Table t = plain_table("subapprox.angle.v1", {"psi"});
                t.add_row({Cell{v}});
                o.table(t);
            } else {
                o.stream() << format_real(v) << '\n';
            }
        };
    });

    // enumerate
    Common c_enum;
    std::int64_t enum_hsq = 0;
    auto* enumerate = app.add_subcommand("enumerate", "All rational planes with H^2 <= budget");
    add_common(enumerate, c_enum);
    enumerate->add_option("--hsq-max", enum_hsq, "Budget for H(B)^2")->required()->check(CLI::NonNegativeNumber);
    enumerate->callback([&] {
        action = [&] {
            Table t = plain_table("subapprox.enumerate.v1", {"p12", "p13", "p14", "p23", "p24", "p34", "height_sq"});
            for (const auto& p : enumerate_pluecker(HeightBudget(enum_hsq)))
                t.add_row({Cell{p[0]}, Cell{p[1]}, Cell{p[2]}, Cell{p[3]}, Cell{p[4]}, Cell{p[5]}, Cell{norm_sq(p)}});
            Output(c_enum, out).table(t);
        };
    });

    // count
    Common c_count;
    std::int64_t count_hsq = 0;
    auto* count = app.add_subcommand("count", "N(H) per level H^2 <= budget");
    add_common(count, c_count);
    count->add_option("--hsq-max", count_hsq, "Budget for H(B)^2")->required()->check(CLI::NonNegativeNumber);
    count->callback([&] {
        action = [&] {
            Table t = plain_table("subapprox.count.v1", {"level_hsq", "count"});
            for (const auto& [level, n] : count_by_height(HeightBudget(count_hsq))) t.add_row({Cell{level}, Cell{n}});
            Output(c_count, out).table(t);
        };
    });

    // best-approx
    Common c_best;
    std::string best_a;
    std::int64_t best_hsq = 0;
    auto* best = app.add_subcommand("best-approx", "Best rational approximations of a plane, by height");
    add_common(best, c_best);
    best->add_option("--a", best_a, "Plane to approximate")->required();
    best->add_option("--hsq-max", best_hsq, "Budget for H(B)^2")->required()->check(CLI::NonNegativeNumber);
    best->callback([&] {
        action = [&] {
            const PlaneArg a = parse_plane(best_a);
            Table t = plain_table("subapprox.best_approx.v1",
                                  {"level_hsq", "psi", "p12", "p13", "p14", "p23", "p24", "p34"});
            for (const auto& r : best_approx(*a.frame, HeightBudget(best_hsq))) {
                std::vector<Cell> row{Cell{to_int64(r.height_sq)}, Cell{r.psi_value.radians()}};
                for (const auto& x : r.best.pluecker().entries()) row.emplace_back(to_int64(x));
                t.add_row(std::move(row));
            }
            Output(c_best, out).table(t);
        };
    });

    // tube-volume
    Common c_tube;
    double tube_t = 2.0;
    std::vector<double> tube_eps;
    std::string tube_center = "0,0,0,0";
    std::uint64_t tube_samples = 1'000'000;
    auto* tube = app.add_subcommand("tube-volume", "Monte-Carlo volume of U_eps(Z + Sigma) inside K_T");
    add_common(tube, c_tube);
    tube->add_option("-T,--radius", tube_t, "Ball radius T")->check(CLI::PositiveNumber);
    tube->add_option("--eps", tube_eps, "Tube radius (repeat or comma-separate for several)")
        ->required()
        ->delimiter(',');
    tube->add_option("--center", tube_center, "Shift Z as xi1,xi2,eta1,eta2");
    tube->add_option("--samples", tube_samples, "Uniform samples in K_T (>= 10000)");
    tube->callback([&] {
        action = [&] {
            const auto z = parse_reals(tube_center, 4);
            const XiEtaPoint center{z[0], z[1], z[2], z[3]};
            Table t = plain_table("subapprox.tube_volume.v1", {"T", "epsilon", "samples", "hits", "estimate",
                                                               "half_width", "ball_volume", "scaled"});
            for (double eps : tube_eps) {
                const auto est = tube_volume(center, tube_t, eps, tube_samples, c_tube.seed);
                const double ref = tube_t * tube_t * tube_t * eps + eps * eps * eps * eps;
                t.add_row({Cell{tube_t}, Cell{eps}, Cell{static_cast<std::int64_t>(est.samples)},
                           Cell{static_cast<std::int64_t>(est.hits)}, Cell{est.estimate}, Cell{est.half_width},
                           Cell{est.ball_volume}, Cell{ref > 0 ? est.estimate / ref : 0.0}});
            }
            Output(c_tube, out).table(t);
        };
    });

    // check-series
    Common c_series;
    std::string series_omega;
    std::int64_t series_wmax = 10000;
    auto* series = app.add_subcommand("check-series", "Convergence of sum_j j*omega(sqrt j)");
    add_common(series, c_series);
    series->add_option("--omega", series_omega, "pow:<beta>, table:<csv path> or expr:<formula in j>")->required();
    series->add_option("--w-max", series_wmax, "Largest W (>= 100)");
    series->callback([&] {
        action = [&] {
            const OmegaFunction omega = OmegaFunction::parse(series_omega);
            const SeriesVerdict v = check_series(omega, series_wmax);
            out << to_string(v.classification) << '\n';
            if (!c_series.out.empty()) {
                Table t;
                t.schema = "subapprox.series.v1";
                t.config = {{"omega", Cell{omega.description()}},
                            {"w_max", Cell{series_wmax}},
                            {"classification", Cell{to_string(v.classification)}},
                            {"method", Cell{v.method}},
                            {"converge_ratio_max", Cell{kConvergeRatio}},
                            {"diverge_ratio_min", Cell{kDivergeRatio}},
                            {"ratio_window", Cell{std::int64_t{kRatioWindow}}}};
                t.columns = {"W", "partial_sum"};
                for (const auto& [w, s] : v.partial_sums) t.add_row({Cell{w}, Cell{s}});
                Output(c_series, out).table(t);
            }
        };
    });

    // experiment dirichlet | lower-bound | hilfssatz4
    auto* experiment = app.add_subcommand("experiment", "Desk-scale experiments");
    experiment->require_subcommand(1);
    ExperimentConfig cfg;
    Common c_exp;
    std::string exp_omega = "pow:4.5";
    auto add_config = [&](CLI::App* cmd) {
        add_common(cmd, c_exp);
        cmd->add_option("--delta", cfg.delta, "Band width delta in (0, 1/2)");
        cmd->add_option("--hsq-max", cfg.h_sq_max, "Budget for H(B)^2");
        cmd->add_option("--planes", cfg.num_planes, "Number of sampled planes A");
    };
    auto* dirichlet = experiment->add_subcommand("dirichlet", "min psi(A, B) against H for random A");
    add_config(dirichlet);
    dirichlet->callback([&] {
        action = [&] {
            cfg.seed = c_exp.seed;
            cfg.output_path = c_exp.out;
            const auto r = dirichlet_experiment(cfg);
            Output(c_exp, out).table(r.table);
            err << "max_psi_h3=" << format_real(r.max_psi_h3) << "\n"
                << "slope=" << format_real(r.slope) << " (" << r.fit_points << " points)\n";
        };
    });
    auto* lower = experiment->add_subcommand("lower-bound", "c(A) = min_B psi(A, B) / omega(H(B))");
    add_config(lower);
    lower->add_option("--omega", exp_omega, "Weight omega");
    lower->add_option("--w-max", cfg.w_max, "Series horizon for vetting omega");
    lower->callback([&] {
        action = [&] {
            cfg.seed = c_exp.seed;
            cfg.output_path = c_exp.out;
            const auto r = lower_bound_experiment(cfg, OmegaFunction::parse(exp_omega));
            Output(c_exp, out).table(r.table);
            if (!r.warning.empty()) err << "warning: " << r.warning << "\n";
            err << "c_min=" << format_real(r.min) << " c_q1=" << format_real(r.q1)
                << " c_median=" << format_real(r.median) << " c_q3=" << format_real(r.q3)
                << " c_max=" << format_real(r.max) << "\n";
        };
    });
    auto* h4 = experiment->add_subcommand("hilfssatz4", "dist(a, Sigma_B) <= 3 eps sqrt(2 + 4/delta^2) on Omega(B, eps; delta)");
    add_config(h4);
    h4->add_option("--eps", cfg.epsilon_list, "Epsilons")->delimiter(',');
    h4->add_option("--samples", cfg.samples, "Admissible samples per epsilon");
    h4->callback([&] {
        action = [&] {
            cfg.seed = c_exp.seed;
            cfg.output_path = c_exp.out;
            const Table t = hilfssatz4_experiment(cfg);
            Output(c_exp, out).table(t);
            std::int64_t violations = 0;
            for (const auto& row : t.rows) violations += std::get<std::int64_t>(row[5]);
            err << "violations=" << violations << "\n";
            if (violations > 0) status = 1;
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (action) action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace subapprox::cli
