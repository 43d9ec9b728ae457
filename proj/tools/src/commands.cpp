#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "s7lab/errors.hpp"
#include "s7lab/heat_invariants.hpp"
#include "s7lab/operators.hpp"
#include "s7lab/spectral.hpp"
#include "s7lab/sr_structure.hpp"
#include "s7lab/suites.hpp"
#include "s7lab/tangent_group.hpp"

namespace s7lab::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot parse '" + item + "'");
        }
        if (used != item.size()) throw UsageError(std::string(what) + ": cannot parse '" + item + "'");
        values.push_back(v);
    }
    if (values.size() != count)
        throw UsageError(std::string(what) + ": expected " + std::to_string(count) + " comma-separated reals");
    return values;
}

SpherePoint parse_point(const std::string& text) {
    const auto v = parse_reals(text, 8, "--point");
    Vec8 c;
    for (int i = 0; i < 8; ++i) c[i] = v[i];
    return SpherePoint(c);
}

template <int N>
Eigen::Matrix<double, N, 1> parse_vector(const std::string& text, const char* what) {
    const auto v = parse_reals(text, N, what);
    Eigen::Matrix<double, N, 1> out;
    for (int i = 0; i < N; ++i) out[i] = v[i];
    return out;
}

// 12 significant digits, printed as the shortest decimal that round-trips.
double round12(double v) {
    const double r = std::stod(format_double(v, 12));
    return r == 0.0 ? 0.0 : r;
}

template <typename Derived>
json to_json(const Eigen::MatrixBase<Derived>& m) {
    if (m.cols() == 1) {
        json arr = json::array();
        for (int i = 0; i < m.rows(); ++i) arr.push_back(round12(m(i, 0)));
        return arr;
    }
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(round12(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json clusters_json(const std::vector<EigenCluster>& clusters) {
    json arr = json::array();
    for (const auto& c : clusters) arr.push_back({{"value", round12(c.value)}, {"multiplicity", c.multiplicity}});
    return arr;
}

std::string csv_number(double v) {
    const double r = round12(v);
    return format_double(r, 12);
}

// Point used by grid commands: sqrt(s) e_0 in the first block, sqrt(1-s) e_0 in the second.
SpherePoint grid_point(double x_norm_sq) {
    return SpherePoint::from_blocks(Vec4(std::sqrt(x_norm_sq), 0, 0, 0), Vec4(std::sqrt(1.0 - x_norm_sq), 0, 0, 0));
}

double grid_value(int i, int samples) { return samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1); }

struct Output {
    std::string path;
    std::unique_ptr<std::ofstream> file;

    std::ostream& open(std::ostream& fallback) {
        if (path.empty() || path == "-") return fallback;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw UsageError("cannot open output file '" + path + "'");
        return *file;
    }
};

int cmd_verify(const SuiteOptions& options, std::ostream& out) {
    const auto reports = run_all_suites(options);
    int passed = 0;
    for (const auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s  %-58s  residual %-10.3e  tol %.1e", r.passed ? "PASS" : "FAIL",
                      r.name.c_str(), r.max_residual, r.tolerance);
        out << line << '\n';
        for (const auto& d : r.details) out << "      " << d << '\n';
        if (r.passed) ++passed;
    }
    out << passed << "/" << reports.size() << " checks passed\n";
    return passed == static_cast<int>(reports.size()) ? kPass : kFailure;
}

int cmd_c0_scan(int samples, const std::string& structure, std::ostream& out) {
    const QuadratureConfig quad;
    out << "x_norm_sq,delta,c0\n";
    const double cq = structure == "Q" ? c0_Q(quad) : 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = grid_value(i, samples);
        const SpherePoint z = grid_point(s);
        const double c0 = structure == "Q" ? cq : c0_T(z, quad);
        out << csv_number(s) << ',' << csv_number(z.delta()) << ',' << csv_number(c0) << '\n';
    }
    return kPass;
}

OperatorSpec operator_from(const std::string& structure, const std::string& name) {
    if (!name.empty()) {
        const auto kind = parse_operator_kind(name);
        if (!kind) throw UsageError("unknown operator '" + name + "'");
        return {*kind};
    }
    return {structure == "Q" ? OperatorKind::QuaternionicSublaplacian : OperatorKind::TrivializableSumSquares};
}

int cmd_spectrum(const OperatorSpec& spec, int degree, double cluster_tol, std::ostream& out) {
    if (degree < 0 || degree > kDefaultMaxDegree)
        throw DegreeTooLarge("degree " + std::to_string(degree) + " outside [0, " + std::to_string(kDefaultMaxDegree) + "]");
    const SpectrumReport report = spectrum(spec, degree, cluster_tol);
    json j = {{"operator", to_string(spec.kind)},
              {"degree", report.degree},
              {"dimension", report.dimension},
              {"eigenvalues", clusters_json(report.eigenvalues)}};
    out << j.dump() << '\n';
    return kPass;
}

int cmd_popp(const SpherePoint& z, std::ostream& out) {
    json j = {{"point", to_json(z.coords())},
              {"x_norm_sq", round12(z.x_norm_sq())},
              {"delta", round12(z.delta())},
              {"popp_matrix_T", to_json(popp_matrix_T(z))},
              {"scale_T", round12(popp_scale_T(z))},
              {"density_T", round12(popp_density_T(z))},
              {"density_T_numeric", round12(popp_density_T_numeric(z))},
              {"density_Q", round12(popp_density_Q())}};
    out << j.dump() << '\n';
    return kPass;
}

int cmd_jz(const SpherePoint& z, const Vec3& zv, std::ostream& out) {
    const auto spectrum_json = [](const JSpectrum& s) {
        json arr = json::array();
        for (const auto& e : s) arr.push_back({round12(e.real()), round12(e.imag())});
        return arr;
    };
    json j = {{"point", to_json(z.coords())},
              {"z", to_json(zv)},
              {"j_matrix", to_json(j_matrix(z, zv))},
              {"determinant", round12(j_determinant(z, zv))},
              {"determinant_closed_form", round12(j_determinant_closed_form(z, zv))},
              {"eigenvalues", spectrum_json(j_spectrum(z, zv))},
              {"eigenvalues_closed_form", spectrum_json(j_spectrum_closed_form(z, zv))},
              {"nonsingular", is_nonsingular(z)}};
    out << j.dump() << '\n';
    return kPass;
}

int cmd_type(int grid, std::ostream& out) {
    out << "x_norm_sq,delta,t11,t22,t33,max_off_diagonal,positive,negative,label\n";
    for (int i = 0; i < grid; ++i) {
        const double s = grid_value(i, grid);
        const SpherePoint z = grid_point(s);
        const CurvatureForm f = curvature_quadratic(z);
        out << csv_number(s) << ',' << csv_number(z.delta());
        for (int l = 0; l < 3; ++l) out << ',' << csv_number(f.matrix(l, l));
        out << ',' << csv_number(f.max_off_diagonal) << ',' << f.type.positive << ',' << f.type.negative << ','
            << to_string(f.type.label) << '\n';
    }
    return kPass;
}

int cmd_inclusion(int max_degree, double tol, std::ostream& out) {
    if (max_degree < 0 || max_degree > kDefaultMaxDegree)
        throw DegreeTooLarge("max degree " + std::to_string(max_degree) + " outside [0, " +
                             std::to_string(kDefaultMaxDegree) + "]");
    const InclusionResult result = spectra_inclusion(max_degree, tol);
    json degrees = json::array();
    for (const auto& d : result.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"quaternionic", clusters_json(d.quaternionic)},
                           {"trivializable", clusters_json(d.trivializable)},
                           {"included", d.included},
                           {"same_spectrum", d.same_spectrum}});
    json j = {{"max_degree", max_degree},
              {"passed", result.report.passed},
              {"spectra_differ", result.spectra_differ},
              {"degrees", degrees},
              {"details", result.report.details}};
    out << j.dump() << '\n';
    return result.report.passed ? kPass : kFailure;
}

int cmd_heat(const SpherePoint& z, const std::string& structure, double t, const Vec4& a, const Vec3& b,
             const QuadratureConfig& quad, std::ostream& out) {
    if (!(t > 0.0)) throw UsageError("--t must be positive");
    const Structure st = structure == "Q" ? Structure::Quaternionic : Structure::Trivializable;
    HeatKernelQuery q{make_tangent_group(z, st), t, {}, {a, b}};
    const double k = bgg_heat_kernel(q, quad);
    json j = {{"structure", structure},
              {"point", to_json(z.coords())},
              {"t", t},
              {"a", to_json(a)},
              {"b", to_json(b)},
              {"kernel", round12(k)}};
    out << j.dump() << '\n';
    return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subriemannian structures on S^7: verification and computations"};
    app.name("s7lab");
    app.require_subcommand(1);

    std::string point_text = "1,0,0,0,0,0,0,0";
    std::string structure = "T";
    Output output;
    const auto structure_opt = [&](CLI::App* sub) {
        sub->add_option("--structure", structure, "T (trivializable) or Q (quaternionic Hopf)")
            ->check(CLI::IsMember({"T", "Q"}));
    };
    const auto point_opt = [&](CLI::App* sub) {
        sub->add_option("--point", point_text, "8 comma-separated reals, renormalized to S^7");
    };
    const auto output_opt = [&](CLI::App* sub) { sub->add_option("--output,-o", output.path, "output file (default stdout)"); };

    SuiteOptions suite;
    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    verify->add_option("--seed", suite.seed, "RNG seed");
    verify->add_option("--tolerance-scale", suite.tolerance_scale, "multiplies every nominal tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--samples", suite.samples, "random points per sampled check")->check(CLI::Range(1, 1000000));
    verify->add_flag("--break-anticommutation", suite.break_anticommutation, "inject a fault (negative control)");
    output_opt(verify);

    int samples = 11;
    auto* scan = app.add_subcommand("c0-scan", "first heat invariant over a grid of |x|^2");
    scan->add_option("--samples", samples, "grid size")->check(CLI::Range(1, 1000000));
    structure_opt(scan);
    output_opt(scan);

    int degree = 1;
    std::string operator_name;
    double cluster_tol = 1e-8;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of an operator on H_k");
    structure_opt(spectrum_cmd);
    spectrum_cmd->add_option("--operator", operator_name, "operator kind (overrides --structure)");
    spectrum_cmd->add_option("--degree,-k", degree, "harmonic degree");
    spectrum_cmd->add_option("--cluster-tol", cluster_tol, "eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
    output_opt(spectrum_cmd);

    auto* popp = app.add_subcommand("popp", "Popp matrix and density at a point");
    point_opt(popp);
    output_opt(popp);

    std::string z_text = "1,0,0";
    auto* jz = app.add_subcommand("jz", "J_Z map of the tangent algebra");
    point_opt(jz);
    jz->add_option("--z", z_text, "vertical covector, 3 comma-separated reals");
    output_opt(jz);

    int grid = 11;
    auto* type = app.add_subcommand("type", "dual curvature form over a grid of |x|^2");
    type->add_option("--grid", grid, "grid size")->check(CLI::Range(1, 1000000));
    output_opt(type);

    int max_degree = 4;
    double inclusion_tol = 1e-8;
    auto* inclusion = app.add_subcommand("inclusion", "per-degree inclusion of the quaternionic spectrum");
    inclusion->add_option("--max-degree", max_degree, "highest harmonic degree");
    inclusion->add_option("--tol", inclusion_tol, "eigenvalue matching tolerance")->check(CLI::PositiveNumber);
    output_opt(inclusion);

    double t = 1.0;
    std::string a_text = "0,0,0,0", b_text = "0,0,0";
    QuadratureConfig quad;
    auto* heat = app.add_subcommand("heat", "tangent-group heat kernel K_t(0,(a,b))");
    point_opt(heat);
    structure_opt(heat);
    heat->add_option("--t", t, "time");
    heat->add_option("--a", a_text, "horizontal coordinates, 4 comma-separated reals");
    heat->add_option("--b", b_text, "vertical coordinates, 3 comma-separated reals");
    heat->add_option("--truncation-radius", quad.truncation_radius, "outer radius of the tau integral");
    output_opt(heat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(suite, output.open(out));
        if (*scan) return cmd_c0_scan(samples, structure, output.open(out));
        if (*spectrum_cmd) {
            const OperatorSpec op = operator_from(structure, operator_name);
            return cmd_spectrum(op, degree, cluster_tol, output.open(out));
        }
        if (*popp) return cmd_popp(parse_point(point_text), output.open(out));
        if (*jz) return cmd_jz(parse_point(point_text), parse_vector<3>(z_text, "--z"), output.open(out));
        if (*type) return cmd_type(grid, output.open(out));
        if (*inclusion) return cmd_inclusion(max_degree, inclusion_tol, output.open(out));
        if (*heat) {
            validate(quad);
            const SpherePoint z = parse_point(point_text);
            return cmd_heat(z, structure, t, parse_vector<4>(a_text, "--a"), parse_vector<3>(b_text, "--b"), quad,
                            output.open(out));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidPoint& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DegreeTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedOperator& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const QuadratureFailure& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("s7lab");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace s7lab::cli
