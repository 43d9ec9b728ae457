#include "s7lab/heat_invariants.hpp"

#include <cmath>
#include <numbers>

#include "s7lab/errors.hpp"
#include "s7lab/sampling.hpp"

namespace s7lab {

namespace {

constexpr double kPi = std::numbers::pi;

double two_pi_pow5() { return std::pow(2.0 * kPi, 5); }

// Eigen-decomposition of -J_{omega/2}^2 for a unit direction omega; the
// eigenvalues theta_m^2 scale with |tau|^2 along the ray.
struct RaySpectrum {
    Eigen::Vector4d mu;  // theta_m / |tau|
    Mat4 vectors;
};

RaySpectrum ray_spectrum(const TangentGroupSpec& spec, const Vec3& direction) {
    const Mat4 j = j_matrix(spec.constants, 0.5 * direction);
    Eigen::SelfAdjointEigenSolver<Mat4> solver(-(j * j));
    RaySpectrum rs;
    for (int m = 0; m < 4; ++m) rs.mu[m] = std::sqrt(std::max(0.0, solver.eigenvalues()[m]));
    rs.vectors = solver.eigenvectors();
    return rs;
}

double w_along_ray(const Eigen::Vector4d& mu, double r) {
    double p = 1.0;
    for (int m = 0; m < 4; ++m) p *= theta_over_sinh(r * mu[m]);
    return std::sqrt(p);
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

double theta_over_sinh(double theta) {
    const double a = std::abs(theta);
    if (a < 1e-4) return 1.0 - a * a / 6.0 + 7.0 * a * a * a * a / 360.0;
    // sinh a = e^a / 2 to double precision past 20; the log form delays underflow.
    if (a > 20.0) return std::exp(std::log(2.0 * a) - a);
    return a / std::sinh(a);
}

double theta_coth(double theta) {
    const double a = std::abs(theta);
    if (a < 1e-4) return 1.0 + a * a / 3.0 - a * a * a * a / 45.0;
    return a / std::tanh(a);
}

double volume_element_w(const TangentGroupSpec& spec, const Vec3& tau) {
    const Mat4 j = j_matrix(spec.constants, 0.5 * tau);
    Eigen::SelfAdjointEigenSolver<Mat4> solver(-(j * j), Eigen::EigenvaluesOnly);
    double p = 1.0;
    for (int m = 0; m < 4; ++m) p *= theta_over_sinh(std::sqrt(std::max(0.0, solver.eigenvalues()[m])));
    return std::sqrt(p);
}

Action action_phi(const TangentGroupSpec& spec, const Vec3& tau, const Vec4& a, const Vec3& b) {
    const Mat4 j = j_matrix(spec.constants, 0.5 * tau);
    Eigen::SelfAdjointEigenSolver<Mat4> solver(-(j * j));
    Action act;
    for (int m = 0; m < 4; ++m) {
        const double theta = std::sqrt(std::max(0.0, solver.eigenvalues()[m]));
        const double c = solver.eigenvectors().col(m).dot(a);
        act.real_part += 0.5 * theta_coth(theta) * c * c;
    }
    act.oscillation = tau.dot(b);
    return act;
}

double bgg_heat_kernel(const HeatKernelQuery& query, const QuadratureConfig& quad) {
    validate(quad);
    if (!(query.t > 0)) throw Error("heat kernel needs t > 0");
    const TangentGroupSpec& spec = query.spec;
    const double t = query.t;
    const GroupElement g = group_multiply(spec, group_inverse(query.source), query.target);
    const double prefactor = 1.0 / (std::pow(2.0 * kPi * t, 5) * spec.haar_density);
    const double bnorm = g.b.norm();
    const double radius = quad.truncation_radius;

    if (g.a.norm() == 0.0) {
        const RaySpectrum rs = ray_spectrum(spec, Vec3::UnitX());
        const double kappa = bnorm / t;
        auto f = [&](double r) { return r * r * w_along_ray(rs.mu, r) * sinc(kappa * r); };
        const QuadratureResult res = integrate(f, 0.0, radius, quad.abs_tol, quad.rel_tol, quad.max_intervals);
        return prefactor * 4.0 * kPi * res.value;
    }

    Vec3 axis = bnorm > 0.0 ? Vec3(g.b / bnorm) : Vec3::UnitZ();
    Vec3 e1 = std::abs(axis[0]) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    e1 = (e1 - e1.dot(axis) * axis).normalized();
    const Vec3 e2 = axis.cross(e1);
    const int n_phi = 2 * quad.spherical_order;
    const double inner_abs = 1e-2 * quad.abs_tol;
    const double inner_rel = 1e-2 * quad.rel_tol;

    auto polar = [&](double u) {
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        double sum = 0.0;
        for (int p = 0; p < n_phi; ++p) {
            const double phi = 2.0 * kPi * p / n_phi;
            const Vec3 omega = s * std::cos(phi) * e1 + s * std::sin(phi) * e2 + u * axis;
            const RaySpectrum rs = ray_spectrum(spec, omega);
            Eigen::Vector4d weights;
            for (int m = 0; m < 4; ++m) {
                const double c = rs.vectors.col(m).dot(g.a);
                weights[m] = 0.5 * c * c;
            }
            auto f = [&](double r) {
                double re = 0.0;
                for (int m = 0; m < 4; ++m) re += weights[m] * theta_coth(r * rs.mu[m]);
                return r * r * std::exp(-re / t) * std::cos(r * bnorm * u / t) * w_along_ray(rs.mu, r);
            };
            sum += integrate(f, 0.0, radius, inner_abs, inner_rel, quad.max_intervals).value;
        }
        return sum * 2.0 * kPi / n_phi;
    };
    const QuadratureResult res = integrate(polar, -1.0, 1.0, quad.abs_tol, quad.rel_tol, quad.max_intervals, 4);
    return prefactor * res.value;
}

double radial_integral(double delta, const QuadratureConfig& quad) {
    validate(quad);
    auto f = [delta](double r) { return r * r * theta_over_sinh(r) * theta_over_sinh(delta * r); };
    return 4.0 * kPi * integrate(f, 0.0, quad.truncation_radius, quad.abs_tol, quad.rel_tol, quad.max_intervals).value;
}

double c0_T(const SpherePoint& z, const QuadratureConfig& quad) {
    return radial_integral(z.delta(), quad) / (two_pi_pow5() * popp_density_T(z));
}

double c0_Q(const QuadratureConfig& quad) { return radial_integral(1.0, quad) / (two_pi_pow5() * popp_density_Q()); }

double c0_T_standard(const SpherePoint& z, const QuadratureConfig& quad) {
    return radial_integral(z.delta(), quad) / (two_pi_pow5() * popp_density_Q());
}

double c0_closed_form_at_pole() { return 4.0 / 15.0; }
double c0_closed_form_at_equator() { return std::sqrt(2.0) / 4.0; }

double gap_integrand(double delta, const QuadratureConfig& quad) {
    validate(quad);
    auto f = [delta](double r) {
        const double u = theta_over_sinh(r);
        return r * r * u * (theta_over_sinh(delta * r) - u);
    };
    return 4.0 * kPi * integrate(f, 0.0, quad.truncation_radius, quad.abs_tol, quad.rel_tol, quad.max_intervals).value;
}

GapEstimate c0_gap(const QuadratureConfig& quad, int n_points, std::uint64_t seed) {
    if (n_points < 1) throw Error("c0_gap needs at least one point");
    Rng rng(seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (int n = 1; n <= n_points; ++n) {
        const Vec8 z = random_unit<8>(rng);
        const double delta = z.head<4>().squaredNorm() - z.tail<4>().squaredNorm();
        const double h = gap_integrand(delta, quad);
        const double d = h - mean;
        mean += d / n;
        m2 += d * (h - mean);
    }
    const double scale = sphere_volume_s7() / two_pi_pow5();
    GapEstimate est;
    est.n_points = n_points;
    est.value = scale * mean;
    est.standard_error = n_points > 1 ? scale * std::sqrt(m2 / (n_points - 1) / n_points) : 0.0;
    return est;
}

double sphere_volume_s7() { return std::pow(kPi, 4) / 3.0; }

}  // namespace s7lab
