#pragma once

#include <cstdint>

#include "s7lab/quadrature.hpp"
#include "s7lab/tangent_group.hpp"

namespace s7lab {

// theta / sinh(theta) and theta coth(theta), with series below 1e-4.
double theta_over_sinh(double theta);
double theta_coth(double theta);

// W(tau) = sqrt(det(i J_{tau/2} / sinh(i J_{tau/2}))) = prod over the invariant
// planes of theta_m / sinh(theta_m).
double volume_element_w(const TangentGroupSpec& spec, const Vec3& tau);

struct Action {
    double real_part = 0.0;    // 1/2 <f(J_{tau/2}) a, a>, f = theta coth theta on each plane
    double oscillation = 0.0;  // <tau, b>
};

Action action_phi(const TangentGroupSpec& spec, const Vec3& tau, const Vec4& a, const Vec3& b);

struct HeatKernelQuery {
    TangentGroupSpec spec;
    double t = 1.0;
    GroupElement source;
    GroupElement target;
};

// (2 pi t)^{-5} / haar_density * int_{R^3} exp(-real_part/t) cos(oscillation/t) W dtau
// at the displacement source^{-1} * target. Radial reduction when the
// horizontal part vanishes, spherical x radial tensor quadrature otherwise.
// Throws Error for t <= 0 and QuadratureFailure on non-convergence.
double bgg_heat_kernel(const HeatKernelQuery& query, const QuadratureConfig& quad = {});

// 4 pi int_0^R r^2 (r / sinh r)(delta r / sinh(delta r)) dr
double radial_integral(double delta, const QuadratureConfig& quad = {});

// First heat invariants in Popp-normalized measure.
double c0_T(const SpherePoint& z, const QuadratureConfig& quad = {});
double c0_Q(const QuadratureConfig& quad = {});
// Density 16^{-3/2} in place of g(z).
double c0_T_standard(const SpherePoint& z, const QuadratureConfig& quad = {});

// 4/15 and sqrt(2)/4, the values at delta^2 = 1 and delta = 0.
double c0_closed_form_at_pole();
double c0_closed_form_at_equator();

// 4 pi int r^2 (r/sinh r)(delta r/sinh(delta r) - r/sinh r) dr, >= 0.
double gap_integrand(double delta, const QuadratureConfig& quad = {});

struct GapEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    int n_points = 0;
};

// Monte Carlo over S^7 (normalized Gaussians, fixed seed) of
// (2 pi)^{-5} int_{S^7} gap_integrand(delta(z)) dsigma.
GapEstimate c0_gap(const QuadratureConfig& quad, int n_points, std::uint64_t seed = 42);

// pi^4 / 3
double sphere_volume_s7();

}  // namespace s7lab
