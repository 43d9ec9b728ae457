#pragma once

#include <functional>

namespace s7lab {

struct QuadratureConfig {
    double truncation_radius = 60.0;
    double abs_tol = 1e-11;
    double rel_tol = 1e-9;
    // Number of azimuthal nodes per polar node is 2 * spherical_order for
    // direction-dependent integrands.
    int spherical_order = 24;
    int max_intervals = 4000;
};

// Throws Error for non-positive radius, tolerances or orders.
void validate(const QuadratureConfig& config);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (21-point) on [a, b]. Stops once the summed
// error estimate is below max(abs_tol, rel_tol * |value|); throws
// QuadratureFailure when max_intervals is reached first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_intervals = 4000, int initial_panels = 16);

}  // namespace s7lab
