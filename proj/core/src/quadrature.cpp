#include "s7lab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "s7lab/check_report.hpp"
#include "s7lab/errors.hpp"

namespace s7lab {

void validate(const QuadratureConfig& config) {
    if (!(config.truncation_radius > 0)) throw Error("quadrature: truncation radius must be positive");
    if (!(config.abs_tol > 0) || !(config.rel_tol > 0)) throw Error("quadrature: tolerances must be positive");
    if (config.spherical_order < 1 || config.max_intervals < 1) throw Error("quadrature: orders must be positive");
}

namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
    double error = 0.0;
    const double value = GK::integrate(f, a, b, 0, 0.0, &error);
    return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_intervals, int initial_panels) {
    std::priority_queue<Panel> panels;
    double value = 0.0;
    double error = 0.0;
    const double h = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * h;
        const double hi = i + 1 == initial_panels ? b : lo + h;
        Panel p = evaluate_panel(f, lo, hi);
        value += p.value;
        error += p.error;
        panels.push(p);
    }
    int count = initial_panels;
    while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
        if (!std::isfinite(value)) throw QuadratureFailure("quadrature: non-finite integrand");
        if (count >= max_intervals)
            throw QuadratureFailure("quadrature: error estimate " + format_double(error, 3) + " above tolerance after " +
                                    std::to_string(count) + " panels");
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    // Re-sum to shed the drift of the incremental updates.
    QuadratureResult result;
    result.intervals = count;
    result.value = 0.0;
    result.error_estimate = 0.0;
    std::vector<Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : all) {
        result.value += p.value;
        result.error_estimate += p.error;
    }
    return result;
}

}  // namespace s7lab
