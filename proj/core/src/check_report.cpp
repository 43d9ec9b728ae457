#include "s7lab/check_report.hpp"

#include <cmath>
#include <cstdio>

namespace s7lab {

CheckReport::CheckReport(std::string name_, double tolerance_)
    : name(std::move(name_)), tolerance(tolerance_) {}

void CheckReport::observe(double residual) {
    if (std::isnan(residual)) {
        max_residual = residual;
        passed = false;
        return;
    }
    if (!(residual <= max_residual)) max_residual = residual;
    if (residual > tolerance) passed = false;
}

void CheckReport::fail(std::string detail) {
    passed = false;
    details.push_back(std::move(detail));
}

void CheckReport::note(std::string detail) { details.push_back(std::move(detail)); }

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

std::string format_double(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    return buf;
}

}  // namespace s7lab
