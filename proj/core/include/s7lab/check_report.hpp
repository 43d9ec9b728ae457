#pragma once

#include <string>
#include <vector>

namespace s7lab {

// Outcome of one verification. passed implies max_residual <= tolerance.
struct CheckReport {
    std::string name;
    bool passed = true;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> details;

    CheckReport() = default;
    CheckReport(std::string name, double tolerance);

    // Folds a residual into max_residual and fails the report if it exceeds tolerance.
    // NaN residuals always fail.
    void observe(double residual);
    void fail(std::string detail);
    void note(std::string detail);
};

bool all_passed(const std::vector<CheckReport>& reports);

std::string format_double(double value, int significant = 12);

}  // namespace s7lab
