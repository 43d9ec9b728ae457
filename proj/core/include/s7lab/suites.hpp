#pragma once

#include <cstdint>
#include <vector>

#include "s7lab/check_report.hpp"

namespace s7lab {

struct SuiteOptions {
    std::uint64_t seed = 42;
    // Multiplies every nominal tolerance.
    double tolerance_scale = 1.0;
    int samples = 1000;
    int max_tensor_degree = 3;
    int max_inclusion_degree = 4;
    // Negative control: A_1 replaced by the identity in the anticommutation check.
    bool break_anticommutation = false;
};

std::vector<CheckReport> clifford_suite(const SuiteOptions& options = {});
std::vector<CheckReport> sr_structure_suite(const SuiteOptions& options = {});
std::vector<CheckReport> tangent_group_suite(const SuiteOptions& options = {});
std::vector<CheckReport> heat_suite(const SuiteOptions& options = {});
std::vector<CheckReport> spectral_suite(const SuiteOptions& options = {});
std::vector<CheckReport> run_all_suites(const SuiteOptions& options = {});

}  // namespace s7lab
