#include <gtest/gtest.h>

#include <cmath>

#include "s7lab/suites.hpp"

using namespace s7lab;

namespace {

void expect_all_pass(const std::vector<CheckReport>& reports) {
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) {
        EXPECT_TRUE(r.passed) << r.name << " residual " << r.max_residual;
        EXPECT_TRUE(!r.passed || r.max_residual <= r.tolerance) << r.name;
    }
}

SuiteOptions quick() {
    SuiteOptions o;
    o.samples = 200;
    o.seed = 99;
    return o;
}

}  // namespace

TEST(Suites, Clifford) { expect_all_pass(clifford_suite(quick())); }
TEST(Suites, SrStructure) { expect_all_pass(sr_structure_suite(quick())); }
TEST(Suites, TangentGroup) { expect_all_pass(tangent_group_suite(quick())); }
TEST(Suites, Heat) { expect_all_pass(heat_suite(quick())); }
TEST(Suites, Spectral) { expect_all_pass(spectral_suite(quick())); }

TEST(Suites, NegativeControlFails) {
    SuiteOptions o = quick();
    o.break_anticommutation = true;
    const auto reports = clifford_suite(o);
    EXPECT_FALSE(all_passed(reports));
    EXPECT_FALSE(reports.front().passed);
}

TEST(CheckReport, NanFails) {
    CheckReport r("nan", 1.0);
    r.observe(0.5);
    EXPECT_TRUE(r.passed);
    r.observe(std::nan(""));
    EXPECT_FALSE(r.passed);
}
