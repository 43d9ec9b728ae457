#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "s7lab/errors.hpp"
#include "s7lab/heat_invariants.hpp"
#include "s7lab/quadrature.hpp"
#include "s7lab/sampling.hpp"

using namespace s7lab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Quadrature, SmoothAndPeaked) {
    const QuadratureResult r = integrate([](double x) { return std::exp(-x * x); }, 0.0, 20.0, 1e-13, 1e-12);
    EXPECT_NEAR(r.value, std::sqrt(kPi) / 2, 1e-12);
    const QuadratureResult p = integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, 1e-12, 1e-11);
    EXPECT_NEAR(p.value, 2.0 * std::atan(1.0 / 1e-2) / 1e-2, 1e-8);
    EXPECT_GT(p.intervals, 16);
}

TEST(Quadrature, ThrowsWhenBudgetExhausted) {
    EXPECT_THROW(integrate([](double x) { return std::sin(1e4 * x); }, 0.0, 100.0, 1e-14, 1e-14, 20), QuadratureFailure);
    QuadratureConfig bad;
    bad.truncation_radius = -1;
    EXPECT_THROW(validate(bad), Error);
}

TEST(Kernels, ThetaFunctions) {
    EXPECT_EQ(theta_over_sinh(0.0), 1.0);
    EXPECT_EQ(theta_coth(0.0), 1.0);
    EXPECT_NEAR(theta_over_sinh(1e-5), 1e-5 / std::sinh(1e-5), 3e-16);
    EXPECT_NEAR(theta_coth(2.0), 2.0 / std::tanh(2.0), 1e-15);
    EXPECT_NEAR(theta_over_sinh(-3.0), theta_over_sinh(3.0), 0.0);
    EXPECT_NEAR(theta_over_sinh(30.0) / (60.0 * std::exp(-30.0)), 1.0, 1e-14);
    EXPECT_GT(theta_over_sinh(720.0), 0.0);
    EXPECT_EQ(theta_over_sinh(1e4), 0.0);
}

TEST(VolumeElement, EquatorReducesToSingleFactor) {
    const TangentGroupSpec eq = make_tangent_group(SpherePoint::from_blocks(Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0)));
    const double r = 1.7;
    EXPECT_NEAR(volume_element_w(eq, Vec3(0, 0, r)), theta_over_sinh(r), 1e-14);
}

TEST(FirstHeatInvariant, ClosedForms) {
    EXPECT_NEAR(c0_Q(), 4.0 / 15.0, 1e-10);
    EXPECT_NEAR(c0_closed_form_at_pole(), 4.0 / 15.0, 1e-16);
    EXPECT_NEAR(c0_closed_form_at_equator(), std::sqrt(2.0) / 4.0, 1e-16);
    EXPECT_NEAR(c0_T(SpherePoint::from_blocks(Vec4(0, 1, 0, 0), Vec4(0, 0, 0, 1))), std::sqrt(2.0) / 4.0, 1e-10);
}

TEST(FirstHeatInvariant, RadialIntegralAtDeltaOne) {
    EXPECT_NEAR(radial_integral(1.0), 4.0 * kPi * std::pow(kPi, 4) / 30.0, 1e-9);
    EXPECT_NEAR(radial_integral(-1.0), radial_integral(1.0), 1e-12);
}

TEST(FirstHeatInvariant, StandardMeasure) {
    const SpherePoint z = SpherePoint::from_blocks(Vec4(1, 0, 0, 0), Vec4(1, 0, 0, 0));
    EXPECT_NEAR(c0_T_standard(z), c0_T(z) * popp_density_T(z) * 64.0, 1e-14);
    EXPECT_NEAR(c0_T_standard(SpherePoint::north_pole()), c0_Q(), 1e-14);
}

TEST(HeatKernel, OriginMatchesFirstInvariant) {
    Rng rng(31);
    const SpherePoint z(random_unit<8>(rng));
    const HeatKernelQuery q{make_tangent_group(z), 1.0, {}, {}};
    EXPECT_NEAR(bgg_heat_kernel(q), c0_T(z), 1e-9);
}

TEST(HeatKernel, LeftInvariance) {
    Rng rng(32);
    const TangentGroupSpec spec = make_tangent_group(SpherePoint(random_unit<8>(rng)));
    const GroupElement g{random_gaussian<4>(rng) * 0.3, random_gaussian<3>(rng) * 0.3};
    const GroupElement h{Vec4(0.4, 0, -0.2, 0.1), Vec3(0.2, 0, 0)};
    QuadratureConfig quad;
    quad.spherical_order = 12;
    quad.rel_tol = 1e-7;
    const double direct = bgg_heat_kernel({spec, 1.0, {}, h}, quad);
    const double shifted = bgg_heat_kernel({spec, 1.0, g, group_multiply(spec, g, h)}, quad);
    EXPECT_NEAR(direct, shifted, 1e-7 * direct);
    EXPECT_GT(direct, 0.0);
    EXPECT_LT(direct, bgg_heat_kernel({spec, 1.0, {}, {}}, quad));
}

TEST(HeatKernel, GaussianDecayInHorizontalDirection) {
    const TangentGroupSpec spec = make_tangent_group(SpherePoint::north_pole());
    QuadratureConfig quad;
    quad.spherical_order = 8;
    const double near = bgg_heat_kernel({spec, 1.0, {}, {Vec4(0.5, 0, 0, 0), Vec3::Zero()}}, quad);
    const double far = bgg_heat_kernel({spec, 1.0, {}, {Vec4(2.0, 0, 0, 0), Vec3::Zero()}}, quad);
    EXPECT_GT(near, far);
    EXPECT_GT(far, 0.0);
}

TEST(HeatKernel, RejectsBadTime) {
    const HeatKernelQuery q{make_tangent_group(SpherePoint::north_pole()), 0.0, {}, {}};
    EXPECT_THROW(bgg_heat_kernel(q), Error);
}

TEST(Gap, PositiveAndDeterministic) {
    const GapEstimate a = c0_gap({}, 300, 5);
    const GapEstimate b = c0_gap({}, 300, 5);
    EXPECT_EQ(a.value, b.value);
    EXPECT_GT(a.value, 0.0);
    EXPECT_EQ(a.n_points, 300);
    EXPECT_NEAR(sphere_volume_s7(), std::pow(kPi, 4) / 3.0, 1e-13);
}
