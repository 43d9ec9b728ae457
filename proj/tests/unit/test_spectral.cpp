#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "s7lab/errors.hpp"
#include "s7lab/spectral.hpp"

using namespace s7lab;

namespace {

std::vector<std::pair<double, int>> flatten(const SpectrumReport& r) {
    std::vector<std::pair<double, int>> out;
    for (const auto& c : r.eigenvalues) out.emplace_back(c.value, c.multiplicity);
    return out;
}

void expect_spectrum(const SpectrumReport& r, const std::vector<std::pair<double, int>>& expected) {
    const auto got = flatten(r);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_NEAR(got[i].first, expected[i].first, 1e-9);
        EXPECT_EQ(got[i].second, expected[i].second);
    }
}

}  // namespace

TEST(Harmonics, Dimensions) {
    const std::size_t dims[] = {1, 8, 35, 112, 294, 672};
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(harmonic_dimension(k), dims[k]);
    EXPECT_THROW(harmonic_basis(6), DegreeTooLarge);
    EXPECT_EQ(harmonic_basis(6, 6).dimension(), 1386);
}

TEST(Harmonics, CoordinatesRecoverBasis) {
    const HarmonicSpace h = harmonic_basis(2);
    for (int a = 0; a < h.dimension(); ++a) {
        const auto c = h.coordinates(h.basis[a]);
        for (int b = 0; b < h.dimension(); ++b) EXPECT_EQ(c[b], a == b ? 1 : 0);
    }
}

TEST(Harmonics, FieldActionOnLinearIsTranspose) {
    const HarmonicSpace h = harmonic_basis(1);
    const Mat8i& a = canonical_system().generators[2];
    const Eigen::MatrixXd f = field_action_matrix(a, h).to_dense();
    EXPECT_EQ(f, a.transpose().cast<double>());
}

TEST(Spectra, SphereLaplacian) {
    for (int k = 0; k <= 3; ++k)
        expect_spectrum(spectrum({OperatorKind::SphereLaplacian}, k),
                        {{double(k * (k + 6)), static_cast<int>(harmonic_dimension(k))}});
}

TEST(Spectra, TrivializableLowDegrees) {
    expect_spectrum(spectrum({OperatorKind::TrivializableSumSquares}, 1), {{4, 8}});
    expect_spectrum(spectrum({OperatorKind::TrivializableSumSquares}, 2), {{4, 4}, {8, 18}, {12, 12}, {16, 1}});
    expect_spectrum(spectrum({OperatorKind::TrivializableSumSquares}, 3), {{8, 24}, {12, 32}, {20, 48}, {24, 8}});
}

TEST(Spectra, QuaternionicLowDegrees) {
    expect_spectrum(spectrum({OperatorKind::QuaternionicSublaplacian}, 0), {{0, 1}});
    expect_spectrum(spectrum({OperatorKind::QuaternionicSublaplacian}, 2), {{8, 30}, {16, 5}});
    expect_spectrum(spectrum({OperatorKind::QuaternionicSublaplacian}, 3), {{12, 80}, {24, 32}});
}

TEST(Spectra, S3BlockCasimirs) {
    // -sum W^2 over one S^3 factor: eigenvalues l(l+2) on the block-degree pieces
    const SpectrumReport r = spectrum({OperatorKind::S3LeftBlock, Side::Left}, 1);
    expect_spectrum(r, {{0, 4}, {3, 4}});
}

TEST(Spectra, IntrinsicIsRejected) {
    EXPECT_THROW(spectrum({OperatorKind::TrivializableIntrinsic}, 1), UnsupportedOperator);
}

TEST(Spectra, ClusteringReportsGaps) {
    Eigen::VectorXd v(5);
    v << 1.0, 1.0 + 1e-10, 2.0, 2.0, 5.0;
    const auto clusters = cluster_eigenvalues(v, 1e-8);
    ASSERT_EQ(clusters.size(), 3u);
    EXPECT_EQ(clusters[0].multiplicity, 2);
    EXPECT_NEAR(clusters[0].spread, 1e-10, 1e-15);
    const SpectrumReport r = spectrum({OperatorKind::TrivializableSumSquares}, 2);
    ASSERT_EQ(r.gaps.size(), 3u);
    EXPECT_NEAR(r.gaps[0], 4.0, 1e-9);
    EXPECT_LT(r.symmetry_residual, 1e-12);
}

TEST(Gram, FischerMatchesMoments) {
    const HarmonicSpace h = harmonic_basis(1);
    const RationalMatrix g = l2_gram_over_pi4(h);
    // |x_1|^2 over S^7 is vol/8 = pi^4/24
    EXPECT_EQ(g.get(0, 0), Rational(1, 24));
    EXPECT_EQ(g.get(0, 1), 0);
    EXPECT_EQ(sphere_moment_over_pi4(Exponent{}), Rational(1, 3));
}

TEST(DegreeModel, OrthonormalBasisValues) {
    const DegreeModel m(1);
    Vec8 z = Vec8::Zero();
    z[0] = 1.0;
    const Eigen::VectorXd v = m.basis_values(z);
    EXPECT_NEAR(v.squaredNorm(), 1.0, 1e-15);
    double sum = 0.0;
    for (int j = 0; j < m.dimension(); ++j) {
        const double value = v.dot(m.function_coefficients(Eigen::VectorXd::Unit(m.dimension(), j)));
        sum += value * value;
    }
    EXPECT_NEAR(sum * std::pow(std::numbers::pi, 4) / 3.0, 8.0, 1e-12);
}

TEST(TensorIdentities, HoldThroughDegreeTwo) {
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(verify_tensor_identity(k).passed) << "k=" << k;
}

TEST(Inclusion, LowDegrees) {
    const InclusionResult r = spectra_inclusion(3);
    EXPECT_TRUE(r.report.passed);
    EXPECT_TRUE(r.spectra_differ);
    ASSERT_EQ(r.degrees.size(), 4u);
    EXPECT_TRUE(r.degrees[1].same_spectrum);
    EXPECT_FALSE(r.degrees[2].same_spectrum);
    for (const auto& d : r.degrees) EXPECT_TRUE(d.included);
}
