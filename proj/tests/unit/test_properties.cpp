// Seeded property sweeps: each test draws many random inputs and checks an
// identity that must hold for all of them.
#include <algorithm>
#include <gtest/gtest.h>

#include <cmath>

#include "s7lab/clifford.hpp"
#include "s7lab/heat_invariants.hpp"
#include "s7lab/sampling.hpp"
#include "s7lab/spectral.hpp"
#include "s7lab/tangent_group.hpp"

using namespace s7lab;

class SeededProperty : public ::testing::TestWithParam<std::uint64_t> {
protected:
    Rng rng{GetParam()};
    SpherePoint point() { return SpherePoint(random_unit<8>(rng)); }
};

TEST_P(SeededProperty, FrameIsOrthonormalAtEveryPoint) {
    for (int n = 0; n < 50; ++n) {
        const SpherePoint z = point();
        for (int i = 0; i < 7; ++i) {
            const Vec8 ai = canonical_frame()[i] * z.coords();
            EXPECT_NEAR(ai.dot(z.coords()), 0.0, 1e-14);
            for (int j = 0; j < 7; ++j)
                EXPECT_NEAR(ai.dot(canonical_frame()[j] * z.coords()), i == j ? 1.0 : 0.0, 1e-14);
        }
    }
}

TEST_P(SeededProperty, ConjugatedSystemsStayClifford) {
    const Mat8 q = random_orthogonal<8>(rng);
    EXPECT_TRUE(verify_anticommutation(conjugate_system(canonical_system(), q)).passed);
}

TEST_P(SeededProperty, CurvatureAndPoppDependOnBlockNormsOnly) {
    const SpherePoint z = point();
    const CurvatureForm f = curvature_quadratic(z);
    const SpherePoint w = SpherePoint::from_blocks(random_unit<4>(rng) * z.x().norm(), random_unit<4>(rng) * z.y().norm());
    const CurvatureForm g = curvature_quadratic(w);
    EXPECT_LT((f.matrix - g.matrix).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(popp_density_T(z), popp_density_T(w), 1e-15);
}

TEST_P(SeededProperty, GroupInverseAndAssociativity) {
    const TangentGroupSpec spec = make_tangent_group(point());
    for (int n = 0; n < 20; ++n) {
        const GroupElement g{random_gaussian<4>(rng), random_gaussian<3>(rng)};
        const GroupElement h{random_gaussian<4>(rng), random_gaussian<3>(rng)};
        const GroupElement e = group_multiply(spec, group_inverse(g), g);
        EXPECT_LT(e.a.norm() + e.b.norm(), 1e-14);
        const GroupElement lhs = group_inverse(group_multiply(spec, g, h));
        const GroupElement rhs = group_multiply(spec, group_inverse(h), group_inverse(g));
        EXPECT_LT((lhs.a - rhs.a).norm() + (lhs.b - rhs.b).norm(), 1e-13);
    }
}

TEST_P(SeededProperty, RoundTripNearCutLocus) {
    const SpherePoint z = point();
    for (int n = 0; n < 50; ++n) {
        const Vec7 u = random_unit<7>(rng) * std::uniform_real_distribution<double>(3.0, 3.04)(rng);
        EXPECT_LT((canonical_coords(z, canonical_coords_inverse(z, u)) - u).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST_P(SeededProperty, VolumeElementRotationInvariant) {
    const TangentGroupSpec spec = make_tangent_group(point());
    for (int n = 0; n < 20; ++n) {
        const Vec3 tau = random_gaussian<3>(rng) * 2.0;
        const Mat3 r = random_orthogonal<3>(rng);
        EXPECT_NEAR(volume_element_w(spec, tau), volume_element_w(spec, r * tau), 1e-13);
        const Vec4 a = random_gaussian<4>(rng);
        const Action act = action_phi(spec, tau, a, Vec3::Zero());
        EXPECT_GE(act.real_part, 0.5 * a.squaredNorm() - 1e-12);
    }
}

TEST_P(SeededProperty, FirstHeatInvariantDominatesQuaternionic) {
    const double cq = c0_Q();
    for (int n = 0; n < 10; ++n) {
        const SpherePoint z = point();
        EXPECT_GT(c0_T(z), cq);
        EXPECT_LE(c0_T(z), c0_closed_form_at_equator() + 1e-10);
    }
}

TEST_P(SeededProperty, SpectrumInvariantUnderRandomSignedPermutationConjugation) {
    // Conjugating by a block-swap composed with a sign flip keeps the system
    // integral; spectra must not move.
    Mat8i c = Mat8i::Zero();
    std::vector<int> perm = {0, 1, 2, 3, 4, 5, 6, 7};
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < 8; ++i) c(i, perm[i]) = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    const CliffordSystem conj = conjugate_system(canonical_system(), c);
    const DegreeModel model(2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(model.operator_matrix({OperatorKind::SphereLaplacian}, conj));
    EXPECT_LT((a.eigenvalues().array() - 16.0).abs().maxCoeff(), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeededProperty, ::testing::Values(1u, 2u, 3u, 42u, 1234567u));
