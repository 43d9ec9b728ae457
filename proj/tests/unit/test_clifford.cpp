#include <gtest/gtest.h>

#include "s7lab/clifford.hpp"
#include "s7lab/errors.hpp"
#include "s7lab/sampling.hpp"

using namespace s7lab;

TEST(Clifford, CanonicalSystemAnticommutes) {
    const CheckReport r = verify_anticommutation(canonical_system());
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.max_residual, 0.0);
}

TEST(Clifford, GeneratorsAreSkewSignedPermutations) {
    for (const auto& a : canonical_system().generators) {
        EXPECT_TRUE(is_skew(a));
        EXPECT_TRUE(is_signed_permutation(a));
    }
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(is_signed_permutation(printed_block(i)));
}

TEST(Clifford, BrokenSystemDetected) {
    CliffordSystem sys = canonical_system();
    sys.generators[2] = sys.generators[1];
    EXPECT_FALSE(verify_anticommutation(sys).passed);
}

TEST(Clifford, GeneratorLayout) {
    const CliffordSystem& sys = canonical_system();
    EXPECT_EQ(sys.generators[3], block_antidiag(Mat4i::Identity(), -Mat4i::Identity()));
    EXPECT_EQ(sys.generators[0], block_antidiag(printed_block(1), printed_block(1)));
    EXPECT_EQ(sys.generators[4], block_diag(left_unit_matrix(Unit::I), -left_unit_matrix(Unit::I)));
    EXPECT_EQ(sys.vertical[1], block_diag(right_unit_matrix(Unit::J), right_unit_matrix(Unit::J)));
}

TEST(Clifford, RealSystemMatchesIntegers) {
    const RealCliffordSystem real = to_real(canonical_system());
    EXPECT_TRUE(verify_anticommutation(real).passed);
    const Frame& f = canonical_frame();
    for (int i = 0; i < 7; ++i) EXPECT_EQ(f[i], real.generators[i]);
}

TEST(Clifford, IsometryExampleIntegerPoints) {
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Eigen::Vector4i x = Eigen::Vector4i::Zero();
            x[i] = s;
            EXPECT_TRUE(check_isometry_example(x).passed) << "point " << i << " sign " << s;
        }
}

TEST(Clifford, IsometryExampleRandomPoints) {
    const CheckReport r = check_isometry_example(7, 100);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.max_residual, 1e-12);
}

TEST(Clifford, IsometryMatrixIsOrthogonal) {
    Rng rng(11);
    const Vec4 x = random_unit<4>(rng);
    const Mat8 u = isometry_matrix_u(x);
    EXPECT_LT((u.transpose() * u - Mat8::Identity()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Clifford, ConjugationByUSendsA1ToA4) {
    const Mat8i u = isometry_matrix_u(Eigen::Vector4i(1, 0, 0, 0));
    const CliffordSystem conj = conjugate_system(canonical_system(), Mat8i(u.transpose()));
    EXPECT_EQ(conj.generators[0], canonical_system().generators[3]);
    EXPECT_TRUE(verify_anticommutation(conj).passed);
}

TEST(Clifford, ConjugationRejectsNonOrthogonal) {
    Mat8i c = Mat8i::Identity();
    c(0, 0) = 2;
    EXPECT_THROW(conjugate_system(canonical_system(), c), NonOrthogonal);
    Mat8 d = Mat8::Identity();
    d(0, 1) = 0.1;
    EXPECT_THROW(conjugate_system(canonical_system(), d), NonOrthogonal);
}

TEST(Clifford, S3BlockGeneratorsCommuteAcrossSides) {
    for (Unit u : {Unit::I, Unit::J, Unit::K})
        for (Unit w : {Unit::I, Unit::J, Unit::K}) {
            const Mat8i l = s3_block_generator(Block::First, u, Side::Left);
            const Mat8i r = s3_block_generator(Block::First, w, Side::Right);
            EXPECT_EQ(l * r, r * l);
            EXPECT_EQ(l * s3_block_generator(Block::Second, w, Side::Left),
                      s3_block_generator(Block::Second, w, Side::Left) * l);
        }
}

TEST(Clifford, QuaternionicPairingIsHermitian) {
    Rng rng(5);
    const Vec8 p = random_gaussian<8>(rng), q = random_gaussian<8>(rng);
    const Quaternion pq = quaternionic_pairing(p, q), qp = quaternionic_pairing(q, p);
    EXPECT_LT((pq.to_vector() - qp.conj().to_vector()).norm(), 1e-13);
    EXPECT_NEAR(quaternionic_pairing(p, p).w, p.squaredNorm(), 1e-13);
}
