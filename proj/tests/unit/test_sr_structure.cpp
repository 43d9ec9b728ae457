#include <gtest/gtest.h>

#include <cmath>

#include "s7lab/errors.hpp"
#include "s7lab/sampling.hpp"
#include "s7lab/sr_structure.hpp"

using namespace s7lab;

TEST(SpherePoint, RenormalizesAndRejects) {
    Vec8 v = Vec8::Zero();
    v[0] = 3.0;
    v[5] = 4.0;
    const SpherePoint z(v);
    EXPECT_DOUBLE_EQ(z.coords().norm(), 1.0);
    EXPECT_DOUBLE_EQ(z[0], 0.6);
    EXPECT_THROW(SpherePoint(Vec8::Zero()), InvalidPoint);
    EXPECT_THROW(SpherePoint(Vec8::Constant(1e-9)), InvalidPoint);
    EXPECT_THROW(SpherePoint(Vec8::Constant(std::nan(""))), InvalidPoint);
}

TEST(SpherePoint, BlockNorms) {
    const SpherePoint z = SpherePoint::from_blocks(Vec4(1, 1, 0, 0), Vec4(0, 0, 1, 1));
    EXPECT_NEAR(z.x_norm_sq(), 0.5, 1e-15);
    EXPECT_NEAR(z.delta(), 0.0, 1e-15);
    EXPECT_EQ(SpherePoint::north_pole().delta(), 1.0);
}

TEST(StructureConstants, NorthPoleValues) {
    const StructureConstants b = structure_constants(SpherePoint::north_pole());
    EXPECT_DOUBLE_EQ(b(0, 1, 4), -2.0);
    EXPECT_DOUBLE_EQ(b(1, 0, 4), 2.0);
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) EXPECT_EQ(b(i, i, k), 0.0);
}

TEST(StructureConstants, TotallyAntisymmetricOnDistinctIndices) {
    Rng rng(2);
    const StructureConstants b = structure_constants(SpherePoint(random_unit<8>(rng)));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) {
                EXPECT_NEAR(b(i, j, k), -b(j, i, k), 1e-15);
                EXPECT_NEAR(b(i, j, k), -b(i, k, j), 1e-12);
            }
}

TEST(StructureConstants, VerticalSliceIsSkew) {
    Rng rng(9);
    const StructureConstants b = structure_constants(SpherePoint(random_unit<8>(rng)));
    for (int l = 0; l < 3; ++l) {
        const Mat4 s = b.vertical_slice(l);
        EXPECT_LT((s + s.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(BracketGenerating, FullRankEverywhereSampled) {
    Rng rng(4);
    for (int n = 0; n < 50; ++n) {
        const SpherePoint z(random_unit<8>(rng));
        EXPECT_EQ(bracket_generating_rank(canonical_frame(), z), 7);
        EXPECT_EQ(horizontal_rank(canonical_frame(), z), 4);
    }
    const SpherePoint singular = SpherePoint::from_blocks(Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0));
    EXPECT_EQ(bracket_generating_rank(canonical_frame(), singular), 7);
}

TEST(Popp, ClosedFormAtSpecialPoints) {
    EXPECT_EQ(popp_density_T(SpherePoint::north_pole()), 1.0 / 64.0);
    EXPECT_EQ(popp_density_Q(), 1.0 / 64.0);
    const SpherePoint eq = SpherePoint::from_blocks(Vec4(1, 0, 0, 0), Vec4(1, 0, 0, 0));
    EXPECT_NEAR(popp_scale_T(eq), 8.0, 1e-14);
    EXPECT_NEAR(popp_density_T(eq), std::pow(8.0, -1.5), 1e-15);
    EXPECT_LT((popp_matrix_T(eq) - 8.0 * Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Popp, NumericMatchesClosedForm) {
    Rng rng(8);
    for (int n = 0; n < 100; ++n) {
        const SpherePoint z(random_unit<8>(rng));
        const double expected = 16.0 * (1.0 - 2.0 * z.x_norm_sq() * z.y_norm_sq());
        EXPECT_LT((popp_matrix_T(z) - expected * Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(popp_density_T_numeric(z), popp_density_T(z), 1e-14);
    }
    const PoppData q = popp_Q();
    EXPECT_EQ(q.density, 1.0 / 64.0);
}

TEST(Hopf, VerticalFieldsAreOrthonormalAndTangent) {
    Rng rng(12);
    const SpherePoint z(random_unit<8>(rng));
    for (int l = 0; l < 3; ++l) {
        const Vec8 v = hopf_vertical_at(z, l);
        EXPECT_NEAR(v.norm(), 1.0, 1e-14);
        EXPECT_NEAR(v.dot(z.coords()), 0.0, 1e-14);
        EXPECT_FALSE(is_hopf_horizontal(z, v));
    }
}

TEST(Hopf, HorizontalityRejectsNonTangent) {
    const SpherePoint z = SpherePoint::north_pole();
    EXPECT_THROW(hopf_horizontality(z, z.coords()), NotTangent);
    Vec8 v = Vec8::Zero();
    v[4] = 1.0;
    EXPECT_TRUE(is_hopf_horizontal(z, v));
    v = Vec8::Zero();
    v[1] = 1.0;
    EXPECT_FALSE(is_hopf_horizontal(z, v));
}

TEST(Intrinsic, PotentialAndDriftAtSpecialPoints) {
    EXPECT_EQ(intrinsic_potential(SpherePoint::north_pole()), 0.0);
    EXPECT_EQ(intrinsic_drift_T(SpherePoint::north_pole()), Vec4::Zero());
    const SpherePoint eq = SpherePoint::from_blocks(Vec4(1, 0, 0, 0), Vec4(0, 0, 1, 0));
    EXPECT_NEAR(intrinsic_potential(eq), 1.5 * std::log(2.0), 1e-14);
}

TEST(Sublaplacian, LinearFunctionsAreEigenfunctions) {
    Rng rng(13);
    const Polynomial8 f = Polynomial8::coordinate(2) + Polynomial8::coordinate(6);
    for (int n = 0; n < 10; ++n) {
        const SpherePoint z(random_unit<8>(rng));
        for (OperatorKind k : {OperatorKind::SphereLaplacian}) {
            EXPECT_NEAR(apply_sublaplacian({k}, f, z), 7.0 * f.evaluate(z.coords()), 1e-12);
        }
        EXPECT_NEAR(apply_sublaplacian({OperatorKind::TrivializableSumSquares}, f, z), 4.0 * f.evaluate(z.coords()),
                    1e-12);
        EXPECT_NEAR(apply_sublaplacian({OperatorKind::QuaternionicSublaplacian}, f, z), 4.0 * f.evaluate(z.coords()),
                    1e-12);
    }
}

TEST(Sublaplacian, IntrinsicAddsDrift) {
    Rng rng(14);
    const Polynomial8 f = Polynomial8::coordinate(0) * Polynomial8::coordinate(5);
    const SpherePoint z(random_unit<8>(rng));
    const Vec4 drift = intrinsic_drift_T(z);
    double expected = apply_sublaplacian({OperatorKind::TrivializableSumSquares}, f, z);
    for (int i = 0; i < 4; ++i)
        expected -= drift[i] * f.apply_field(canonical_system().generators[i]).evaluate(z.coords());
    EXPECT_NEAR(apply_sublaplacian({OperatorKind::TrivializableIntrinsic}, f, z), expected, 1e-12);
}
