#include <gtest/gtest.h>

#include "s7lab/polynomial.hpp"
#include "s7lab/quaternion.hpp"
#include "s7lab/rational_matrix.hpp"
#include "s7lab/sampling.hpp"

using namespace s7lab;

namespace {

Exponent exps(std::initializer_list<int> e) {
    Exponent out{};
    int i = 0;
    for (int v : e) out[i++] = static_cast<std::uint8_t>(v);
    return out;
}

}  // namespace

TEST(Quaternion, UnitProducts) {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1}, one{1, 0, 0, 0};
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(i * i, -1.0 * one);
    EXPECT_EQ(i * j * k, -1.0 * one);
}

TEST(Quaternion, MultiplicationMatrices) {
    Rng rng(3);
    for (int n = 0; n < 20; ++n) {
        const Quaternion p = Quaternion::from_vector(random_gaussian<4>(rng));
        const Quaternion q = Quaternion::from_vector(random_gaussian<4>(rng));
        EXPECT_LT(((left_mult_matrix(p) * q.to_vector()) - (p * q).to_vector()).norm(), 1e-14);
        EXPECT_LT(((right_mult_matrix(q) * p.to_vector()) - (p * q).to_vector()).norm(), 1e-14);
    }
    EXPECT_EQ(left_unit_matrix(Unit::I).cast<double>(), left_mult_matrix({0, 1, 0, 0}));
    EXPECT_EQ(right_unit_matrix(Unit::K).cast<double>(), right_mult_matrix({0, 0, 0, 1}));
}

TEST(Polynomial, ArithmeticAndDegree) {
    const Polynomial8 x1 = Polynomial8::coordinate(0);
    const Polynomial8 x2 = Polynomial8::coordinate(1);
    const Polynomial8 p = x1 * x1 - x2 * x2;
    EXPECT_EQ(p.degree(), 2);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.coefficient(exps({2})), 1);
    EXPECT_EQ(p.coefficient(exps({0, 2})), -1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(Polynomial8().degree(), -1);
    EXPECT_FALSE((p + Polynomial8::constant(1)).is_homogeneous());
}

TEST(Polynomial, FlatLaplacianOfHarmonic) {
    const Polynomial8 x1 = Polynomial8::coordinate(0);
    const Polynomial8 x5 = Polynomial8::coordinate(4);
    EXPECT_TRUE((x1 * x1 - x5 * x5).flat_laplacian().is_zero());
    EXPECT_EQ((x1 * x1).flat_laplacian(), Polynomial8::constant(2));
    const Polynomial8 r2 = [] {
        Polynomial8 s;
        for (int i = 0; i < 8; ++i) s += Polynomial8::coordinate(i) * Polynomial8::coordinate(i);
        return s;
    }();
    EXPECT_EQ(r2.flat_laplacian(), Polynomial8::constant(16));
}

TEST(Polynomial, DerivativeAndEvaluate) {
    const Polynomial8 p = Polynomial8::monomial(exps({3, 1}), Rational(1, 2));
    EXPECT_EQ(p.derivative(0), Polynomial8::monomial(exps({2, 1}), Rational(3, 2)));
    Vec8 z = Vec8::Zero();
    z[0] = 2.0;
    z[1] = 3.0;
    EXPECT_DOUBLE_EQ(p.evaluate(z), 12.0);
    EXPECT_DOUBLE_EQ(p.gradient(z)[0], 18.0);
    EXPECT_DOUBLE_EQ(p.gradient(z)[1], 4.0);
}

TEST(Polynomial, ApplyFieldIsDirectionalDerivative) {
    // X(M) x_i = (M x)_i
    Mat8i m = Mat8i::Zero();
    m(0, 1) = -1;
    m(1, 0) = 1;
    EXPECT_EQ(Polynomial8::coordinate(0).apply_field(m), -1 * Polynomial8::coordinate(1));
    EXPECT_EQ(Polynomial8::coordinate(1).apply_field(m), Polynomial8::coordinate(0));
    EXPECT_TRUE(Polynomial8::coordinate(2).apply_field(m).is_zero());
}

TEST(RationalMatrix, ProductTransposeTrace) {
    RationalMatrix a(2, 2);
    a.add(0, 1, Rational(1, 3));
    a.add(1, 0, 2);
    const RationalMatrix p = a * a;
    EXPECT_EQ(p.get(0, 0), Rational(2, 3));
    EXPECT_EQ(p.get(1, 1), Rational(2, 3));
    EXPECT_EQ(p.trace(), Rational(4, 3));
    EXPECT_EQ(a.transpose().get(1, 0), Rational(1, 3));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(RationalMatrix::identity(3, 2).trace(), 6);
    EXPECT_EQ(a.max_abs(), 2);
}

TEST(RationalMatrix, LongDoubleConversion) {
    EXPECT_EQ(to_long_double(Rational(1, 4)), 0.25L);
    const Rational huge = Rational(mpz_class("1000000000000000000000000000001"), mpz_class("3000000000000000000000000000000"));
    EXPECT_NEAR(static_cast<double>(to_long_double(huge)), 1.0 / 3.0, 1e-15);
}
