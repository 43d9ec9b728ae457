#pragma once

#include <array>

#include "s7lab/clifford.hpp"
#include "s7lab/operators.hpp"
#include "s7lab/polynomial.hpp"
#include "s7lab/types.hpp"

namespace s7lab {

// Unit vector z = (x, y) in R^4 x R^4.
class SpherePoint {
public:
    // Renormalizes; throws InvalidPoint for norms below 1e-8 or non-finite input.
    explicit SpherePoint(const Vec8& coords);

    static SpherePoint north_pole();
    static SpherePoint from_blocks(const Vec4& x, const Vec4& y);

    const Vec8& coords() const { return coords_; }
    double operator[](int i) const { return coords_[i]; }
    Vec4 x() const { return coords_.head<4>(); }
    Vec4 y() const { return coords_.tail<4>(); }
    double x_norm_sq() const { return coords_.head<4>().squaredNorm(); }
    double y_norm_sq() const { return coords_.tail<4>().squaredNorm(); }
    // |x|^2 - |y|^2
    double delta() const { return x_norm_sq() - y_norm_sq(); }

private:
    Vec8 coords_;
};

// b(i, j, k) = -2 <A_i A_j z, A_k z> with 0-based indices over all seven
// generators. Antisymmetric in (i, j) by construction.
class StructureConstants {
public:
    StructureConstants() { b_.fill(0.0); }

    double operator()(int i, int j, int k) const { return b_[index(i, j, k)]; }
    void set_pair(int i, int j, int k, double value) {
        b_[index(i, j, k)] = value;
        b_[index(j, i, k)] = -value;
    }
    // b(., ., 4 + l) restricted to the horizontal indices 0..3.
    Mat4 vertical_slice(int l) const;

private:
    static int index(int i, int j, int k) { return (i * 7 + j) * 7 + k; }
    std::array<double, 343> b_;
};

Vec8 field_at(const Mat8& a, const SpherePoint& z);
Vec8 field_at(const Mat8i& a, const SpherePoint& z);

StructureConstants structure_constants(const Frame& frame, const SpherePoint& z);
StructureConstants structure_constants(const SpherePoint& z);

// Rank of {A_i z} (i <= 4) together with {A_i A_j z} (i < j <= 4), singular
// values cut at 1e-10 relative to the largest one.
int bracket_generating_rank(const Frame& frame, const SpherePoint& z);
int horizontal_rank(const Frame& frame, const SpherePoint& z);

struct PoppData {
    Mat3 matrix;
    double density = 0.0;
};

// B^{kl} = sum_{i,j <= 4} b_ij^k b_ij^l.
Mat3 popp_matrix_T(const SpherePoint& z, const Frame& frame = canonical_frame());
// 16 (1 - 2 |x|^2 |y|^2), the diagonal value of B_T.
double popp_scale_T(const SpherePoint& z);
// [16 (1 - 2 |x|^2 |y|^2)]^{-3/2}
double popp_density_T(const SpherePoint& z);
// det(popp_matrix_T)^{-1/2}
double popp_density_T_numeric(const SpherePoint& z, const Frame& frame = canonical_frame());
PoppData popp_T(const SpherePoint& z);
// 16^{-3/2}
double popp_density_Q();
PoppData popp_Q();

// V_l z for l = 0, 1, 2 (i, j, k).
Vec8 hopf_vertical_at(const SpherePoint& z, int l);

struct HorizontalityTest {
    bool by_pairing = false;
    bool by_orthogonality = false;
    double pairing_residual = 0.0;
    double orthogonality_residual = 0.0;
};

// Both characterizations of Hopf horizontality. Throws NotTangent if
// |<z, v>| > tol.
HorizontalityTest hopf_horizontality(const SpherePoint& z, const Vec8& v, double tol = 1e-12);
bool is_hopf_horizontal(const SpherePoint& z, const Vec8& v, double tol = 1e-12);

// h(z) = -(3/2) log(1 - 2 |x|^2 |y|^2)
double intrinsic_potential(const SpherePoint& z);
// |x|^2 |y|^2 as a polynomial.
const Polynomial8& xy_norm_product();
// (X_1 h, ..., X_4 h)(z)
Vec4 intrinsic_drift_T(const SpherePoint& z, const CliffordSystem& sys = canonical_system());

double apply_sublaplacian(const OperatorSpec& spec, const Polynomial8& f, const SpherePoint& z,
                          const CliffordSystem& sys = canonical_system());

}  // namespace s7lab
