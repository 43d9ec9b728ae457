#pragma once

#include <array>
#include <complex>

#include "s7lab/sr_structure.hpp"

namespace s7lab {

// <J_Z X_i, X_j> = <Z, [X_i, X_j]> in the basis X_1(z)..X_4(z).
Mat4 j_matrix(const StructureConstants& b, const Vec3& zv);
Mat4 j_matrix(const SpherePoint& z, const Vec3& zv);
double j_determinant(const SpherePoint& z, const Vec3& zv);
// 16 (|x|^2 - |y|^2)^2 |Z|^4
double j_determinant_closed_form(const SpherePoint& z, const Vec3& zv);

using JSpectrum = std::array<std::complex<double>, 4>;
// Eigenvalues sorted by imaginary part.
JSpectrum j_spectrum(const SpherePoint& z, const Vec3& zv);
// +-2i(|x|^2 +- |y|^2)|Z|, sorted by imaginary part.
JSpectrum j_spectrum_closed_form(const SpherePoint& z, const Vec3& zv);

// |(|x|^2 - |y|^2)| > tol
bool is_nonsingular(const SpherePoint& z, double tol = 1e-12);

enum class TypeLabel { Elliptic, Degenerate, Mixed };

struct TypeClassification {
    int positive = 0;
    int negative = 0;
    TypeLabel label = TypeLabel::Mixed;
    Vec3 eigenvalues = Vec3::Zero();  // ascending
};

struct CurvatureForm {
    Mat3 matrix;               // symmetrized T^{lk}
    double max_off_diagonal = 0.0;
    TypeClassification type;
};

// T^{lk} = 2 (b_12^l b_34^k + b_14^l b_23^k - b_13^l b_24^k), symmetrized in (l, k).
// Eigenvalues within tol of zero count as zero.
CurvatureForm curvature_quadratic(const SpherePoint& z, double tol = 1e-10);
const char* to_string(TypeLabel label);

enum class Structure { Trivializable, Quaternionic };

struct TangentGroupSpec {
    SpherePoint base_point = SpherePoint::north_pole();
    StructureConstants constants;
    int homogeneous_dimension = 10;
    double haar_density = 1.0 / 64.0;
    Structure structure = Structure::Trivializable;
};

// For Q the tangent group is the same at every point; it is realized by the
// trivializable constants at the north pole, where both distributions agree.
TangentGroupSpec make_tangent_group(const SpherePoint& z, Structure structure = Structure::Trivializable);

struct GroupElement {
    Vec4 a = Vec4::Zero();
    Vec3 b = Vec3::Zero();
};

GroupElement group_multiply(const TangentGroupSpec& spec, const GroupElement& g1, const GroupElement& g2);
GroupElement group_inverse(const GroupElement& g);

// cos|u| z + sin|u|/|u| A_u z; throws OutOfChart if |u| >= pi.
SpherePoint canonical_coords_inverse(const SpherePoint& z, const Vec7& u, const Frame& frame = canonical_frame());
// Inverse chart; throws AntipodalPoint if <w, z> <= -1 + 1e-12.
Vec7 canonical_coords(const SpherePoint& z, const SpherePoint& w, const Frame& frame = canonical_frame());

// F(r) = 1/r^2 - cot(r)/r and G(r) = r cot r, series below r = 1e-2.
double chart_f(double r);
double chart_g(double r);

// a_ij(u) = G delta_ij + F u_i u_j + 1/2 sum_k b_ij^k u_k for all 7x7 indices;
// rows 0..3 are the pushforwards of X_1..X_4. Throws OutOfChart.
Mat7 pushforward_coeffs(const StructureConstants& b, const Vec7& u);
Mat7 pushforward_coeffs(const SpherePoint& z, const Vec7& u);

using FieldTable = Eigen::Matrix<double, 4, 7>;

// Coefficients of X_1^(l)..X_4^(l) at u for l in {-1, 0, 1}.
FieldTable homogeneous_fields(const StructureConstants& b, int order, const Vec7& u);
FieldTable homogeneous_fields(const SpherePoint& z, int order, const Vec7& u);

// eps * delta_eps^* (X_i)_* at u, with delta_eps(u) = (eps u_h, eps^2 u_v).
FieldTable rescaled_pushforward(const StructureConstants& b, double eps, const Vec7& u);
// max-norm of the rescaled field minus its truncation at order 1.
double anisotropic_remainder(const StructureConstants& b, double eps, const Vec7& u);

// Vector field on R^7 with affine coefficients: coefficient_j(u) = constant_j + (linear u)_j.
struct AffineField {
    Vec7 constant = Vec7::Zero();
    Mat7 linear = Mat7::Zero();
};

// The order -1 fields X_1^(-1)..X_4^(-1).
std::array<AffineField, 4> nilpotent_fields(const StructureConstants& b);
AffineField lie_bracket(const AffineField& x, const AffineField& y);

}  // namespace s7lab
