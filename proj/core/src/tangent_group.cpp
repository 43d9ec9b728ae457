#include "s7lab/tangent_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "s7lab/errors.hpp"

namespace s7lab {

Mat4 j_matrix(const StructureConstants& b, const Vec3& zv) {
    Mat4 j = Mat4::Zero();
    for (int r = 0; r < 4; ++r) {
        for (int c = r + 1; c < 4; ++c) {
            double v = 0.0;
            for (int k = 0; k < 3; ++k) v -= zv[k] * b(r, c, 4 + k);
            j(r, c) = v;
            j(c, r) = -v;
        }
    }
    return j;
}

Mat4 j_matrix(const SpherePoint& z, const Vec3& zv) { return j_matrix(structure_constants(z), zv); }

double j_determinant(const SpherePoint& z, const Vec3& zv) { return j_matrix(z, zv).determinant(); }

double j_determinant_closed_form(const SpherePoint& z, const Vec3& zv) {
    const double d = z.delta();
    const double n2 = zv.squaredNorm();
    return 16.0 * d * d * n2 * n2;
}

namespace {

void sort_by_imag(JSpectrum& s) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.imag() < b.imag(); });
}

}  // namespace

JSpectrum j_spectrum(const SpherePoint& z, const Vec3& zv) {
    Eigen::EigenSolver<Mat4> solver(j_matrix(z, zv), false);
    JSpectrum s;
    for (int i = 0; i < 4; ++i) s[i] = solver.eigenvalues()[i];
    sort_by_imag(s);
    return s;
}

JSpectrum j_spectrum_closed_form(const SpherePoint& z, const Vec3& zv) {
    const double n = zv.norm();
    const double plus = 2.0 * (z.x_norm_sq() + z.y_norm_sq()) * n;
    const double minus = 2.0 * z.delta() * n;
    JSpectrum s = {std::complex<double>(0, plus), std::complex<double>(0, -plus), std::complex<double>(0, minus),
                   std::complex<double>(0, -minus)};
    sort_by_imag(s);
    return s;
}

bool is_nonsingular(const SpherePoint& z, double tol) { return std::abs(z.delta()) > tol; }

CurvatureForm curvature_quadratic(const SpherePoint& z, double tol) {
    const StructureConstants b = structure_constants(z);
    Mat3 t;
    for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k)
            t(l, k) = 2.0 * (b(0, 1, 4 + l) * b(2, 3, 4 + k) + b(0, 3, 4 + l) * b(1, 2, 4 + k) -
                             b(0, 2, 4 + l) * b(1, 3, 4 + k));
    CurvatureForm form;
    form.matrix = 0.5 * (t + t.transpose());
    form.max_off_diagonal = 0.0;
    for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k)
            if (l != k) form.max_off_diagonal = std::max(form.max_off_diagonal, std::abs(form.matrix(l, k)));

    Eigen::SelfAdjointEigenSolver<Mat3> solver(form.matrix, Eigen::EigenvaluesOnly);
    TypeClassification& type = form.type;
    type.eigenvalues = solver.eigenvalues();
    for (int i = 0; i < 3; ++i) {
        if (type.eigenvalues[i] > tol) ++type.positive;
        if (type.eigenvalues[i] < -tol) ++type.negative;
    }
    if (type.positive == 0 && type.negative == 0)
        type.label = TypeLabel::Degenerate;
    else if (type.positive == 3 || type.negative == 3)
        type.label = TypeLabel::Elliptic;
    else
        type.label = TypeLabel::Mixed;
    return form;
}

const char* to_string(TypeLabel label) {
    switch (label) {
        case TypeLabel::Elliptic: return "Elliptic";
        case TypeLabel::Degenerate: return "Degenerate";
        case TypeLabel::Mixed: return "Mixed";
    }
    return "unknown";
}

TangentGroupSpec make_tangent_group(const SpherePoint& z, Structure structure) {
    TangentGroupSpec spec;
    spec.base_point = z;
    spec.structure = structure;
    if (structure == Structure::Trivializable) {
        spec.constants = structure_constants(z);
        spec.haar_density = popp_density_T(z);
    } else {
        spec.constants = structure_constants(SpherePoint::north_pole());
        spec.haar_density = popp_density_Q();
    }
    return spec;
}

GroupElement group_multiply(const TangentGroupSpec& spec, const GroupElement& g1, const GroupElement& g2) {
    GroupElement out;
    out.a = g1.a + g2.a;
    out.b = g1.b + g2.b;
    for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += spec.constants(i, j, 4 + k) * g1.a[i] * g2.a[j];
        out.b[k] += 0.5 * s;
    }
    return out;
}

GroupElement group_inverse(const GroupElement& g) { return {-g.a, -g.b}; }

namespace {

// sin(r)/r
double sinc(double r) {
    if (r < 1e-4) return 1.0 - r * r / 6.0 + r * r * r * r / 120.0;
    return std::sin(r) / r;
}

}  // namespace

SpherePoint canonical_coords_inverse(const SpherePoint& z, const Vec7& u, const Frame& frame) {
    const double r = u.norm();
    if (!(r < std::numbers::pi)) throw OutOfChart("canonical coordinates need |u| < pi");
    Vec8 au = Vec8::Zero();
    for (int i = 0; i < 7; ++i) au += u[i] * (frame[i] * z.coords());
    return SpherePoint(std::cos(r) * z.coords() + sinc(r) * au);
}

Vec7 canonical_coords(const SpherePoint& z, const SpherePoint& w, const Frame& frame) {
    const double c = w.coords().dot(z.coords());
    if (c <= -1.0 + 1e-12) throw AntipodalPoint("canonical coordinates undefined at the antipode");
    const double s = (w.coords() - c * z.coords()).norm();
    const double theta = std::atan2(s, c);
    const double prefactor = theta < 1e-4 ? 1.0 + theta * theta / 6.0 + 7.0 * std::pow(theta, 4) / 360.0
                                          : theta / std::sin(theta);
    Vec7 u;
    for (int i = 0; i < 7; ++i) u[i] = prefactor * w.coords().dot(frame[i] * z.coords());
    return u;
}

double chart_f(double r) {
    if (r < 1e-1) {
        // 2^{2n} |B_{2n}| r^{2n-2} / (2n)!, n = 1..6
        static constexpr double c[6] = {1.0 / 3.0,      1.0 / 45.0,        2.0 / 945.0,
                                        1.0 / 4725.0,   2.0 / 93555.0,     1382.0 / 638512875.0};
        const double r2 = r * r;
        double s = 0.0;
        for (int n = 5; n >= 0; --n) s = s * r2 + c[n];
        return s;
    }
    return 1.0 / (r * r) - std::cos(r) / (r * std::sin(r));
}

double chart_g(double r) {
    if (r < 1e-1) return 1.0 - r * r * chart_f(r);
    return r * std::cos(r) / std::sin(r);
}

Mat7 pushforward_coeffs(const StructureConstants& b, const Vec7& u) {
    const double r = u.norm();
    if (!(r < std::numbers::pi)) throw OutOfChart("pushforward needs |u| < pi");
    const double f = chart_f(r);
    const double g = chart_g(r);
    Mat7 a;
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            double s = 0.0;
            for (int k = 0; k < 7; ++k) s += b(i, j, k) * u[k];
            a(i, j) = (i == j ? g : 0.0) + f * u[i] * u[j] + 0.5 * s;
        }
    }
    return a;
}

Mat7 pushforward_coeffs(const SpherePoint& z, const Vec7& u) { return pushforward_coeffs(structure_constants(z), u); }

FieldTable homogeneous_fields(const StructureConstants& b, int order, const Vec7& u) {
    FieldTable t = FieldTable::Zero();
    auto partial_b = [&](int i, int j, int k_begin, int k_end) {
        double s = 0.0;
        for (int k = k_begin; k < k_end; ++k) s += b(i, j, k) * u[k];
        return 0.5 * s;
    };
    for (int i = 0; i < 4; ++i) {
        switch (order) {
            case -1:
                t(i, i) = 1.0;
                for (int j = 4; j < 7; ++j) t(i, j) = partial_b(i, j, 0, 4);
                break;
            case 0:
                for (int j = 0; j < 4; ++j) t(i, j) = partial_b(i, j, 0, 4);
                for (int j = 4; j < 7; ++j) t(i, j) = partial_b(i, j, 4, 7);
                break;
            case 1:
                for (int j = 0; j < 4; ++j) t(i, j) = partial_b(i, j, 4, 7);
                for (int j = 0; j < 7; ++j) t(i, j) += u[i] * u[j] / 3.0;
                t(i, i) -= u.head<4>().squaredNorm() / 3.0;
                break;
            default:
                throw Error("homogeneous_fields: order must be -1, 0 or 1");
        }
    }
    return t;
}

FieldTable homogeneous_fields(const SpherePoint& z, int order, const Vec7& u) {
    return homogeneous_fields(structure_constants(z), order, u);
}

FieldTable rescaled_pushforward(const StructureConstants& b, double eps, const Vec7& u) {
    Vec7 v = u;
    v.head<4>() *= eps;
    v.tail<3>() *= eps * eps;
    const Mat7 a = pushforward_coeffs(b, v);
    FieldTable t = a.topRows<4>();
    t.rightCols<3>() /= eps;
    return t;
}

double anisotropic_remainder(const StructureConstants& b, double eps, const Vec7& u) {
    const FieldTable truncated = homogeneous_fields(b, -1, u) + eps * homogeneous_fields(b, 0, u) +
                                 eps * eps * homogeneous_fields(b, 1, u);
    return (rescaled_pushforward(b, eps, u) - truncated).cwiseAbs().maxCoeff();
}

std::array<AffineField, 4> nilpotent_fields(const StructureConstants& b) {
    std::array<AffineField, 4> fields;
    for (int i = 0; i < 4; ++i) {
        fields[i].constant[i] = 1.0;
        for (int j = 4; j < 7; ++j)
            for (int k = 0; k < 4; ++k) fields[i].linear(j, k) = 0.5 * b(i, j, k);
    }
    return fields;
}

AffineField lie_bracket(const AffineField& x, const AffineField& y) {
    AffineField out;
    out.constant = y.linear * x.constant - x.linear * y.constant;
    out.linear = y.linear * x.linear - x.linear * y.linear;
    return out;
}

}  // namespace s7lab
