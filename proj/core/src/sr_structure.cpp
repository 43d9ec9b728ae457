#include "s7lab/sr_structure.hpp"

#include <cmath>

#include "s7lab/errors.hpp"

namespace s7lab {

SpherePoint::SpherePoint(const Vec8& coords) {
    if (!coords.allFinite()) throw InvalidPoint("sphere point has non-finite coordinates");
    const double n = coords.norm();
    if (n < 1e-8) throw InvalidPoint("sphere point norm below 1e-8");
    coords_ = coords / n;
}

SpherePoint SpherePoint::north_pole() { return SpherePoint(Vec8::Unit(0)); }

SpherePoint SpherePoint::from_blocks(const Vec4& x, const Vec4& y) {
    Vec8 z;
    z << x, y;
    return SpherePoint(z);
}

Mat4 StructureConstants::vertical_slice(int l) const {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (*this)(i, j, 4 + l);
    return m;
}

Vec8 field_at(const Mat8& a, const SpherePoint& z) { return a * z.coords(); }
Vec8 field_at(const Mat8i& a, const SpherePoint& z) { return a.cast<double>() * z.coords(); }

StructureConstants structure_constants(const Frame& frame, const SpherePoint& z) {
    std::array<Vec8, 7> az;
    for (int k = 0; k < 7; ++k) az[k] = frame[k] * z.coords();
    StructureConstants b;
    for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
            const Vec8 aij = frame[i] * az[j];
            for (int k = 0; k < 7; ++k) b.set_pair(i, j, k, -2.0 * aij.dot(az[k]));
        }
    }
    return b;
}

StructureConstants structure_constants(const SpherePoint& z) { return structure_constants(canonical_frame(), z); }

namespace {

int numeric_rank(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s[0] == 0.0) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] > 1e-10 * s[0]) ++r;
    return r;
}

}  // namespace

int bracket_generating_rank(const Frame& frame, const SpherePoint& z) {
    Eigen::MatrixXd rows(10, 8);
    int r = 0;
    for (int i = 0; i < 4; ++i) rows.row(r++) = (frame[i] * z.coords()).transpose();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) rows.row(r++) = (frame[i] * frame[j] * z.coords()).transpose();
    return numeric_rank(rows);
}

int horizontal_rank(const Frame& frame, const SpherePoint& z) {
    Eigen::MatrixXd rows(4, 8);
    for (int i = 0; i < 4; ++i) rows.row(i) = (frame[i] * z.coords()).transpose();
    return numeric_rank(rows);
}

Mat3 popp_matrix_T(const SpherePoint& z, const Frame& frame) {
    const StructureConstants b = structure_constants(frame, z);
    Mat3 m = Mat3::Zero();
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m(k, l) += b(i, j, 4 + k) * b(i, j, 4 + l);
    return m;
}

double popp_scale_T(const SpherePoint& z) { return 16.0 * (1.0 - 2.0 * z.x_norm_sq() * z.y_norm_sq()); }

double popp_density_T(const SpherePoint& z) { return std::pow(popp_scale_T(z), -1.5); }

double popp_density_T_numeric(const SpherePoint& z, const Frame& frame) {
    return 1.0 / std::sqrt(popp_matrix_T(z, frame).determinant());
}

PoppData popp_T(const SpherePoint& z) { return {popp_matrix_T(z), popp_density_T(z)}; }

double popp_density_Q() { return 1.0 / 64.0; }

PoppData popp_Q() { return {16.0 * Mat3::Identity(), popp_density_Q()}; }

Vec8 hopf_vertical_at(const SpherePoint& z, int l) {
    return canonical_system().vertical[l].cast<double>() * z.coords();
}

HorizontalityTest hopf_horizontality(const SpherePoint& z, const Vec8& v, double tol) {
    const double normal = std::abs(z.coords().dot(v));
    if (normal > tol) throw NotTangent("vector is not tangent: |<z,v>| = " + format_double(normal, 3));
    HorizontalityTest t;
    const Quaternion q = quaternionic_pairing(z.coords(), v);
    t.pairing_residual = std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
    t.orthogonality_residual = normal;
    for (int l = 0; l < 3; ++l)
        t.orthogonality_residual = std::max(t.orthogonality_residual, std::abs(hopf_vertical_at(z, l).dot(v)));
    t.by_pairing = t.pairing_residual <= tol;
    t.by_orthogonality = t.orthogonality_residual <= tol;
    return t;
}

bool is_hopf_horizontal(const SpherePoint& z, const Vec8& v, double tol) {
    return hopf_horizontality(z, v, tol).by_pairing;
}

double intrinsic_potential(const SpherePoint& z) {
    return -1.5 * std::log(1.0 - 2.0 * z.x_norm_sq() * z.y_norm_sq());
}

const Polynomial8& xy_norm_product() {
    static const Polynomial8 p = [] {
        Polynomial8 x2;
        Polynomial8 y2;
        for (int i = 0; i < 4; ++i) {
            Exponent ex{};
            ex[i] = 2;
            x2.add_term(ex, 1);
            Exponent ey{};
            ey[4 + i] = 2;
            y2.add_term(ey, 1);
        }
        return x2 * y2;
    }();
    return p;
}

Vec4 intrinsic_drift_T(const SpherePoint& z, const CliffordSystem& sys) {
    const double denom = 1.0 - 2.0 * xy_norm_product().evaluate(z.coords());
    Vec4 d;
    for (int i = 0; i < 4; ++i) d[i] = 3.0 * xy_norm_product().apply_field(sys.generators[i]).evaluate(z.coords()) / denom;
    return d;
}

double apply_sublaplacian(const OperatorSpec& spec, const Polynomial8& f, const SpherePoint& z,
                          const CliffordSystem& sys) {
    double value = 0.0;
    for (const FieldProduct& term : field_expansion(spec, sys))
        value += term.coefficient * f.apply_field(term.second).apply_field(term.first).evaluate(z.coords());
    if (spec.kind == OperatorKind::TrivializableIntrinsic) {
        const Vec4 drift = intrinsic_drift_T(z, sys);
        for (int i = 0; i < 4; ++i) value -= drift[i] * f.apply_field(sys.generators[i]).evaluate(z.coords());
    }
    return value;
}

}  // namespace s7lab
