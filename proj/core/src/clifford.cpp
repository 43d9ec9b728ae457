#include "s7lab/clifford.hpp"

#include <cmath>
#include <string>

#include "s7lab/errors.hpp"
#include "s7lab/sampling.hpp"

namespace s7lab {

namespace {

template <typename M>
bool signed_permutation(const M& m) {
    for (int i = 0; i < m.rows(); ++i) {
        int row_nonzero = 0;
        int col_nonzero = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0) {
                if (std::abs(m(i, j)) != 1) return false;
                ++row_nonzero;
            }
            if (m(j, i) != 0) ++col_nonzero;
        }
        if (row_nonzero != 1 || col_nonzero != 1) return false;
    }
    return true;
}

std::string pair_label(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Mat4 c_layout(double x0, double x1, double x2, double x3) {
    Mat4 c;
    c <<  x0,  x1,  x2,  x3,
          x3, -x2,  x1, -x0,
         -x2, -x3,  x0,  x1,
         -x1,  x0,  x3, -x2;
    return c;
}

}  // namespace

bool is_skew(const Mat8i& m) { return (m + m.transpose()).isZero(); }
bool is_signed_permutation(const Mat8i& m) { return signed_permutation(m); }
bool is_signed_permutation(const Mat4i& m) { return signed_permutation(m); }

Mat8i block_diag(const Mat4i& top, const Mat4i& bottom) {
    Mat8i m = Mat8i::Zero();
    m.topLeftCorner<4, 4>() = top;
    m.bottomRightCorner<4, 4>() = bottom;
    return m;
}

Mat8i block_antidiag(const Mat4i& top_right, const Mat4i& bottom_left) {
    Mat8i m = Mat8i::Zero();
    m.topRightCorner<4, 4>() = top_right;
    m.bottomLeftCorner<4, 4>() = bottom_left;
    return m;
}

Mat4i printed_block(int index) {
    Mat4i b;
    switch (index) {
        case 1:
            b << 0, 0, 0, -1,
                 0, 0, 1, 0,
                 0, -1, 0, 0,
                 1, 0, 0, 0;
            return b;
        case 2:
            b << 0, 0, -1, 0,
                 0, 0, 0, -1,
                 1, 0, 0, 0,
                 0, 1, 0, 0;
            return b;
        case 3:
            b << 0, 1, 0, 0,
                 -1, 0, 0, 0,
                 0, 0, 0, -1,
                 0, 0, 1, 0;
            return b;
        default:
            throw Error("printed_block: index must be 1, 2 or 3");
    }
}

CliffordSystem build_canonical_system() {
    CliffordSystem sys;
    for (int i = 0; i < 3; ++i) {
        sys.blocks[i] = printed_block(i + 1);
        sys.generators[i] = block_antidiag(sys.blocks[i], sys.blocks[i]);
    }
    sys.generators[3] = block_antidiag(Mat4i::Identity(), -Mat4i::Identity());
    const Unit units[3] = {Unit::I, Unit::J, Unit::K};
    for (int l = 0; l < 3; ++l) {
        const Mat4i left = left_unit_matrix(units[l]);
        sys.generators[4 + l] = block_diag(left, -left);
        const Mat4i right = right_unit_matrix(units[l]);
        sys.vertical[l] = block_diag(right, right);
    }
    return sys;
}

const CliffordSystem& canonical_system() {
    static const CliffordSystem sys = build_canonical_system();
    return sys;
}

const Frame& canonical_frame() {
    static const Frame frame = frame_of(canonical_system());
    return frame;
}

RealCliffordSystem to_real(const CliffordSystem& sys) {
    RealCliffordSystem r;
    for (int i = 0; i < 7; ++i) r.generators[i] = sys.generators[i].cast<double>();
    for (int l = 0; l < 3; ++l) r.vertical[l] = sys.vertical[l].cast<double>();
    return r;
}

Frame frame_of(const CliffordSystem& sys) { return to_real(sys).generators; }
Frame frame_of(const RealCliffordSystem& sys) { return sys.generators; }

Mat8i s3_block_generator(Block block, Unit u, Side side) {
    const Mat4i m = side == Side::Left ? left_unit_matrix(u) : right_unit_matrix(u);
    return block == Block::First ? block_diag(m, Mat4i::Zero()) : block_diag(Mat4i::Zero(), m);
}

CheckReport verify_anticommutation(const CliffordSystem& sys) {
    CheckReport report("anticommutation (exact)", 0.0);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const Mat8i& a = sys.generators[i];
            const Mat8i& b = sys.generators[j];
            Mat8i lhs = a * b + b * a;
            if (i == j) lhs += 2 * Mat8i::Identity();
            const int residual = lhs.cwiseAbs().maxCoeff();
            report.observe(residual);
            if (residual != 0) report.details.push_back("violated at " + pair_label(i, j));
        }
    }
    return report;
}

CheckReport verify_anticommutation(const RealCliffordSystem& sys, double tol) {
    CheckReport report("anticommutation", tol);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const Mat8& a = sys.generators[i];
            const Mat8& b = sys.generators[j];
            Mat8 lhs = a * b + b * a;
            if (i == j) lhs += 2 * Mat8::Identity();
            const double residual = lhs.cwiseAbs().maxCoeff();
            report.observe(residual);
            if (!(residual <= tol)) report.details.push_back("violated at " + pair_label(i, j));
        }
    }
    return report;
}

CliffordSystem conjugate_system(const CliffordSystem& sys, const Mat8i& c) {
    if (c.transpose() * c != Mat8i::Identity())
        throw NonOrthogonal("conjugate_system: C^T C != Id");
    CliffordSystem out = sys;
    for (auto& a : out.generators) a = c.transpose() * a * c;
    for (auto& v : out.vertical) v = c.transpose() * v * c;
    return out;
}

RealCliffordSystem conjugate_system(const CliffordSystem& sys, const Mat8& c, double tol) {
    const double deviation = (c.transpose() * c - Mat8::Identity()).cwiseAbs().maxCoeff();
    if (!(deviation <= tol))
        throw NonOrthogonal("conjugate_system: |C^T C - Id| = " + format_double(deviation, 3));
    RealCliffordSystem out = to_real(sys);
    for (auto& a : out.generators) a = c.transpose() * a * c;
    for (auto& v : out.vertical) v = c.transpose() * v * c;
    return out;
}

Quaternion quaternionic_pairing(const Vec8& p, const Vec8& q) {
    const Quaternion p0 = Quaternion::from_vector(p.head<4>());
    const Quaternion p1 = Quaternion::from_vector(p.tail<4>());
    const Quaternion q0 = Quaternion::from_vector(q.head<4>());
    const Quaternion q1 = Quaternion::from_vector(q.tail<4>());
    return p0.conj() * q0 + p1.conj() * q1;
}

Mat4 isometry_matrix_c(const Vec4& x) { return c_layout(x[0], x[1], x[2], x[3]); }

Mat8 isometry_matrix_u(const Vec4& x) {
    const Mat4 c = isometry_matrix_c(x);
    Mat8 u = Mat8::Zero();
    u.topRightCorner<4, 4>() = c;
    u.bottomLeftCorner<4, 4>() = c * printed_block(1).cast<double>();
    return u;
}

Mat4i isometry_matrix_c(const Eigen::Vector4i& x) {
    return c_layout(x[0], x[1], x[2], x[3]).cast<int>();
}

Mat8i isometry_matrix_u(const Eigen::Vector4i& x) {
    const Mat4i c = isometry_matrix_c(x);
    return block_antidiag(c, c * printed_block(1));
}

namespace {

// The six relations as (lhs - rhs) matrices; Scalar is int or double.
template <typename M4, typename M8, typename Gen>
void isometry_residuals(const M4& c, const M8& u, const Gen& a, const std::array<M4, 3>& b,
                        CheckReport& report, const std::string& where) {
    auto record = [&](const char* what, double residual) {
        report.observe(residual);
        if (!(residual <= report.tolerance)) report.details.push_back(std::string(what) + " fails at " + where);
    };
    record("C orthogonal", double((c.transpose() * c - M4::Identity()).cwiseAbs().maxCoeff()));
    record("B3 C = C B1", double((b[2] * c - c * b[0]).cwiseAbs().maxCoeff()));
    record("C B3 = -B1 C", double((c * b[2] + b[0] * c).cwiseAbs().maxCoeff()));
    record("C B2 = B2 C", double((c * b[1] - b[1] * c).cwiseAbs().maxCoeff()));
    record("U A1 = A4 U", double((u * a[0] - a[3] * u).cwiseAbs().maxCoeff()));
    for (int j = 1; j < 4; ++j) {
        const std::string what = "U A" + std::to_string(j + 1) + " = A" + std::to_string(j) + " U";
        record(what.c_str(), double((u * a[j] - a[j - 1] * u).cwiseAbs().maxCoeff()));
    }
}

std::string point_label(double x0, double x1, double x2, double x3) {
    return "x=(" + format_double(x0, 6) + "," + format_double(x1, 6) + "," + format_double(x2, 6) + "," +
           format_double(x3, 6) + ")";
}

}  // namespace

CheckReport check_isometry_example(const Eigen::Vector4i& x) {
    CheckReport report("isometry example (exact)", 0.0);
    const CliffordSystem& sys = canonical_system();
    isometry_residuals(isometry_matrix_c(x), isometry_matrix_u(x), sys.generators, sys.blocks, report,
                       point_label(x[0], x[1], x[2], x[3]));
    return report;
}

CheckReport check_isometry_example(const Vec4& x, double tol) {
    CheckReport report("isometry example", tol);
    const RealCliffordSystem sys = to_real(canonical_system());
    std::array<Mat4, 3> b;
    for (int i = 0; i < 3; ++i) b[i] = printed_block(i + 1).cast<double>();
    isometry_residuals(isometry_matrix_c(x), isometry_matrix_u(x), sys.generators, b, report,
                       point_label(x[0], x[1], x[2], x[3]));
    return report;
}

CheckReport check_isometry_example(std::uint64_t seed, int random_points) {
    CheckReport report("isometry example", 1e-12);
    int exact_failures = 0;
    for (int axis = 0; axis < 4; ++axis) {
        for (int sign : {1, -1}) {
            Eigen::Vector4i x = Eigen::Vector4i::Zero();
            x[axis] = sign;
            const CheckReport r = check_isometry_example(x);
            if (!r.passed) {
                ++exact_failures;
                report.fail("exact relation failure at integer point " + std::to_string(axis) + "/" +
                            std::to_string(sign));
            }
            report.observe(r.max_residual);
        }
    }
    Rng rng(seed);
    for (int n = 0; n < random_points; ++n) {
        const CheckReport r = check_isometry_example(random_unit<4>(rng), report.tolerance);
        report.observe(r.max_residual);
        for (const auto& d : r.details) report.details.push_back(d);
    }
    report.note("8 integer points exact, " + std::to_string(random_points) + " random points, " +
                std::to_string(exact_failures) + " exact failures");
    return report;
}

}  // namespace s7lab
