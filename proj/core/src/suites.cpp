#include "s7lab/suites.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "s7lab/clifford.hpp"
#include "s7lab/errors.hpp"
#include "s7lab/heat_invariants.hpp"
#include "s7lab/sampling.hpp"
#include "s7lab/spectral.hpp"
#include "s7lab/sr_structure.hpp"
#include "s7lab/tangent_group.hpp"

namespace s7lab {

namespace {

constexpr double kPi = std::numbers::pi;

struct Context {
    const SuiteOptions& options;
    Rng rng;

    explicit Context(const SuiteOptions& o, std::uint64_t salt) : options(o), rng(o.seed * 1000003ULL + salt) {}
    double tol(double nominal) const { return nominal * options.tolerance_scale; }
    SpherePoint point() { return SpherePoint(random_unit<8>(rng)); }
    // A point with |x| = |y|.
    SpherePoint singular_point() {
        return SpherePoint::from_blocks(random_unit<4>(rng) / std::sqrt(2.0), random_unit<4>(rng) / std::sqrt(2.0));
    }
    Vec3 vertical() { return random_gaussian<3>(rng); }
};

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

Vec8 flow(const Mat8& a, const Vec8& z, double t) { return std::cos(t) * z + std::sin(t) * (a * z); }

}  // namespace

std::vector<CheckReport> clifford_suite(const SuiteOptions& options) {
    Context ctx(options, 1);
    std::vector<CheckReport> out;
    const CliffordSystem& sys = canonical_system();

    {
        CliffordSystem tested = sys;
        if (options.break_anticommutation) tested.generators[0] = Mat8i::Identity();
        CheckReport r = verify_anticommutation(tested);
        r.name = "clifford: 49 anticommutation identities (exact)";
        out.push_back(r);
    }
    {
        CheckReport r("clifford: generators, blocks and vertical matrices (exact)", 0.0);
        for (const auto& a : sys.generators) {
            if (!is_skew(a) || !is_signed_permutation(a)) r.fail("generator is not a skew signed permutation");
            r.observe((a.transpose() * a - Mat8i::Identity()).cwiseAbs().maxCoeff());
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Mat4i m = sys.blocks[i] * sys.blocks[j] + sys.blocks[j] * sys.blocks[i];
                if (i == j) m += 2 * Mat4i::Identity();
                r.observe(m.cwiseAbs().maxCoeff());
                Mat8i v = sys.vertical[i] * sys.vertical[j] + sys.vertical[j] * sys.vertical[i];
                if (i == j) v += 2 * Mat8i::Identity();
                r.observe(v.cwiseAbs().maxCoeff());
            }
        for (Unit u : {Unit::I, Unit::J, Unit::K}) {
            for (int i = 0; i < 3; ++i)
                r.observe((sys.blocks[i] * left_unit_matrix(u) - left_unit_matrix(u) * sys.blocks[i]).cwiseAbs().maxCoeff());
            for (Unit w : {Unit::I, Unit::J, Unit::K})
                r.observe((right_unit_matrix(w) * left_unit_matrix(u) - left_unit_matrix(u) * right_unit_matrix(w))
                              .cwiseAbs()
                              .maxCoeff());
        }
        const Vec4 e1(1, 0, 0, 0);
        r.observe((printed_block(1).cast<double>() * e1 - Vec4(0, 0, 0, 1)).cwiseAbs().maxCoeff());
        out.push_back(r);
    }
    {
        CheckReport r("clifford: {A_i z, z} orthonormal", ctx.tol(1e-12));
        const Frame& frame = canonical_frame();
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            Mat8 m;
            for (int i = 0; i < 7; ++i) m.col(i) = frame[i] * z.coords();
            m.col(7) = z.coords();
            r.observe(max_abs(m.transpose() * m - Mat8::Identity()));
        }
        out.push_back(r);
    }
    {
        CheckReport r = check_isometry_example(options.seed, 100);
        r.name = "clifford: isometry example relations";
        out.push_back(r);
    }
    {
        CheckReport r("clifford: conjugation invariance", ctx.tol(1e-12));
        for (int n = 0; n < 20; ++n) r.observe(verify_anticommutation(conjugate_system(sys, random_orthogonal<8>(ctx.rng))).max_residual);
        const CliffordSystem by_u = conjugate_system(sys, Eigen::Matrix<int, 8, 8>(isometry_matrix_u(Eigen::Vector4i(1, 0, 0, 0)).transpose()));
        r.observe(verify_anticommutation(by_u).max_residual);
        if (by_u.generators[0] != sys.generators[3]) r.fail("conjugation by U does not send A1 to A4");
        out.push_back(r);
    }
    {
        CheckReport r("clifford: quaternionic pairing", ctx.tol(1e-12));
        const Vec8 np = Vec8::Unit(0);
        const Quaternion one = quaternionic_pairing(np, np);
        r.observe((one.to_vector() - Vec4(1, 0, 0, 0)).cwiseAbs().maxCoeff());
        const Quaternion i = quaternionic_pairing(np, Vec8::Unit(1));
        r.observe((i.to_vector() - Vec4(0, 1, 0, 0)).cwiseAbs().maxCoeff());
        const RealCliffordSystem real = to_real(sys);
        for (int n = 0; n < 100; ++n) {
            const Vec8 p = random_gaussian<8>(ctx.rng);
            const Vec8 q = random_gaussian<8>(ctx.rng);
            const Quaternion pq = quaternionic_pairing(p, q);
            Vec4 expected(p.dot(q), (real.vertical[0] * p).dot(q), (real.vertical[1] * p).dot(q),
                          (real.vertical[2] * p).dot(q));
            r.observe((pq.to_vector() - expected).cwiseAbs().maxCoeff());
        }
        out.push_back(r);
    }
    return out;
}

std::vector<CheckReport> sr_structure_suite(const SuiteOptions& options) {
    Context ctx(options, 2);
    std::vector<CheckReport> out;
    const Frame& frame = canonical_frame();
    {
        CheckReport r("sr: structure constants", ctx.tol(1e-12));
        const StructureConstants np = structure_constants(SpherePoint::north_pole());
        r.observe(std::abs(np(0, 1, 4) + 2.0));
        for (int n = 0; n < options.samples; ++n) {
            const StructureConstants b = structure_constants(ctx.point());
            for (int i = 0; i < 7; ++i)
                for (int k = 0; k < 7; ++k) {
                    if (b(i, i, k) != 0.0) r.fail("b_ii^k nonzero");
                    for (int j = 0; j < 7; ++j)
                        if (b(i, j, k) != -b(j, i, k)) r.fail("b not antisymmetric");
                }
        }
        out.push_back(r);
    }
    {
        CheckReport r("sr: bracket generating rank 7", 0.0);
        int bad = 0;
        if (bracket_generating_rank(frame, SpherePoint::north_pole()) != 7) ++bad;
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            if (bracket_generating_rank(frame, z) != 7 || horizontal_rank(frame, z) != 4) ++bad;
        }
        for (int n = 0; n < 50; ++n)
            if (bracket_generating_rank(frame, ctx.singular_point()) != 7) ++bad;
        r.observe(bad);
        out.push_back(r);
    }
    {
        CheckReport r("sr: Popp matrix closed form", ctx.tol(1e-10));
        r.observe(max_abs(popp_matrix_T(SpherePoint::north_pole()) - 16.0 * Mat3::Identity()));
        r.observe(max_abs(popp_matrix_T(ctx.singular_point()) - 8.0 * Mat3::Identity()));
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            const Mat3 b = popp_matrix_T(z);
            r.observe(max_abs(b - popp_scale_T(z) * Mat3::Identity()));
            if (Eigen::LLT<Mat3>(b).info() != Eigen::Success) r.fail("Popp matrix not positive definite");
        }
        out.push_back(r);
    }
    {
        CheckReport r("sr: Popp densities", ctx.tol(1e-10));
        if (popp_density_T(SpherePoint::north_pole()) != 1.0 / 64.0) r.fail("g(np) != 1/64");
        if (popp_density_Q() != 1.0 / 64.0) r.fail("Q density != 1/64");
        r.observe(std::abs(popp_density_T(ctx.singular_point()) - std::pow(8.0, -1.5)));
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            const double g = popp_density_T(z);
            r.observe(std::abs(popp_density_T_numeric(z) - g));
            if (g < 1.0 / 64.0 - 1e-15 || g > std::pow(8.0, -1.5) + 1e-15) r.fail("g outside [16^-3/2, 8^-3/2]");
        }
        out.push_back(r);
    }
    {
        CheckReport r("sr: Hopf horizontality characterizations agree", ctx.tol(1e-10));
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            Vec8 v = random_gaussian<8>(ctx.rng);
            v -= v.dot(z.coords()) * z.coords();
            const bool make_horizontal = n % 2 == 0;
            if (make_horizontal)
                for (int l = 0; l < 3; ++l) {
                    const Vec8 w = hopf_vertical_at(z, l);
                    v -= v.dot(w) * w;
                }
            const HorizontalityTest t = hopf_horizontality(z, v, 1e-10);
            if (t.by_pairing != t.by_orthogonality) r.fail("characterizations disagree");
            if (t.by_pairing != make_horizontal) r.fail("horizontality misclassified");
            r.observe(std::abs(t.pairing_residual - t.orthogonality_residual) * (make_horizontal ? 1.0 : 0.0));
        }
        out.push_back(r);
    }
    {
        CheckReport r("sr: intrinsic drift vs finite differences", ctx.tol(1e-6));
        r.observe(intrinsic_drift_T(SpherePoint::north_pole()).cwiseAbs().maxCoeff());
        const double s = 1e-4;
        for (int n = 0; n < 100; ++n) {
            const SpherePoint z = n < 10 ? ctx.singular_point() : ctx.point();
            const Vec4 drift = intrinsic_drift_T(z);
            for (int i = 0; i < 4; ++i) {
                const double fd = (intrinsic_potential(SpherePoint(flow(frame[i], z.coords(), s))) -
                                   intrinsic_potential(SpherePoint(flow(frame[i], z.coords(), -s)))) /
                                  (2 * s);
                r.observe(std::abs(fd - drift[i]));
            }
        }
        out.push_back(r);
    }
    {
        CheckReport r("sr: sum-of-squares vs finite differences", ctx.tol(1e-5));
        const double s = 1e-3;
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int n = 0; n < 20; ++n) {
            Polynomial8 f;
            for (int t = 0; t < 12; ++t) {
                Exponent e{};
                for (int d = 0; d < 3; ++d) ++e[std::uniform_int_distribution<int>(0, 7)(ctx.rng)];
                f.add_term(e, coeff(ctx.rng));
            }
            const SpherePoint z = ctx.point();
            const auto second_difference = [&](double h) {
                double sum = 0.0;
                for (int i = 0; i < 4; ++i)
                    sum -= (f.evaluate(flow(frame[i], z.coords(), h)) - 2 * f.evaluate(z.coords()) +
                            f.evaluate(flow(frame[i], z.coords(), -h))) /
                           (h * h);
                return sum;
            };
            // Richardson step removes the h^2 term.
            const double fd = (4 * second_difference(s / 2) - second_difference(s)) / 3;
            r.observe(std::abs(fd - apply_sublaplacian({OperatorKind::TrivializableSumSquares}, f, z)));
        }
        // Linear functions: eigenvalue 4 for both sublaplacians, drift-free at np.
        const Polynomial8 lin = Polynomial8::linear({1, 2, -1, 3, 0, 1, -2, 1});
        for (OperatorKind kind : {OperatorKind::TrivializableSumSquares, OperatorKind::QuaternionicSublaplacian}) {
            const SpherePoint z = ctx.point();
            r.observe(std::abs(apply_sublaplacian({kind}, lin, z) - 4.0 * lin.evaluate(z.coords())));
        }
        const SpherePoint np = SpherePoint::north_pole();
        r.observe(std::abs(apply_sublaplacian({OperatorKind::TrivializableIntrinsic}, lin, np) - 4.0));
        out.push_back(r);
    }
    return out;
}

std::vector<CheckReport> tangent_group_suite(const SuiteOptions& options) {
    Context ctx(options, 3);
    std::vector<CheckReport> out;
    {
        CheckReport r("tangent: det J_Z closed form", ctx.tol(1e-10));
        r.observe(std::abs(j_determinant(SpherePoint::north_pole(), Vec3(1, 0, 0)) - 16.0));
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            const Vec3 zv = ctx.vertical();
            r.observe(std::abs(j_determinant(z, zv) - j_determinant_closed_form(z, zv)));
        }
        out.push_back(r);
    }
    {
        CheckReport r("tangent: J_Z spectrum closed form", ctx.tol(1e-9));
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            const Vec3 zv = ctx.vertical();
            const JSpectrum num = j_spectrum(z, zv);
            const JSpectrum ref = j_spectrum_closed_form(z, zv);
            for (int m = 0; m < 4; ++m) r.observe(std::abs(num[m] - ref[m]));
        }
        out.push_back(r);
    }
    {
        CheckReport r("tangent: quaternionic relations at x=0 or y=0", ctx.tol(1e-10));
        for (int n = 0; n < 100; ++n) {
            const Vec4 q = random_unit<4>(ctx.rng);
            const SpherePoint z = n % 2 ? SpherePoint::from_blocks(q, Vec4::Zero()) : SpherePoint::from_blocks(Vec4::Zero(), q);
            Mat4 j[3];
            for (int l = 0; l < 3; ++l) j[l] = j_matrix(z, Vec3::Unit(l)) / 2.0;
            for (int l = 0; l < 3; ++l) r.observe(max_abs(j[l] * j[l] + Mat4::Identity()));
            const Mat4 prod = j[0] * j[1];
            r.observe(std::min(max_abs(prod - j[2]), max_abs(prod + j[2])));
        }
        out.push_back(r);
    }
    {
        CheckReport r("tangent: singular set", 0.0);
        int bad = 0;
        if (!is_nonsingular(SpherePoint::north_pole())) ++bad;
        const Vec4 e1(1, 0, 0, 0);
        if (is_nonsingular(SpherePoint::from_blocks(e1 / std::sqrt(2.0), e1 / std::sqrt(2.0)))) ++bad;
        for (int n = 0; n < 100; ++n) {
            const SpherePoint z = ctx.point();
            if (!is_nonsingular(z)) continue;
            for (int m = 0; m < 20; ++m)
                if (std::abs(j_determinant(z, ctx.vertical())) <= 0.0) ++bad;
        }
        r.observe(bad);
        out.push_back(r);
    }
    {
        CheckReport r("tangent: type classification (T^ll = 8 delta)", ctx.tol(1e-10));
        int wrong = 0;
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            const CurvatureForm f = curvature_quadratic(z);
            if (f.type.label != TypeLabel::Elliptic) ++wrong;
            r.observe(f.max_off_diagonal);
            r.observe(max_abs(f.matrix - 8.0 * z.delta() * Mat3::Identity()));
        }
        for (int n = 0; n < 100; ++n) {
            const CurvatureForm f = curvature_quadratic(ctx.singular_point());
            if (f.type.label != TypeLabel::Degenerate) ++wrong;
            r.observe(max_abs(f.matrix));
        }
        const CurvatureForm south = curvature_quadratic(SpherePoint::from_blocks(Vec4::Zero(), Vec4(0, 1, 0, 0)));
        if (south.type.label != TypeLabel::Elliptic || south.type.negative != 3) ++wrong;
        if (wrong) r.fail(std::to_string(wrong) + " misclassified points");
        out.push_back(r);
    }
    {
        CheckReport r("tangent: group law", ctx.tol(1e-12));
        for (int n = 0; n < 200; ++n) {
            const TangentGroupSpec spec = make_tangent_group(ctx.point());
            auto element = [&] { return GroupElement{random_gaussian<4>(ctx.rng), random_gaussian<3>(ctx.rng)}; };
            const GroupElement a = element(), b = element(), c = element();
            const GroupElement lhs = group_multiply(spec, group_multiply(spec, a, b), c);
            const GroupElement rhs = group_multiply(spec, a, group_multiply(spec, b, c));
            r.observe((lhs.a - rhs.a).cwiseAbs().maxCoeff());
            r.observe((lhs.b - rhs.b).cwiseAbs().maxCoeff());
            const GroupElement id = group_multiply(spec, a, GroupElement{});
            r.observe((id.a - a.a).cwiseAbs().maxCoeff() + (id.b - a.b).cwiseAbs().maxCoeff());
            const GroupElement e = group_multiply(spec, a, group_inverse(a));
            r.observe(e.a.cwiseAbs().maxCoeff() + e.b.cwiseAbs().maxCoeff());
        }
        out.push_back(r);
    }
    {
        CheckReport r("tangent: canonical coordinates round trip", ctx.tol(1e-10));
        std::uniform_real_distribution<double> radius(0.0, kPi - 0.1);
        for (int n = 0; n < options.samples; ++n) {
            const SpherePoint z = ctx.point();
            const Vec7 u = random_unit<7>(ctx.rng) * radius(ctx.rng);
            const SpherePoint w = canonical_coords_inverse(z, u);
            r.observe((canonical_coords(z, w) - u).cwiseAbs().maxCoeff());
        }
        const SpherePoint z = ctx.point();
        const Vec7 tiny = random_unit<7>(ctx.rng) * 1e-9;
        r.observe((canonical_coords(z, canonical_coords_inverse(z, tiny)) - tiny).cwiseAbs().maxCoeff());
        out.push_back(r);
    }
    {
        CheckReport r("tangent: pushforward vs finite differences", ctx.tol(1e-5));
        const Frame& frame = canonical_frame();
        const double s = 1e-5;
        for (int n = 0; n < 50; ++n) {
            const SpherePoint z = ctx.point();
            const Vec7 u = random_unit<7>(ctx.rng) * std::uniform_real_distribution<double>(0.0, 2.0)(ctx.rng);
            const Mat7 a = pushforward_coeffs(z, u);
            const Vec8 w = canonical_coords_inverse(z, u).coords();
            for (int i = 0; i < 4; ++i) {
                const Vec7 fd = (canonical_coords(z, SpherePoint(flow(frame[i], w, s))) -
                                 canonical_coords(z, SpherePoint(flow(frame[i], w, -s)))) /
                                (2 * s);
                r.observe((fd - a.row(i).transpose()).cwiseAbs().maxCoeff());
            }
        }
        r.observe((pushforward_coeffs(ctx.point(), Vec7::Zero()) - Mat7::Identity()).cwiseAbs().maxCoeff());
        out.push_back(r);
    }
    {
        CheckReport r("tangent: order -1 brackets reproduce b (exact)", 0.0);
        const Vec8 dyadic[] = {Vec8::Unit(0), (Vec8() << 0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0).finished(),
                               (Vec8() << 0.5, 0, -0.5, 0, 0, 0.5, 0, 0.5).finished(),
                               (Vec8() << 0, 0, 0, 0, 0.5, -0.5, 0.5, 0.5).finished()};
        for (const Vec8& v : dyadic) {
            const StructureConstants b = structure_constants(SpherePoint(v));
            const auto fields = nilpotent_fields(b);
            for (int i = 0; i < 4; ++i)
                for (int m = 0; m < 4; ++m) {
                    const AffineField br = lie_bracket(fields[i], fields[m]);
                    double residual = br.linear.cwiseAbs().maxCoeff() + br.constant.head<4>().cwiseAbs().maxCoeff();
                    for (int j = 4; j < 7; ++j) residual = std::max(residual, std::abs(br.constant[j] - b(i, m, j)));
                    r.observe(residual);
                }
        }
        out.push_back(r);
    }
    {
        CheckReport r("tangent: anisotropic remainder at least cubic", 0.0);
        double worst_ratio = std::numeric_limits<double>::infinity();
        for (int n = 0; n < 10; ++n) {
            const StructureConstants b = structure_constants(ctx.point());
            const Vec7 u = random_unit<7>(ctx.rng);
            const double ratio = anisotropic_remainder(b, 1e-2, u) / anisotropic_remainder(b, 1e-3, u);
            worst_ratio = std::min(worst_ratio, ratio);
        }
        if (!(worst_ratio >= 800.0)) r.fail("remainder decays slower than cubic");
        r.note("smallest remainder ratio between eps=1e-2 and 1e-3: " + format_double(worst_ratio, 6) +
               " (observed order " + format_double(std::log10(worst_ratio), 3) + ")");
        out.push_back(r);
    }
    return out;
}

std::vector<CheckReport> heat_suite(const SuiteOptions& options) {
    Context ctx(options, 4);
    std::vector<CheckReport> out;
    const QuadratureConfig quad;
    {
        CheckReport r("heat: W and phi special values", ctx.tol(1e-12));
        const TangentGroupSpec np = make_tangent_group(SpherePoint::north_pole());
        r.observe(std::abs(volume_element_w(np, Vec3::Zero()) - 1.0));
        for (double rad : {0.3, 1.0, 2.5}) {
            const double u = rad / std::sinh(rad);
            r.observe(std::abs(volume_element_w(np, Vec3(0, rad, 0)) - u * u));
            const Action act = action_phi(np, Vec3(rad, 0, 0), Vec4(1, 0, 0, 0), Vec3::Zero());
            r.observe(std::abs(act.real_part - 0.5 * rad / std::tanh(rad)) + std::abs(act.oscillation));
        }
        const Vec4 a = random_gaussian<4>(ctx.rng);
        const Action zero = action_phi(np, Vec3::Zero(), a, Vec3(1, 2, 3));
        r.observe(std::abs(zero.real_part - 0.5 * a.squaredNorm()) + std::abs(zero.oscillation));
        for (int n = 0; n < 50; ++n) {
            const SpherePoint z = ctx.point();
            const TangentGroupSpec spec = make_tangent_group(z);
            const Vec3 tau = random_gaussian<3>(ctx.rng);
            const Mat3 rot = random_orthogonal<3>(ctx.rng);
            const double w = volume_element_w(spec, tau);
            const double rad = tau.norm();
            const double d = z.delta();
            r.observe(std::abs(w - theta_over_sinh(rad) * theta_over_sinh(d * rad)));
            r.observe(std::abs(volume_element_w(spec, rot * tau) - w));
        }
        out.push_back(r);
    }
    {
        CheckReport r("heat: c0 closed-form oracles", ctx.tol(1e-8));
        // int r^4/sinh^2 r = pi^4/30 via 1/sinh^2 r = 4 sum n e^{-2nr}: 4 * 24 sum n/(2n)^5 = 3 zeta(4).
        double series = 0.0;
        for (int n = 200000; n >= 1; --n) series += 3.0 / (double(n) * n * n * n);
        r.observe(std::abs(series - std::pow(kPi, 4) / 30.0));
        const double cq = c0_Q(quad);
        r.observe(std::abs(cq - 4.0 / 15.0));
        r.observe(std::abs(64.0 * 4.0 * kPi * series / std::pow(2 * kPi, 5) - 4.0 / 15.0));
        r.observe(std::abs(c0_T(SpherePoint::north_pole(), quad) - cq));
        r.observe(std::abs(c0_T(ctx.singular_point(), quad) - std::sqrt(2.0) / 4.0));
        r.observe(std::abs(c0_T(SpherePoint::from_blocks(Vec4::Zero(), Vec4(0, 0, 1, 0)), quad) - cq));
        QuadratureConfig short_range = quad;
        short_range.truncation_radius = 40.0;
        r.observe(std::abs(c0_Q(short_range) - cq) * 100.0);
        out.push_back(r);
    }
    {
        CheckReport r("heat: c0_T >= c0_Q and delta^2 dependence", ctx.tol(1e-10));
        const double cq = c0_Q(quad);
        for (int n = 0; n < 100; ++n) {
            const SpherePoint z = ctx.point();
            const double ct = c0_T(z, quad);
            if (!(ct > cq + 1e-9)) r.fail("c0_T not above c0_Q at a point with delta != 0");
            const SpherePoint swapped = SpherePoint::from_blocks(z.y(), z.x());
            const SpherePoint rotated = SpherePoint::from_blocks(random_unit<4>(ctx.rng) * z.x().norm(),
                                                                 random_unit<4>(ctx.rng) * z.y().norm());
            r.observe(std::abs(c0_T(swapped, quad) - ct));
            r.observe(std::abs(c0_T(rotated, quad) - ct));
            r.observe(std::abs(c0_T_standard(z, quad) - ct * popp_density_T(z) * 64.0));
        }
        out.push_back(r);
    }
    {
        CheckReport r("heat: BGG kernel on-diagonal and scaling", ctx.tol(1e-7));
        for (int n = 0; n < 5; ++n) {
            const SpherePoint z = ctx.point();
            HeatKernelQuery q{make_tangent_group(z), 1.0, {}, {}};
            const double k1 = bgg_heat_kernel(q, quad);
            r.observe(std::abs(k1 - c0_T(z, quad)));
            for (double t : {0.5, 2.0}) {
                q.t = t;
                r.observe(std::abs(bgg_heat_kernel(q, quad) * std::pow(t, 5) - k1) / k1);
            }
        }
        HeatKernelQuery far{make_tangent_group(SpherePoint::north_pole()), 0.1, {}, {Vec4::Zero(), Vec3(10, 0, 0)}};
        const double k_far = bgg_heat_kernel(far, quad);
        far.target = {};
        const double k_near = bgg_heat_kernel(far, quad);
        if (!(std::abs(k_far) < k_near)) r.fail("oscillatory damping not observed");
        r.note("K_0.1 at |b|=10: " + format_double(k_far, 6) + " vs " + format_double(k_near, 6));
        out.push_back(r);
    }
    {
        CheckReport r("heat: isospectrality gap positive", 0.0);
        if (gap_integrand(1.0, quad) != 0.0 || gap_integrand(-1.0, quad) != 0.0) r.fail("gap integrand nonzero at delta^2=1");
        if (!(gap_integrand(0.3, quad) > 0.0)) r.fail("gap integrand not positive");
        const GapEstimate gap = c0_gap(quad, 2000, options.seed);
        if (!(gap.value > 3.0 * gap.standard_error)) r.fail("gap not significantly positive");
        r.note("gap " + format_double(gap.value, 8) + " +- " + format_double(gap.standard_error, 3) + " (n=2000)");
        out.push_back(r);
    }
    return out;
}

std::vector<CheckReport> spectral_suite(const SuiteOptions& options) {
    Context ctx(options, 5);
    std::vector<CheckReport> out;
    const int kmax = std::min(options.max_inclusion_degree, kDefaultMaxDegree);
    {
        CheckReport r("spectral: harmonic bases", 0.0);
        for (int k = 0; k <= kmax; ++k) {
            const HarmonicSpace space = harmonic_basis(k);
            if (static_cast<std::size_t>(space.dimension()) != harmonic_dimension(k)) r.fail("dimension mismatch at k=" + std::to_string(k));
            for (const auto& p : space.basis)
                if (!p.flat_laplacian().is_zero() || p.degree() != k || !p.is_homogeneous()) r.fail("basis element not harmonic");
        }
        out.push_back(r);
    }
    {
        CheckReport r("spectral: Fischer Gram matches sphere moments", 0.0);
        for (int k = 0; k <= 2; ++k) {
            const HarmonicSpace space = harmonic_basis(k);
            const RationalMatrix g = l2_gram_over_pi4(space);
            for (int a = 0; a < space.dimension(); ++a)
                for (int b = a; b < space.dimension(); ++b)
                    if (g.get(a, b) != l2_product_over_pi4(space.basis[a], space.basis[b])) r.fail("Gram mismatch");
        }
        out.push_back(r);
    }
    {
        CheckReport r("spectral: self-adjointness and field skewness", ctx.tol(1e-12));
        const CliffordSystem& sys = canonical_system();
        for (int k = 1; k <= std::min(3, kmax); ++k) {
            const DegreeModel model(k);
            for (OperatorKind kind : {OperatorKind::TrivializableSumSquares, OperatorKind::QuaternionicSublaplacian}) {
                const RationalMatrix gm = model.gram_over_pi4() * exact_operator_matrix({kind}, model.space());
                if (!(gm == gm.transpose())) r.fail("G M not exactly symmetric");
                const Eigen::MatrixXd s = model.operator_matrix({kind});
                r.observe(max_abs(s - s.transpose()));
            }
            for (int i = 0; i < 7; ++i) {
                const RationalMatrix f = field_action_matrix(sys.generators[i], model.space());
                if (f.trace() != 0) r.fail("field matrix has nonzero trace");
                const Eigen::MatrixXd s = model.orthonormalize(f);
                r.observe(max_abs(s + s.transpose()));
            }
            const RationalMatrix t_direct = [&] {
                RationalMatrix m(model.dimension(), model.dimension());
                for (int i = 0; i < 4; ++i) {
                    const RationalMatrix f = field_action_matrix(sys.generators[i], model.space());
                    m -= f * f;
                }
                return m;
            }();
            if (!(t_direct == exact_operator_matrix({OperatorKind::TrivializableSumSquares}, model.space())))
                r.fail("k(k+6) + sum X(A_l)^2 differs from -sum_{i<=4} X(A_i)^2");
        }
        out.push_back(r);
    }
    {
        CheckReport r("spectral: sphere Laplacian = so(8) Casimir", 0.0);
        for (int k = 0; k <= 2; ++k) {
            const HarmonicSpace space = harmonic_basis(k);
            if (!(so8_casimir_matrix(space) == exact_operator_matrix({OperatorKind::SphereLaplacian}, space)))
                r.fail("Casimir mismatch at k=" + std::to_string(k));
        }
        out.push_back(r);
    }
    for (int k = 1; k <= std::min(options.max_tensor_degree, kmax); ++k) {
        CheckReport r = verify_tensor_identity(k);
        r.name = "spectral: tensor identities k=" + std::to_string(k);
        out.push_back(r);
    }
    {
        InclusionResult inc = spectra_inclusion(kmax, ctx.tol(1e-8));
        inc.report.name = "spectral: inclusion sigma(Q) in sigma(T), k<=" + std::to_string(kmax);
        if (!inc.spectra_differ) inc.report.fail("spectra coincide; no non-isospectrality evidence");
        for (const auto& d : inc.degrees) {
            int sum_q = 0, sum_t = 0;
            for (const auto& c : d.quaternionic) sum_q += c.multiplicity;
            for (const auto& c : d.trivializable) sum_t += c.multiplicity;
            if (static_cast<std::size_t>(sum_q) != harmonic_dimension(d.degree) ||
                static_cast<std::size_t>(sum_t) != harmonic_dimension(d.degree))
                inc.report.fail("multiplicities do not sum to dim H_k");
            for (const auto* list : {&d.quaternionic, &d.trivializable})
                for (const auto& c : *list) {
                    if (c.value < -1e-10) inc.report.fail("negative eigenvalue");
                    if (d.degree > 0 && std::abs(c.value) < 1e-8) inc.report.fail("zero eigenvalue at k>0");
                }
        }
        out.push_back(inc.report);
    }
    {
        std::vector<SpherePoint> points;
        for (int n = 0; n < 50; ++n) points.push_back(ctx.point());
        for (int k = 0; k <= std::min(2, kmax); ++k) {
            CheckReport r = eigenspace_pointwise_sum(k, points, ctx.tol(1e-6));
            r.name = "spectral: eigenspace pointwise sums k=" + std::to_string(k);
            out.push_back(r);
        }
    }
    {
        CheckReport r("spectral: conjugation invariance under U", ctx.tol(1e-10));
        const CliffordSystem conj =
            conjugate_system(canonical_system(), isometry_matrix_u(Eigen::Vector4i(1, 0, 0, 0)));
        for (int k = 0; k <= std::min(3, kmax); ++k) {
            const DegreeModel model(k);
            const OperatorSpec spec{OperatorKind::TrivializableSumSquares};
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(model.operator_matrix(spec), Eigen::EigenvaluesOnly);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> b(model.operator_matrix(spec, conj), Eigen::EigenvaluesOnly);
            r.observe((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff());
        }
        out.push_back(r);
    }
    return out;
}

std::vector<CheckReport> run_all_suites(const SuiteOptions& options) {
    std::vector<CheckReport> all;
    for (auto suite : {clifford_suite, sr_structure_suite, tangent_group_suite, heat_suite, spectral_suite}) {
        auto part = suite(options);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace s7lab
