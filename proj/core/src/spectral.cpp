#include "s7lab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "s7lab/errors.hpp"

namespace s7lab {

namespace {

std::size_t binomial(int n, int r) {
    if (r < 0 || n < r) return 0;
    std::size_t b = 1;
    for (int i = 1; i <= r; ++i) b = b * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
    return b;
}

void enumerate_exponents(int position, int remaining, Exponent& current, std::vector<Exponent>& out) {
    if (position == 7) {
        current[7] = static_cast<std::uint8_t>(remaining);
        out.push_back(current);
        return;
    }
    const int top = position == 0 ? std::min(remaining, 1) : remaining;
    for (int v = 0; v <= top; ++v) {
        current[position] = static_cast<std::uint8_t>(v);
        enumerate_exponents(position + 1, remaining - v, current, out);
    }
    current[position] = 0;
}

Polynomial8 shift_x1(const Polynomial8& p, int power) {
    Polynomial8 out;
    for (const auto& [e, c] : p.terms()) {
        Exponent d = e;
        d[0] = static_cast<std::uint8_t>(d[0] + power);
        out.add_term(d, c);
    }
    return out;
}

Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational exponent_factorial(const Exponent& e) {
    mpz_class f = 1;
    for (auto v : e)
        for (int i = 2; i <= v; ++i) f *= i;
    return Rational(f);
}

// Field matrices keyed by the generating matrix, so repeated fields are built once.
class FieldCache {
public:
    explicit FieldCache(const HarmonicSpace& space) : space_(space) {}
    const RationalMatrix& get(const Mat8i& m) {
        for (const auto& [key, value] : cache_)
            if (key == m) return value;
        cache_.emplace_back(m, field_action_matrix(m, space_));
        return cache_.back().second;
    }

private:
    const HarmonicSpace& space_;
    std::vector<std::pair<Mat8i, RationalMatrix>> cache_;
};

RationalMatrix expansion_matrix(const std::vector<FieldProduct>& terms, FieldCache& cache, int n) {
    RationalMatrix out(n, n);
    for (const FieldProduct& term : terms)
        out += Rational(term.coefficient) * (cache.get(term.first) * cache.get(term.second));
    return out;
}

int laplace_eigenvalue(int k) { return k * (k + 6); }

}  // namespace

std::size_t harmonic_dimension(int k) {
    if (k < 0) return 0;
    return binomial(k + 7, 7) - binomial(k + 5, 7);
}

std::vector<Rational> HarmonicSpace::coordinates(const Polynomial8& p) const {
    std::vector<Rational> c(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) c[a] = p.coefficient(leading[a]);
    return c;
}

HarmonicSpace harmonic_basis(int k, int max_degree) {
    if (k < 0) throw Error("harmonic_basis: negative degree");
    if (k > max_degree)
        throw DegreeTooLarge("harmonic_basis: degree " + std::to_string(k) + " exceeds limit " +
                             std::to_string(max_degree));
    HarmonicSpace space;
    space.degree = k;
    Exponent current{};
    enumerate_exponents(0, k, current, space.leading);
    std::sort(space.leading.begin(), space.leading.end(), std::greater<Exponent>());
    for (std::size_t a = 0; a < space.leading.size(); ++a) {
        const Exponent& e = space.leading[a];
        space.index.emplace(e, static_cast<int>(a));
        const int j0 = e[0];
        Exponent tail = e;
        tail[0] = 0;
        Polynomial8 q = Polynomial8::monomial(tail);
        Polynomial8 p = shift_x1(q, j0);
        for (int j = 0; !q.is_zero(); ++j) {
            const int power = j0 + 2 * j;
            q = q.flat_laplacian();
            q *= Rational(-1, (power + 2) * (power + 1));
            p += shift_x1(q, power + 2);
        }
        space.basis.push_back(std::move(p));
    }
    return space;
}

RationalMatrix field_action_matrix(const Mat8i& m, const HarmonicSpace& space) {
    const int n = space.dimension();
    RationalMatrix out(n, n);
    for (int a = 0; a < n; ++a) {
        RationalMatrix::Column column;
        for (const auto& [e, c] : space.basis[a].terms()) {
            if (e[0] > 2) continue;
            for (int i = 0; i < 8; ++i) {
                if (e[i] == 0) continue;
                for (int j = 0; j < 8; ++j) {
                    if (m(i, j) == 0) continue;
                    Exponent d = e;
                    --d[i];
                    ++d[j];
                    if (d[0] > 1) continue;
                    const int row = space.index.at(d);
                    const Rational v = c * (e[i] * m(i, j));
                    auto [it, inserted] = column.try_emplace(row, v);
                    if (!inserted) it->second += v;
                }
            }
        }
        for (auto it = column.begin(); it != column.end();) {
            if (it->second == 0)
                it = column.erase(it);
            else
                ++it;
        }
        out.set_column(a, std::move(column));
    }
    return out;
}

RationalMatrix exact_operator_matrix(const OperatorSpec& spec, const HarmonicSpace& space,
                                     const CliffordSystem& sys) {
    const int n = space.dimension();
    const int lap = laplace_eigenvalue(space.degree);
    FieldCache cache(space);
    switch (spec.kind) {
        case OperatorKind::SphereLaplacian:
            return RationalMatrix::identity(n, lap);
        case OperatorKind::TrivializableSumSquares: {
            RationalMatrix out = RationalMatrix::identity(n, lap);
            for (int l = 4; l < 7; ++l) {
                const RationalMatrix& f = cache.get(sys.generators[l]);
                out += f * f;
            }
            return out;
        }
        case OperatorKind::QuaternionicSublaplacian: {
            RationalMatrix out = RationalMatrix::identity(n, lap);
            for (const auto& v : sys.vertical) {
                const RationalMatrix& f = cache.get(v);
                out += f * f;
            }
            return out;
        }
        case OperatorKind::S3LeftBlock:
        case OperatorKind::S3RightBlock:
        case OperatorKind::MixedB:
            return expansion_matrix(field_expansion(spec, sys), cache, n);
        case OperatorKind::TrivializableIntrinsic:
            break;
    }
    throw UnsupportedOperator("the intrinsic sublaplacian does not preserve harmonic polynomial spaces");
}

RationalMatrix so8_casimir_matrix(const HarmonicSpace& space) {
    const int n = space.dimension();
    RationalMatrix out(n, n);
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            Mat8i e = Mat8i::Zero();
            e(i, j) = 1;
            e(j, i) = -1;
            const RationalMatrix f = field_action_matrix(e, space);
            out -= f * f;
        }
    }
    return out;
}

RationalMatrix fischer_gram(const HarmonicSpace& space) {
    std::map<Exponent, std::vector<std::pair<int, Rational>>> by_monomial;
    for (int a = 0; a < space.dimension(); ++a)
        for (const auto& [e, c] : space.basis[a].terms()) by_monomial[e].emplace_back(a, c);
    const int n = space.dimension();
    RationalMatrix g(n, n);
    for (const auto& [e, entries] : by_monomial) {
        const Rational weight = exponent_factorial(e);
        for (const auto& [a, ca] : entries)
            for (const auto& [b, cb] : entries) g.add(a, b, weight * ca * cb);
    }
    return g;
}

RationalMatrix l2_gram_over_pi4(const HarmonicSpace& space) {
    mpz_class denominator = 3;
    for (int m = 0; m < space.degree; ++m) denominator *= 8 + 2 * m;
    return Rational(1, denominator) * fischer_gram(space);
}

Rational sphere_moment_over_pi4(const Exponent& alpha) {
    Rational product = 1;
    int half_total = 0;
    for (auto v : alpha) {
        if (v % 2 != 0) return 0;
        const int m = v / 2;
        half_total += m;
        mpz_class four_pow = 1;
        for (int i = 0; i < m; ++i) four_pow *= 4;
        product *= factorial(2 * m) / (Rational(four_pow) * factorial(m));
    }
    return 2 * product / factorial(half_total + 3);
}

Rational l2_product_over_pi4(const Polynomial8& p, const Polynomial8& q) {
    Rational s = 0;
    const Polynomial8 pq = p * q;
    for (const auto& [e, c] : pq.terms()) s += c * sphere_moment_over_pi4(e);
    return s;
}

DegreeModel::DegreeModel(int k, int max_degree)
    : space_(harmonic_basis(k, max_degree)), gram_(l2_gram_over_pi4(space_)) {
    const int n = space_.dimension();
    const MatrixXld g = gram_.to_dense_long_double();
    scale_.resize(n);
    for (int i = 0; i < n; ++i) scale_[i] = 1.0L / std::sqrt(g(i, i));
    MatrixXld scaled(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled(i, j) = g(i, j) * (scale_[i] * scale_[j]);
    Eigen::LLT<MatrixXld> llt(scaled);
    if (llt.info() != Eigen::Success) throw Error("Gram matrix is not positive definite");
    chol_ = llt.matrixL();
}

Eigen::MatrixXd DegreeModel::orthonormalize(const RationalMatrix& m) const {
    const int n = dimension();
    const MatrixXld a = (gram_ * m).to_dense_long_double();
    MatrixXld scaled(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled(i, j) = a(i, j) * (scale_[i] * scale_[j]);
    const auto lower = chol_.triangularView<Eigen::Lower>();
    const MatrixXld y = lower.solve(scaled);
    const MatrixXld s = lower.solve(y.transpose()).transpose();
    return s.cast<double>();
}

Eigen::MatrixXd DegreeModel::operator_matrix(const OperatorSpec& spec, const CliffordSystem& sys) const {
    return orthonormalize(exact_operator_matrix(spec, space_, sys));
}

Eigen::VectorXd DegreeModel::function_coefficients(const Eigen::VectorXd& v) const {
    const VectorXld w = chol_.transpose().triangularView<Eigen::Upper>().solve(v.cast<long double>());
    const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
    return (scale_.cwiseProduct(w) / pi2).cast<double>();
}

Eigen::VectorXd DegreeModel::basis_values(const Vec8& z) const {
    Eigen::VectorXd v(dimension());
    for (int a = 0; a < dimension(); ++a) v[a] = space_.basis[a].evaluate(z);
    return v;
}

Eigen::MatrixXd operator_matrix(const OperatorSpec& spec, int k, const CliffordSystem& sys) {
    return DegreeModel(k).operator_matrix(spec, sys);
}

std::vector<EigenCluster> cluster_eigenvalues(const Eigen::VectorXd& sorted, double tol) {
    std::vector<EigenCluster> clusters;
    int start = 0;
    const int n = static_cast<int>(sorted.size());
    for (int i = 1; i <= n; ++i) {
        if (i == n || sorted[i] - sorted[i - 1] > tol) {
            EigenCluster c;
            c.multiplicity = i - start;
            c.value = sorted.segment(start, i - start).mean();
            c.spread = sorted[i - 1] - sorted[start];
            clusters.push_back(c);
            start = i;
        }
    }
    return clusters;
}

namespace {

double asymmetry(const Eigen::MatrixXd& s) { return (s - s.transpose()).cwiseAbs().maxCoeff(); }

}  // namespace

SpectrumReport spectrum(const DegreeModel& model, const OperatorSpec& spec, double cluster_tol,
                        const CliffordSystem& sys) {
    const Eigen::MatrixXd s = model.operator_matrix(spec, sys);
    SpectrumReport report;
    report.degree = model.degree();
    report.dimension = model.dimension();
    report.cluster_tol = cluster_tol;
    report.symmetry_residual = asymmetry(s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    report.eigenvalues = cluster_eigenvalues(solver.eigenvalues(), cluster_tol);
    for (std::size_t i = 1; i < report.eigenvalues.size(); ++i)
        report.gaps.push_back(report.eigenvalues[i].value - report.eigenvalues[i - 1].value);
    return report;
}

SpectrumReport spectrum(const OperatorSpec& spec, int k, double cluster_tol, const CliffordSystem& sys) {
    return spectrum(DegreeModel(k), spec, cluster_tol, sys);
}

CheckReport verify_tensor_identity(int k) {
    CheckReport report("tensor identities k=" + std::to_string(k), 1e-12);
    const HarmonicSpace space = harmonic_basis(k);
    const int n = space.dimension();
    const RationalMatrix lap = RationalMatrix::identity(n, laplace_eigenvalue(k));
    const std::pair<Side, OperatorKind> cases[2] = {{Side::Left, OperatorKind::TrivializableSumSquares},
                                                    {Side::Right, OperatorKind::QuaternionicSublaplacian}};
    for (const auto& [side, kind] : cases) {
        const RationalMatrix s3_left = exact_operator_matrix({OperatorKind::S3LeftBlock, side}, space);
        const RationalMatrix s3_right = exact_operator_matrix({OperatorKind::S3RightBlock, side}, space);
        const RationalMatrix b = exact_operator_matrix({OperatorKind::MixedB, side}, space);
        const Rational sign = kind == OperatorKind::TrivializableSumSquares ? -2 : 2;
        const RationalMatrix rhs = lap - s3_left - s3_right + sign * b;
        const RationalMatrix lhs = exact_operator_matrix({kind, side}, space);
        const double residual = (lhs - rhs).max_abs().get_d();
        report.observe(residual);
        const std::string name = kind == OperatorKind::TrivializableSumSquares ? "T identity (left B)"
                                                                               : "Q identity (right B)";
        report.note(name + (lhs == rhs ? ": exact" : ": residual " + format_double(residual, 3)));
        if (k == 1 && !b.is_zero()) report.fail("B does not vanish on linear functions");
    }
    return report;
}

namespace {

bool clusters_equal(const std::vector<EigenCluster>& a, const std::vector<EigenCluster>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].multiplicity != b[i].multiplicity || std::abs(a[i].value - b[i].value) > tol) return false;
    return true;
}

std::string describe(const std::vector<EigenCluster>& clusters) {
    std::string s = "{";
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (i) s += ", ";
        s += format_double(clusters[i].value, 10) + " x" + std::to_string(clusters[i].multiplicity);
    }
    return s + "}";
}

// Orthonormal eigenvectors of s grouped by cluster.
struct Eigenspaces {
    std::vector<EigenCluster> clusters;
    std::vector<Eigen::MatrixXd> vectors;
};

Eigenspaces eigenspaces(const Eigen::MatrixXd& s, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    Eigenspaces out;
    out.clusters = cluster_eigenvalues(solver.eigenvalues(), tol);
    int start = 0;
    for (const auto& c : out.clusters) {
        out.vectors.push_back(solver.eigenvectors().middleCols(start, c.multiplicity));
        start += c.multiplicity;
    }
    return out;
}

}  // namespace

InclusionResult spectra_inclusion(int max_degree, double tol) {
    InclusionResult result;
    result.report = CheckReport("spectral inclusion k<=" + std::to_string(max_degree), tol);
    if (max_degree > kDefaultMaxDegree)
        throw DegreeTooLarge("spectra_inclusion: degree limit is " + std::to_string(kDefaultMaxDegree));
    const OperatorSpec q_spec{OperatorKind::QuaternionicSublaplacian};
    const OperatorSpec t_spec{OperatorKind::TrivializableSumSquares};
    for (int k = 0; k <= max_degree; ++k) {
        const DegreeModel model(k);
        const Eigen::MatrixXd sq = model.operator_matrix(q_spec);
        const Eigenspaces q = eigenspaces(sq, 1e-8);
        const SpectrumReport t = spectrum(model, t_spec, 1e-8);
        DegreeComparison cmp;
        cmp.degree = k;
        cmp.quaternionic = q.clusters;
        cmp.trivializable = t.eigenvalues;
        for (std::size_t c = 0; c < q.clusters.size(); ++c) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& tc : t.eigenvalues) best = std::min(best, std::abs(tc.value - q.clusters[c].value));
            if (best <= tol) {
                result.report.observe(best);
                continue;
            }
            const Eigen::MatrixXd coeffs = [&] {
                Eigen::MatrixXd m(model.dimension(), q.vectors[c].cols());
                for (int j = 0; j < m.cols(); ++j) m.col(j) = model.function_coefficients(q.vectors[c].col(j));
                return m;
            }();
            const double at_pole = (model.basis_values(Vec8::Unit(0)).transpose() * coeffs).squaredNorm();
            if (at_pole < 1e-12) {
                result.report.note("k=" + std::to_string(k) + ": eigenvalue " + format_double(q.clusters[c].value, 10) +
                                   " has no partner but its eigenspace vanishes at the north pole");
            } else {
                cmp.included = false;
                result.report.observe(best);
                result.report.fail("k=" + std::to_string(k) + ": eigenvalue " + format_double(q.clusters[c].value, 10) +
                                   " not in the trivializable spectrum");
            }
        }
        cmp.same_spectrum = clusters_equal(q.clusters, t.eigenvalues, tol);
        if (!cmp.same_spectrum) result.spectra_differ = true;
        result.report.note("k=" + std::to_string(k) + ": Q " + describe(q.clusters) + " in T " +
                           describe(t.eigenvalues) + (cmp.same_spectrum ? " (identical)" : " (differ)"));
        result.degrees.push_back(std::move(cmp));
    }
    result.report.note(result.spectra_differ ? "spectra differ up to degree " + std::to_string(max_degree)
                                             : "spectra agree up to degree " + std::to_string(max_degree));
    return result;
}

CheckReport eigenspace_pointwise_sum(int k, const std::vector<SpherePoint>& points, double tol) {
    CheckReport report("eigenspace pointwise sums k=" + std::to_string(k), tol);
    if (points.empty()) throw Error("eigenspace_pointwise_sum needs sample points");
    const DegreeModel model(k);
    const Eigenspaces q = eigenspaces(model.operator_matrix({OperatorKind::QuaternionicSublaplacian}), 1e-8);
    std::vector<Eigen::VectorXd> values;
    for (const auto& p : points) values.push_back(model.basis_values(p.coords()));
    const double vol = std::pow(std::numbers::pi, 4) / 3.0;
    for (std::size_t c = 0; c < q.clusters.size(); ++c) {
        Eigen::MatrixXd coeffs(model.dimension(), q.vectors[c].cols());
        for (int j = 0; j < coeffs.cols(); ++j) coeffs.col(j) = model.function_coefficients(q.vectors[c].col(j));
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        double sum = 0.0;
        for (const auto& v : values) {
            const double s = (v.transpose() * coeffs).squaredNorm();
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            sum += s;
        }
        const double mean = sum / static_cast<double>(values.size());
        const double variation = (hi - lo) / mean;
        const double mult = q.clusters[c].multiplicity;
        const double mult_error = std::abs(vol * mean - mult) / mult;
        report.observe(variation);
        report.observe(mult_error);
        report.note("eigenvalue " + format_double(q.clusters[c].value, 10) + " x" +
                    std::to_string(q.clusters[c].multiplicity) + ": relative variation " +
                    format_double(variation, 3) + ", vol*sum " + format_double(vol * mean, 12));
    }
    return report;
}

}  // namespace s7lab
