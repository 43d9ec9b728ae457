#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "s7lab/check_report.hpp"
#include "s7lab/operators.hpp"
#include "s7lab/polynomial.hpp"
#include "s7lab/rational_matrix.hpp"
#include "s7lab/sr_structure.hpp"

namespace s7lab {

constexpr int kDefaultMaxDegree = 5;

// C(k+7, 7) - C(k+5, 7)
std::size_t harmonic_dimension(int k);

// Exact basis of degree-k harmonic polynomials in 8 variables. Basis element a
// is the unique harmonic polynomial whose part of x_1-degree <= 1 is the single
// monomial leading[a]; coordinates of a harmonic polynomial are therefore its
// coefficients at those monomials. Ordered with x_1 first (descending lex), so
// degree 1 gives x_1..x_8.
struct HarmonicSpace {
    int degree = 0;
    std::vector<Polynomial8> basis;
    std::vector<Exponent> leading;
    std::map<Exponent, int> index;

    int dimension() const { return static_cast<int>(basis.size()); }
    std::vector<Rational> coordinates(const Polynomial8& p) const;
};

// Throws DegreeTooLarge for k > max_degree and Error for k < 0.
HarmonicSpace harmonic_basis(int k, int max_degree = kDefaultMaxDegree);

// Matrix of X(M) = sum M_ij x_j d_i on the space: column a holds the
// coordinates of X(M) basis[a]. At degree 1 this is M^T.
RationalMatrix field_action_matrix(const Mat8i& m, const HarmonicSpace& space);

// Operator in basis coordinates. SphereLaplacian is the scalar k(k+6).
// Throws UnsupportedOperator for TrivializableIntrinsic.
RationalMatrix exact_operator_matrix(const OperatorSpec& spec, const HarmonicSpace& space,
                                     const CliffordSystem& sys = canonical_system());

// -sum_{i<j} X(E_ij)^2 over the 28 elementary rotations.
RationalMatrix so8_casimir_matrix(const HarmonicSpace& space);

// sum_alpha alpha! p_alpha q_alpha on basis pairs.
RationalMatrix fischer_gram(const HarmonicSpace& space);
// L^2(S^7) Gram matrix divided by pi^4; proportional to the Fischer Gram on H_k.
RationalMatrix l2_gram_over_pi4(const HarmonicSpace& space);

// int_{S^7} x^alpha dsigma / pi^4 from the Gamma-function closed form.
Rational sphere_moment_over_pi4(const Exponent& alpha);
// int_{S^7} p q dsigma / pi^4 through sphere moments.
Rational l2_product_over_pi4(const Polynomial8& p, const Polynomial8& q);

// Basis, Gram matrix and its Cholesky factor for one degree.
class DegreeModel {
public:
    explicit DegreeModel(int k, int max_degree = kDefaultMaxDegree);

    int degree() const { return space_.degree; }
    int dimension() const { return space_.dimension(); }
    const HarmonicSpace& space() const { return space_; }
    const RationalMatrix& gram_over_pi4() const { return gram_; }

    // L^{-1} (G M) L^{-T} with G = L L^T: the matrix of M in an
    // L^2-orthonormal basis. Symmetric for self-adjoint M, antisymmetric for
    // Killing fields.
    Eigen::MatrixXd orthonormalize(const RationalMatrix& m) const;
    Eigen::MatrixXd operator_matrix(const OperatorSpec& spec, const CliffordSystem& sys = canonical_system()) const;

    // Basis coefficients of the function with orthonormal coordinates v
    // (unit L^2 norm when |v| = 1).
    Eigen::VectorXd function_coefficients(const Eigen::VectorXd& v) const;
    // Values of the basis polynomials at z.
    Eigen::VectorXd basis_values(const Vec8& z) const;

private:
    HarmonicSpace space_;
    RationalMatrix gram_;
    VectorXld scale_;     // diag(G)^{-1/2}
    MatrixXld chol_;         // lower factor of the diagonally scaled Gram
};

Eigen::MatrixXd operator_matrix(const OperatorSpec& spec, int k, const CliffordSystem& sys = canonical_system());

struct EigenCluster {
    double value = 0.0;
    int multiplicity = 0;
    double spread = 0.0;  // max - min inside the cluster
};

struct SpectrumReport {
    int degree = 0;
    int dimension = 0;
    std::vector<EigenCluster> eigenvalues;
    double cluster_tol = 1e-8;
    std::vector<double> gaps;  // distances between consecutive clusters
    double symmetry_residual = 0.0;
};

// Groups sorted values; a new cluster starts when the gap to the previous
// value exceeds tol.
std::vector<EigenCluster> cluster_eigenvalues(const Eigen::VectorXd& sorted, double tol);

SpectrumReport spectrum(const OperatorSpec& spec, int k, double cluster_tol = 1e-8,
                        const CliffordSystem& sys = canonical_system());
SpectrumReport spectrum(const DegreeModel& model, const OperatorSpec& spec, double cluster_tol = 1e-8,
                        const CliffordSystem& sys = canonical_system());

// Delta_T = Delta_S7 - Delta_S3 x I - I x Delta_S3 - 2B (B from left
// multiplication) and Delta_Q = Delta_S7 - Delta_S3 x I - I x Delta_S3 + 2B
// (B from right multiplication), checked exactly on H_k.
CheckReport verify_tensor_identity(int k);

struct DegreeComparison {
    int degree = 0;
    std::vector<EigenCluster> quaternionic;
    std::vector<EigenCluster> trivializable;
    bool included = true;
    bool same_spectrum = false;
};

struct InclusionResult {
    CheckReport report;
    bool spectra_differ = false;
    std::vector<DegreeComparison> degrees;
};

// Per-degree inclusion of the Q spectrum in the T spectrum. A Q eigenvalue
// without a T partner is reported separately when its eigenspace vanishes at
// the north pole, and does not fail the check in that case.
InclusionResult spectra_inclusion(int max_degree, double tol = 1e-8);

// For each eigenvalue cluster of the quaternionic sublaplacian on H_k:
// sum_j psi_j(x)^2 over an orthonormal eigenbasis is constant on the points and
// equals multiplicity / vol(S^7).
CheckReport eigenspace_pointwise_sum(int k, const std::vector<SpherePoint>& points, double tol = 1e-6);

}  // namespace s7lab
