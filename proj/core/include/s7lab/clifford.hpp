#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "s7lab/check_report.hpp"
#include "s7lab/quaternion.hpp"
#include "s7lab/types.hpp"

namespace s7lab {

// 8x8 integer matrix, expected skew with entries in {-1,0,1}. Not enforced at
// construction so that negative controls (e.g. the identity) can be expressed;
// use is_skew / is_signed_permutation to validate.
using SkewMatrix8 = Mat8i;

bool is_skew(const Mat8i& m);
bool is_signed_permutation(const Mat8i& m);
bool is_signed_permutation(const Mat4i& m);

struct CliffordSystem {
    std::array<SkewMatrix8, 7> generators;  // A_1..A_7
    std::array<Mat4i, 3> blocks;            // B_1..B_3
    std::array<SkewMatrix8, 3> vertical;    // V_i, V_j, V_k
};

// Same data after a real orthogonal change of basis.
struct RealCliffordSystem {
    std::array<Mat8, 7> generators;
    std::array<Mat8, 3> vertical;
};

// The seven generators as real matrices, in order A_1..A_7.
using Frame = std::array<Mat8, 7>;

enum class Side { Left, Right };
enum class Block { First, Second };

Mat8i block_diag(const Mat4i& top, const Mat4i& bottom);
Mat8i block_antidiag(const Mat4i& top_right, const Mat4i& bottom_left);

// B_1 = R_k, B_2 = R_j, B_3 = R_{-i}.
Mat4i printed_block(int index);

CliffordSystem build_canonical_system();
const CliffordSystem& canonical_system();
const Frame& canonical_frame();

RealCliffordSystem to_real(const CliffordSystem& sys);
Frame frame_of(const CliffordSystem& sys);
Frame frame_of(const RealCliffordSystem& sys);

// Multiplication by a unit on one quaternion block, zero on the other.
Mat8i s3_block_generator(Block block, Unit u, Side side);

CheckReport verify_anticommutation(const CliffordSystem& sys);
CheckReport verify_anticommutation(const RealCliffordSystem& sys, double tol = 1e-12);

// Returns {C^T A C}. Throws NonOrthogonal unless C^T C = Id (exactly for the
// integer overload, within tol otherwise).
CliffordSystem conjugate_system(const CliffordSystem& sys, const Mat8i& c);
RealCliffordSystem conjugate_system(const CliffordSystem& sys, const Mat8& c, double tol = 1e-12);

// Blockwise conj(p0) q0 + conj(p1) q1.
Quaternion quaternionic_pairing(const Vec8& p, const Vec8& q);

// The 4x4 map C(x) and U(x) = [[0, C], [C B_1, 0]] of the isometry example.
Mat4 isometry_matrix_c(const Vec4& x);
Mat8 isometry_matrix_u(const Vec4& x);
Mat4i isometry_matrix_c(const Eigen::Vector4i& x);
Mat8i isometry_matrix_u(const Eigen::Vector4i& x);

CheckReport check_isometry_example(const Eigen::Vector4i& x);
CheckReport check_isometry_example(const Vec4& x, double tol = 1e-12);
// Exact checks at the eight signed unit points plus random_points seeded
// samples of S^3 checked within 1e-12.
CheckReport check_isometry_example(std::uint64_t seed = 42, int random_points = 100);

}  // namespace s7lab
