#pragma once

#include <optional>
#include <string>
#include <vector>

#include "s7lab/clifford.hpp"

namespace s7lab {

enum class OperatorKind {
    SphereLaplacian,
    TrivializableSumSquares,
    TrivializableIntrinsic,
    QuaternionicSublaplacian,
    S3LeftBlock,
    S3RightBlock,
    MixedB,
};

// side selects left or right quaternion multiplication for the block fields of
// S3LeftBlock, S3RightBlock and MixedB; the other kinds ignore it.
struct OperatorSpec {
    OperatorKind kind = OperatorKind::TrivializableSumSquares;
    Side side = Side::Right;
};

// coefficient * X(first) X(second)
struct FieldProduct {
    int coefficient = 0;
    Mat8i first;
    Mat8i second;
};

// Second-order part written as a sum of products of linear fields. For
// SphereLaplacian this is -sum_j X(A_j)^2, which equals the Laplace-Beltrami
// operator on restrictions to S^7. TrivializableIntrinsic returns its
// sum-of-squares part; the drift is handled separately.
std::vector<FieldProduct> field_expansion(const OperatorSpec& spec,
                                          const CliffordSystem& sys = canonical_system());

std::string to_string(OperatorKind kind);
std::optional<OperatorKind> parse_operator_kind(const std::string& name);

}  // namespace s7lab
