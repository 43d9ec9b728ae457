#include "s7lab/operators.hpp"

namespace s7lab {

namespace {

constexpr Unit kUnits[3] = {Unit::I, Unit::J, Unit::K};

void add_square(std::vector<FieldProduct>& out, int coefficient, const Mat8i& m) {
    out.push_back({coefficient, m, m});
}

}  // namespace

std::vector<FieldProduct> field_expansion(const OperatorSpec& spec, const CliffordSystem& sys) {
    std::vector<FieldProduct> out;
    switch (spec.kind) {
        case OperatorKind::SphereLaplacian:
            for (const auto& a : sys.generators) add_square(out, -1, a);
            break;
        case OperatorKind::TrivializableSumSquares:
        case OperatorKind::TrivializableIntrinsic:
            for (int i = 0; i < 4; ++i) add_square(out, -1, sys.generators[i]);
            break;
        case OperatorKind::QuaternionicSublaplacian:
            for (const auto& a : sys.generators) add_square(out, -1, a);
            for (const auto& v : sys.vertical) add_square(out, 1, v);
            break;
        case OperatorKind::S3LeftBlock:
            for (Unit u : kUnits) add_square(out, -1, s3_block_generator(Block::First, u, spec.side));
            break;
        case OperatorKind::S3RightBlock:
            for (Unit u : kUnits) add_square(out, -1, s3_block_generator(Block::Second, u, spec.side));
            break;
        case OperatorKind::MixedB:
            for (Unit u : kUnits)
                out.push_back({1, s3_block_generator(Block::First, u, spec.side),
                               s3_block_generator(Block::Second, u, spec.side)});
            break;
    }
    return out;
}

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::SphereLaplacian: return "SphereLaplacian";
        case OperatorKind::TrivializableSumSquares: return "TrivializableSumSquares";
        case OperatorKind::TrivializableIntrinsic: return "TrivializableIntrinsic";
        case OperatorKind::QuaternionicSublaplacian: return "QuaternionicSublaplacian";
        case OperatorKind::S3LeftBlock: return "S3LeftBlock";
        case OperatorKind::S3RightBlock: return "S3RightBlock";
        case OperatorKind::MixedB: return "MixedB";
    }
    return "unknown";
}

std::optional<OperatorKind> parse_operator_kind(const std::string& name) {
    for (OperatorKind k : {OperatorKind::SphereLaplacian, OperatorKind::TrivializableSumSquares,
                           OperatorKind::TrivializableIntrinsic, OperatorKind::QuaternionicSublaplacian,
                           OperatorKind::S3LeftBlock, OperatorKind::S3RightBlock, OperatorKind::MixedB})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

}  // namespace s7lab
