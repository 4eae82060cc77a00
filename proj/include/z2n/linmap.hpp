#pragma once

#include "z2n/gmatrix.hpp"
#include "z2n/realmat.hpp"

namespace z2n {

// A degree-0 linear map between graded Cartesian spaces, canonically a
// block-diagonal family of real matrices: one s_i x q_i block per degree.
struct BlockDiagMap {
    GradedShape src; // p|q
    GradedShape tgt; // r|s
    std::vector<RatMat> blocks;

    bool operator==(const BlockDiagMap& o) const {
        return src == o.src && tgt == o.tgt && blocks == o.blocks;
    }
};

BlockDiagMap make_blockdiag(const GradedShape& src, const GradedShape& tgt,
                            std::vector<RatMat> blocks);
BlockDiagMap blockdiag_identity(const GradedShape& shape);
// Blockwise matrix product (m after l).
BlockDiagMap blockdiag_compose(const BlockDiagMap& m, const BlockDiagMap& l);

} // namespace z2n
