#include "z2n/linmap.hpp"

namespace z2n {

BlockDiagMap make_blockdiag(const GradedShape& src, const GradedShape& tgt,
                            std::vector<RatMat> blocks) {
    if (src.num_degrees() != tgt.num_degrees())
        throw ShapeMismatch("linear map endpoints over different ambient n");
    if (blocks.size() != src.num_degrees())
        throw ShapeMismatch("linear map needs one block per degree");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != tgt.counts[i])
            throw ShapeMismatch("block " + std::to_string(i) + " has wrong row count");
        for (const auto& row : blocks[i])
            if (row.size() != src.counts[i])
                throw ShapeMismatch("block " + std::to_string(i) + " has wrong column count");
    }
    return BlockDiagMap{src, tgt, std::move(blocks)};
}

BlockDiagMap blockdiag_identity(const GradedShape& shape) {
    std::vector<RatMat> blocks;
    for (auto c : shape.counts) blocks.push_back(rm_identity(c));
    return make_blockdiag(shape, shape, std::move(blocks));
}

BlockDiagMap blockdiag_compose(const BlockDiagMap& m, const BlockDiagMap& l) {
    if (l.tgt != m.src) throw ShapeMismatch("linear map composition shape mismatch");
    std::vector<RatMat> blocks;
    for (std::size_t i = 0; i < m.blocks.size(); ++i) {
        // Shape-aware product: empty blocks lose their dimensions as raw
        // rational matrices, so take the sizes from the endpoint shapes.
        RatMat out = rm_zero(m.tgt.counts[i], l.src.counts[i]);
        for (std::size_t r = 0; r < m.tgt.counts[i]; ++r)
            for (std::size_t t = 0; t < m.src.counts[i]; ++t) {
                if (m.blocks[i][r][t] == 0) continue;
                for (std::size_t c = 0; c < l.src.counts[i]; ++c)
                    out[r][c] += m.blocks[i][r][t] * l.blocks[i][t][c];
            }
        blocks.push_back(std::move(out));
    }
    return make_blockdiag(l.src, m.tgt, std::move(blocks));
}

} // namespace z2n
