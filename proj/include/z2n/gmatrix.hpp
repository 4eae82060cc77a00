#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "z2n/grassmann.hpp"
#include "z2n/realmat.hpp"

namespace z2n {

// Dimension data of a graded Cartesian space R^{p|q_1,...,q_N}:
// counts[i] is the number of coordinates of the degree with enumeration
// index i (counts[0] = p).
struct GradedShape {
    std::vector<std::size_t> counts;

    GradedShape() = default;
    explicit GradedShape(std::vector<std::size_t> c) : counts(std::move(c)) {}

    // Ambient rank: counts.size() must be 2^n.
    int rank_n() const;
    std::size_t num_degrees() const { return counts.size(); }
    std::size_t total() const;
    // First flat index of block i.
    std::size_t offset(std::size_t i) const;
    // Block index of a flat coordinate index.
    std::size_t block_of(std::size_t flat) const;

    bool operator==(const GradedShape& o) const { return counts == o.counts; }
    bool operator!=(const GradedShape& o) const { return counts != o.counts; }

    // "p|q1,q2,..." form.
    std::string to_string() const;
    static GradedShape from_string(const std::string& s);
};

// A block matrix over a Grassmann algebra, homogeneous of one degree x:
// every entry in block (i,j) is homogeneous of degree gamma_i + gamma_j + x.
// Entries are stored as a flat grid; the block structure is derived from
// the shapes.
class GMatrix {
public:
    GMatrix(AlgebraPtr alg, GradedShape rows, GradedShape cols, Degree deg,
            std::vector<std::vector<GElement>> entries);

    const AlgebraPtr& algebra() const { return alg_; }
    const GradedShape& row_shape() const { return rows_; }
    const GradedShape& col_shape() const { return cols_; }
    const Degree& degree() const { return deg_; }
    std::size_t num_rows() const { return entries_.size(); }
    std::size_t num_cols() const { return entries_.empty() ? 0 : entries_[0].size(); }
    const GElement& entry(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    const std::vector<std::vector<GElement>>& entries() const { return entries_; }

    bool is_square() const { return rows_ == cols_; }
    Degree required_degree(std::size_t r, std::size_t c) const;

    bool operator==(const GMatrix& o) const;
    bool operator!=(const GMatrix& o) const { return !(*this == o); }

private:
    AlgebraPtr alg_;
    GradedShape rows_, cols_;
    Degree deg_;
    std::vector<std::vector<GElement>> entries_;
};

// Validating constructor: checks shapes and entrywise homogeneity.
GMatrix make_matrix(const AlgebraPtr& alg, const GradedShape& rows, const GradedShape& cols,
                    const Degree& deg, std::vector<std::vector<GElement>> entries);

GMatrix identity_matrix(const AlgebraPtr& alg, const GradedShape& shape);
GMatrix zero_matrix(const AlgebraPtr& alg, const GradedShape& rows, const GradedShape& cols,
                    const Degree& deg);

GMatrix mat_add(const GMatrix& x, const GMatrix& y);
GMatrix mat_sub(const GMatrix& x, const GMatrix& y);
GMatrix mat_mul(const GMatrix& x, const GMatrix& y);

// Left scalar action by a homogeneous element of degree g: block row i is
// scaled by koszul_sign(g, gamma_i) * lam. The result has degree g + deg X.
GMatrix scalar_mul(const GElement& lam, const GMatrix& x);

// Entrywise body on the diagonal blocks of a square degree-0 matrix;
// off-diagonal blocks vanish (their entries have nonzero degree).
RatMat epsilon_tilde(const GMatrix& x);

// The three equivalent invertibility criteria for square degree-0 matrices.
struct InvertibilityCriteria {
    bool diagonal_body_blocks;   // det of body of each diagonal block != 0
    bool diagonal_blocks_lambda; // each diagonal block invertible over Lambda
    bool full_body_matrix;       // the full body matrix invertible over Q
};

InvertibilityCriteria invertibility_criteria(const GMatrix& x);
bool is_invertible(const GMatrix& x);

// Exact inverse via recursive 2x2 block splitting (leading block split) with
// adjugate base case over the commutative ring of degree-0 entries.
GMatrix invert(const GMatrix& x);

// Independent oracle: X = B + S with B the lifted body matrix, then
// (I + B^{-1}S)^{-1} B^{-1} as a finite Neumann sum.
GMatrix invert_neumann(const GMatrix& x);

// Dimension of the space of degree-0 block matrices between the two shapes:
// u_d = sum of s_i * q_j over pairs with gamma_i + gamma_j = gamma_d.
GradedShape gl0_dimension(const GradedShape& row_shape, const GradedShape& col_shape);

} // namespace z2n
