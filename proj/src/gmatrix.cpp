#include "z2n/gmatrix.hpp"

#include <algorithm>

namespace z2n {

int GradedShape::rank_n() const {
    std::size_t m = counts.size();
    int n = 0;
    while (m > 1) {
        if (m % 2) throw ShapeMismatch("shape length must be a power of two");
        m /= 2;
        ++n;
    }
    if (n < 1) throw ShapeMismatch("shape needs at least two degree slots");
    return n;
}

std::size_t GradedShape::total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::size_t GradedShape::offset(std::size_t i) const {
    std::size_t t = 0;
    for (std::size_t k = 0; k < i; ++k) t += counts[k];
    return t;
}

std::size_t GradedShape::block_of(std::size_t flat) const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        t += counts[i];
        if (flat < t) return i;
    }
    throw ShapeMismatch("flat index out of range");
}

std::string GradedShape::to_string() const {
    std::string s = std::to_string(counts[0]) + "|";
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(counts[i]);
    }
    return s;
}

GradedShape GradedShape::from_string(const std::string& s) {
    const auto bar = s.find('|');
    if (bar == std::string::npos) throw ShapeMismatch("shape must look like p|q1,q2,...");
    std::vector<std::size_t> counts;
    auto parse_num = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw ShapeMismatch("invalid count '" + t + "' in shape");
        return static_cast<std::size_t>(std::stoull(t));
    };
    counts.push_back(parse_num(s.substr(0, bar)));
    std::string rest = s.substr(bar + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) {
            counts.push_back(parse_num(rest.substr(pos)));
            break;
        }
        counts.push_back(parse_num(rest.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    GradedShape shape(std::move(counts));
    shape.rank_n(); // validates the length
    return shape;
}

GMatrix::GMatrix(AlgebraPtr alg, GradedShape rows, GradedShape cols, Degree deg,
                 std::vector<std::vector<GElement>> entries)
    : alg_(std::move(alg)), rows_(std::move(rows)), cols_(std::move(cols)),
      deg_(std::move(deg)), entries_(std::move(entries)) {}

Degree GMatrix::required_degree(std::size_t r, std::size_t c) const {
    const auto& degs = alg_->degrees();
    return degs[rows_.block_of(r)] + degs[cols_.block_of(c)] + deg_;
}

bool GMatrix::operator==(const GMatrix& o) const {
    return alg_->same_spec(*o.alg_) && rows_ == o.rows_ && cols_ == o.cols_ &&
           deg_ == o.deg_ && entries_ == o.entries_;
}

GMatrix make_matrix(const AlgebraPtr& alg, const GradedShape& rows, const GradedShape& cols,
                    const Degree& deg, std::vector<std::vector<GElement>> entries) {
    if (rows.num_degrees() != alg->num_degrees() || cols.num_degrees() != alg->num_degrees())
        throw ShapeMismatch("shape degree count does not match the algebra");
    if (deg.n() != alg->n()) throw DegreeViolation("matrix degree has wrong ambient n");
    if (entries.size() != rows.total())
        throw ShapeMismatch("row count " + std::to_string(entries.size()) + " != " +
                            std::to_string(rows.total()));
    for (const auto& row : entries)
        if (row.size() != cols.total())
            throw ShapeMismatch("column count " + std::to_string(row.size()) + " != " +
                                std::to_string(cols.total()));
    GMatrix m(alg, rows, cols, deg, std::move(entries));
    for (std::size_t r = 0; r < m.num_rows(); ++r)
        for (std::size_t c = 0; c < m.num_cols(); ++c) {
            const GElement& e = m.entry(r, c);
            if (!e.algebra()->same_spec(*alg))
                throw AlgebraMismatch("matrix entry lives in a different algebra");
            Degree d;
            if (!e.is_homogeneous(&d) || (!e.is_zero() && d != m.required_degree(r, c)))
                throw DegreeViolation(
                    "entry (block " + std::to_string(rows.block_of(r)) + "," +
                    std::to_string(cols.block_of(c)) + "; row " + std::to_string(r) +
                    ", col " + std::to_string(c) + ") is not homogeneous of degree " +
                    m.required_degree(r, c).to_string());
        }
    return m;
}

GMatrix identity_matrix(const AlgebraPtr& alg, const GradedShape& shape) {
    const std::size_t t = shape.total();
    std::vector<std::vector<GElement>> e(t, std::vector<GElement>(t, GElement::zero(alg)));
    for (std::size_t i = 0; i < t; ++i) e[i][i] = GElement::constant(alg, 1);
    return make_matrix(alg, shape, shape, Degree::zero(alg->n()), std::move(e));
}

GMatrix zero_matrix(const AlgebraPtr& alg, const GradedShape& rows, const GradedShape& cols,
                    const Degree& deg) {
    std::vector<std::vector<GElement>> e(rows.total(),
                                         std::vector<GElement>(cols.total(), GElement::zero(alg)));
    return make_matrix(alg, rows, cols, deg, std::move(e));
}

GMatrix mat_add(const GMatrix& x, const GMatrix& y) {
    if (!x.algebra()->same_spec(*y.algebra()))
        throw AlgebraMismatch("matrix sum over different algebras");
    if (x.row_shape() != y.row_shape() || x.col_shape() != y.col_shape() ||
        x.degree() != y.degree())
        throw ShapeMismatch("matrix sum needs equal shapes and degree");
    std::vector<std::vector<GElement>> e = x.entries();
    for (std::size_t r = 0; r < x.num_rows(); ++r)
        for (std::size_t c = 0; c < x.num_cols(); ++c) e[r][c] = e[r][c] + y.entry(r, c);
    return make_matrix(x.algebra(), x.row_shape(), x.col_shape(), x.degree(), std::move(e));
}

GMatrix mat_sub(const GMatrix& x, const GMatrix& y) {
    if (!x.algebra()->same_spec(*y.algebra()))
        throw AlgebraMismatch("matrix difference over different algebras");
    if (x.row_shape() != y.row_shape() || x.col_shape() != y.col_shape() ||
        x.degree() != y.degree())
        throw ShapeMismatch("matrix difference needs equal shapes and degree");
    std::vector<std::vector<GElement>> e = x.entries();
    for (std::size_t r = 0; r < x.num_rows(); ++r)
        for (std::size_t c = 0; c < x.num_cols(); ++c) e[r][c] = e[r][c] - y.entry(r, c);
    return make_matrix(x.algebra(), x.row_shape(), x.col_shape(), x.degree(), std::move(e));
}

GMatrix mat_mul(const GMatrix& x, const GMatrix& y) {
    if (!x.algebra()->same_spec(*y.algebra()))
        throw AlgebraMismatch("matrix product over different algebras");
    if (x.col_shape() != y.row_shape())
        throw ShapeMismatch("matrix product inner shapes differ");
    const AlgebraPtr& alg = x.algebra();
    const std::size_t r = x.num_rows(), k = x.num_cols(), c = y.num_cols();
    std::vector<std::vector<GElement>> e(r, std::vector<GElement>(c, GElement::zero(alg)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (x.entry(i, t).is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) {
                if (y.entry(t, j).is_zero()) continue;
                e[i][j] = e[i][j] + gmul(x.entry(i, t), y.entry(t, j));
            }
        }
    return make_matrix(alg, x.row_shape(), y.col_shape(), x.degree() + y.degree(), std::move(e));
}

GMatrix scalar_mul(const GElement& lam, const GMatrix& x) {
    if (!lam.algebra()->same_spec(*x.algebra()))
        throw AlgebraMismatch("scalar action over a different algebra");
    Degree g;
    if (!lam.is_homogeneous(&g))
        throw DegreeViolation("scalar action requires a homogeneous scalar");
    const auto& degs = x.algebra()->degrees();
    std::vector<std::vector<GElement>> e = x.entries();
    for (std::size_t r = 0; r < x.num_rows(); ++r) {
        const int sign = koszul_sign(g, degs[x.row_shape().block_of(r)]);
        const GElement f = sign > 0 ? lam : (-lam);
        for (std::size_t c = 0; c < x.num_cols(); ++c) e[r][c] = gmul(f, e[r][c]);
    }
    return make_matrix(x.algebra(), x.row_shape(), x.col_shape(), g + x.degree(), std::move(e));
}

static void require_square_degree0(const GMatrix& x, const char* what) {
    if (!x.is_square()) throw ShapeMismatch(std::string(what) + " requires a square matrix");
    if (!x.degree().is_zero())
        throw DegreeViolation(std::string(what) + " requires a degree-0 matrix");
}

RatMat epsilon_tilde(const GMatrix& x) {
    require_square_degree0(x, "epsilon_tilde");
    const std::size_t t = x.num_rows();
    RatMat m = rm_zero(t, t);
    const GradedShape& shape = x.row_shape();
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c)
            if (shape.block_of(r) == shape.block_of(c)) m[r][c] = x.entry(r, c).body();
    return m;
}

using Grid = std::vector<std::vector<GElement>>;

static Grid grid_slice(const Grid& e, std::size_t r0, std::size_t r1, std::size_t c0,
                       std::size_t c1) {
    Grid out;
    out.reserve(r1 - r0);
    for (std::size_t r = r0; r < r1; ++r)
        out.emplace_back(e[r].begin() + c0, e[r].begin() + c1);
    return out;
}

static Grid grid_mul(const AlgebraPtr& alg, const Grid& a, const Grid& b) {
    const std::size_t r = a.size();
    const std::size_t k = a.empty() ? 0 : a[0].size();
    const std::size_t c = b.empty() ? 0 : (b[0].size());
    Grid out(r, std::vector<GElement>(c, GElement::zero(alg)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] = out[i][j] + gmul(a[i][t], b[t][j]);
            }
        }
    return out;
}

static Grid grid_sub(const Grid& a, const Grid& b) {
    Grid out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] - b[i][j];
    return out;
}

static Grid grid_neg(const Grid& a) {
    Grid out = a;
    for (auto& row : out)
        for (auto& e : row) e = -e;
    return out;
}

// Determinant of a matrix with pairwise commuting entries (all of degree 0),
// by cofactor expansion along the first row.
static GElement commutative_det(const AlgebraPtr& alg, const Grid& m) {
    const std::size_t k = m.size();
    if (k == 0) return GElement::constant(alg, 1);
    if (k == 1) return m[0][0];
    GElement det = GElement::zero(alg);
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        Grid minor;
        minor.reserve(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<GElement> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        GElement cof = gmul(m[0][j], commutative_det(alg, minor));
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

// Inverse of a single graded block: its entries all have degree 0, hence lie
// in the commutative subring Lambda_0, so the adjugate route applies.
static Grid block_invert(const AlgebraPtr& alg, const Grid& m) {
    const std::size_t k = m.size();
    if (k == 0) return m;
    const GElement det = commutative_det(alg, m);
    GElement dinv = GElement::zero(alg);
    try {
        dinv = g_invert(det);
    } catch (const NonInvertible&) {
        throw NotInvertible("diagonal block has non-invertible determinant");
    }
    Grid inv(k, std::vector<GElement>(k, GElement::zero(alg)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Grid minor;
            minor.reserve(k - 1);
            for (std::size_t r = 0; r < k; ++r) {
                if (r == i) continue;
                std::vector<GElement> row;
                row.reserve(k - 1);
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            GElement cof = commutative_det(alg, minor);
            if ((i + j) % 2) cof = -cof;
            inv[j][i] = gmul(dinv, cof); // adjugate = transposed cofactors
        }
    return inv;
}

// Recursive block inversion: split off the leading graded block A, recurse on
// the trailing grid D, and assemble the inverse from the two Schur
// complements. `spans` lists the nonempty graded blocks as index ranges of
// the grid.
static Grid grid_invert(const AlgebraPtr& alg, const Grid& m,
                        const std::vector<std::pair<std::size_t, std::size_t>>& spans) {
    if (spans.empty()) return Grid{};
    if (spans.size() == 1) return block_invert(alg, m);
    const std::size_t mid = spans[0].second - spans[0].first;
    const std::size_t tot = m.size();
    // Trailing spans, renumbered to start at 0 within D.
    std::vector<std::pair<std::size_t, std::size_t>> shifted;
    shifted.reserve(spans.size() - 1);
    const std::size_t base = spans[1].first;
    for (std::size_t s = 1; s < spans.size(); ++s)
        shifted.emplace_back(spans[s].first - base, spans[s].second - base);
    const Grid A = grid_slice(m, 0, mid, 0, mid);
    const Grid B = grid_slice(m, 0, mid, mid, tot);
    const Grid C = grid_slice(m, mid, tot, 0, mid);
    const Grid D = grid_slice(m, mid, tot, mid, tot);

    const Grid Ainv = block_invert(alg, A);
    const Grid Dinv = grid_invert(alg, D, shifted);

    const Grid SA = grid_sub(A, grid_mul(alg, B, grid_mul(alg, Dinv, C)));
    const Grid SD = grid_sub(D, grid_mul(alg, C, grid_mul(alg, Ainv, B)));
    const Grid SAinv = block_invert(alg, SA);
    const Grid SDinv = grid_invert(alg, SD, shifted);

    const Grid TR = grid_neg(grid_mul(alg, grid_mul(alg, Ainv, B), SDinv));
    const Grid BL = grid_neg(grid_mul(alg, grid_mul(alg, Dinv, C), SAinv));

    Grid out(tot, std::vector<GElement>(tot, GElement::zero(alg)));
    for (std::size_t i = 0; i < mid; ++i) {
        for (std::size_t j = 0; j < mid; ++j) out[i][j] = SAinv[i][j];
        for (std::size_t j = mid; j < tot; ++j) out[i][j] = TR[i][j - mid];
    }
    for (std::size_t i = mid; i < tot; ++i) {
        for (std::size_t j = 0; j < mid; ++j) out[i][j] = BL[i - mid][j];
        for (std::size_t j = mid; j < tot; ++j) out[i][j] = SDinv[i - mid][j - mid];
    }
    return out;
}

InvertibilityCriteria invertibility_criteria(const GMatrix& x) {
    require_square_degree0(x, "invertibility");
    const GradedShape& shape = x.row_shape();
    InvertibilityCriteria crit{true, true, true};
    const AlgebraPtr& alg = x.algebra();
    for (std::size_t i = 0; i < shape.num_degrees(); ++i) {
        const std::size_t lo = shape.offset(i);
        const std::size_t hi = lo + shape.counts[i];
        if (lo == hi) continue;
        const Grid block = grid_slice(x.entries(), lo, hi, lo, hi);
        RatMat body = rm_zero(hi - lo, hi - lo);
        for (std::size_t r = 0; r < hi - lo; ++r)
            for (std::size_t c = 0; c < hi - lo; ++c) body[r][c] = block[r][c].body();
        if (!rm_is_invertible(body)) crit.diagonal_body_blocks = false;
        if (commutative_det(alg, block).body() == 0) crit.diagonal_blocks_lambda = false;
    }
    crit.full_body_matrix = rm_is_invertible(epsilon_tilde(x));
    return crit;
}

bool is_invertible(const GMatrix& x) {
    return invertibility_criteria(x).diagonal_body_blocks;
}

static std::vector<std::pair<std::size_t, std::size_t>> nonempty_spans(const GradedShape& s) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    for (std::size_t i = 0; i < s.num_degrees(); ++i) {
        const std::size_t lo = s.offset(i);
        const std::size_t hi = lo + s.counts[i];
        if (lo != hi) spans.emplace_back(lo, hi);
    }
    return spans;
}

GMatrix invert(const GMatrix& x) {
    require_square_degree0(x, "invert");
    if (!is_invertible(x)) throw NotInvertible("a diagonal block has singular body");
    Grid inv = grid_invert(x.algebra(), x.entries(), nonempty_spans(x.row_shape()));
    return make_matrix(x.algebra(), x.row_shape(), x.col_shape(), x.degree(), std::move(inv));
}

GMatrix invert_neumann(const GMatrix& x) {
    require_square_degree0(x, "invert_neumann");
    if (!is_invertible(x)) throw NotInvertible("a diagonal block has singular body");
    const AlgebraPtr& alg = x.algebra();
    const GradedShape& shape = x.row_shape();
    const std::size_t t = shape.total();

    RatMat body = epsilon_tilde(x);
    // Blockwise rational inverse of the lifted body matrix.
    RatMat binv = rm_zero(t, t);
    for (std::size_t i = 0; i < shape.num_degrees(); ++i) {
        const std::size_t lo = shape.offset(i);
        const std::size_t k = shape.counts[i];
        if (k == 0) continue;
        RatMat blk = rm_zero(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) blk[r][c] = body[lo + r][lo + c];
        RatMat bi = rm_inverse(std::move(blk));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) binv[lo + r][lo + c] = bi[r][c];
    }
    auto lift = [&](const RatMat& m) {
        std::vector<std::vector<GElement>> e(t, std::vector<GElement>(t, GElement::zero(alg)));
        for (std::size_t r = 0; r < t; ++r)
            for (std::size_t c = 0; c < t; ++c)
                if (m[r][c] != 0) e[r][c] = GElement::constant(alg, m[r][c]);
        return make_matrix(alg, shape, shape, Degree::zero(alg->n()), std::move(e));
    };
    const GMatrix B = lift(body);
    const GMatrix Binv = lift(binv);
    const GMatrix S = mat_sub(x, B);
    // M = -B^{-1} S is soul-valued, hence nilpotent in the truncation.
    GMatrix M = mat_mul(Binv, S);
    {
        std::vector<std::vector<GElement>> e = M.entries();
        for (auto& row : e)
            for (auto& v : row) v = -v;
        M = make_matrix(alg, shape, shape, Degree::zero(alg->n()), std::move(e));
    }
    GMatrix acc = identity_matrix(alg, shape);
    GMatrix term = identity_matrix(alg, shape);
    for (unsigned k = 1; k <= alg->cap(); ++k) {
        term = mat_mul(term, M);
        acc = mat_add(acc, term);
    }
    return mat_mul(acc, Binv);
}

GradedShape gl0_dimension(const GradedShape& row_shape, const GradedShape& col_shape) {
    if (row_shape.num_degrees() != col_shape.num_degrees())
        throw ShapeMismatch("gl0_dimension shapes over different ambient n");
    const std::size_t nd = row_shape.num_degrees();
    const int n = row_shape.rank_n();
    const std::vector<Degree> degs = enumerate_degrees(n);
    std::vector<std::size_t> u(nd, 0);
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = 0; j < nd; ++j)
            u[(degs[i] + degs[j]).index()] += row_shape.counts[i] * col_shape.counts[j];
    return GradedShape(std::move(u));
}

} // namespace z2n
