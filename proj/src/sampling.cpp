#include "z2n/sampling.hpp"

#include <algorithm>

namespace z2n {

long Sampler::rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::small_rational() {
    const long num = rand_int(-4, 4);
    const long den = rand_int(1, 3);
    return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
    while (true) {
        Rational r = small_rational();
        if (r != 0) return r;
    }
}

GElement Sampler::element(const AlgebraPtr& alg) {
    GElement e = GElement::zero(alg);
    for (const auto& m : enumerate_monomials(*alg))
        if (coin(0.35)) e.add_term(m, small_rational());
    return e;
}

GElement Sampler::homogeneous(const AlgebraPtr& alg, const Degree& d) {
    GElement e = GElement::zero(alg);
    for (const auto& m : enumerate_monomials(*alg))
        if (e.monomial_degree(m) == d && coin(0.5)) e.add_term(m, small_rational());
    return e;
}

GElement Sampler::degree0(const AlgebraPtr& alg) {
    return homogeneous(alg, Degree::from_index(alg->n(), 0));
}

GElement Sampler::invertible_scalar(const AlgebraPtr& alg) {
    GElement e = degree0(alg).soul();
    e.add_term(Monomial(alg->num_gens(), 0), nonzero_rational());
    return e;
}

GMatrix Sampler::matrix(const AlgebraPtr& alg, const GradedShape& rows,
                        const GradedShape& cols, const Degree& deg) {
    std::vector<std::vector<GElement>> entries;
    for (std::size_t r = 0; r < rows.total(); ++r) {
        std::vector<GElement> row;
        for (std::size_t c = 0; c < cols.total(); ++c) {
            const Degree d = alg->degree(rows.block_of(r)) + alg->degree(cols.block_of(c)) + deg;
            row.push_back(homogeneous(alg, d));
        }
        entries.push_back(std::move(row));
    }
    return make_matrix(alg, rows, cols, deg, std::move(entries));
}

GMatrix Sampler::invertible_matrix(const AlgebraPtr& alg, const GradedShape& shape) {
    const Degree zero = Degree::from_index(alg->n(), 0);
    GMatrix x = matrix(alg, shape, shape, zero);
    auto entries = x.entries();
    // Patch each diagonal block's body to a random invertible rational matrix.
    for (std::size_t i = 0; i < shape.num_degrees(); ++i) {
        const std::size_t q = shape.counts[i];
        if (q == 0) continue;
        RatMat b;
        do {
            b = rm_zero(q, q);
            for (std::size_t r = 0; r < q; ++r)
                for (std::size_t c = 0; c < q; ++c) b[r][c] = small_rational();
        } while (!rm_is_invertible(b));
        const std::size_t off = shape.offset(i);
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < q; ++c) {
                GElement e = entries[off + r][off + c].soul();
                e.add_term(Monomial(alg->num_gens(), 0), b[r][c]);
                entries[off + r][off + c] = e;
            }
    }
    return make_matrix(alg, shape, shape, zero, std::move(entries));
}

LambdaPoint Sampler::point(const AlgebraPtr& alg, const GradedShape& shape) {
    std::vector<GElement> comps;
    for (std::size_t c = 0; c < shape.total(); ++c)
        comps.push_back(homogeneous(alg, alg->degree(shape.block_of(c))));
    return make_point(alg, shape, std::move(comps));
}

GradedShape Sampler::shape(int n, std::size_t max_per_degree) {
    std::vector<std::size_t> counts;
    const std::size_t nd = std::size_t(1) << n;
    for (std::size_t i = 0; i < nd; ++i)
        counts.push_back(static_cast<std::size_t>(rand_int(0, static_cast<long>(max_per_degree))));
    if (GradedShape(counts).total() == 0) counts[rand_int(0, static_cast<long>(nd - 1))] = 1;
    return GradedShape(std::move(counts));
}

AlgebraPtr Sampler::algebra(int n, unsigned max_cap, std::size_t max_gens) {
    const std::size_t nz = (std::size_t(1) << n) - 1;
    std::vector<std::size_t> counts(nz);
    std::size_t total = 0;
    for (auto& c : counts) {
        c = static_cast<std::size_t>(rand_int(0, static_cast<long>(max_gens)));
        total += c;
    }
    if (total == 0) counts[rand_int(0, static_cast<long>(nz - 1))] = 1;
    const unsigned cap = static_cast<unsigned>(rand_int(2, max_cap));
    return make_algebra(n, std::move(counts), cap);
}

AlgebraMorphism Sampler::algebra_morphism(const AlgebraPtr& src, const AlgebraPtr& tgt) {
    std::vector<GElement> images;
    for (std::size_t g = 0; g < src->num_gens(); ++g)
        images.push_back(homogeneous(tgt, src->gen_degree(g)));
    return AlgebraMorphism(src, tgt, std::move(images));
}

BlockDiagMap Sampler::blockdiag(const GradedShape& src, const GradedShape& tgt) {
    std::vector<RatMat> blocks;
    for (std::size_t i = 0; i < src.num_degrees(); ++i) {
        RatMat b = rm_zero(tgt.counts[i], src.counts[i]);
        for (auto& row : b)
            for (auto& v : row) v = small_rational();
        blocks.push_back(std::move(b));
    }
    return make_blockdiag(src, tgt, std::move(blocks));
}

namespace {

// All exponent vectors over the formal coordinates with per-coordinate
// exponent <= 2 (<= 1 on odd self-pairing coordinates) and bounded total.
void enum_ximonos(const FormalFrame& f, std::size_t coord, std::uint32_t budget, XiMono& cur,
                  std::vector<XiMono>& out) {
    if (coord == f.num_formal()) {
        out.push_back(cur);
        return;
    }
    const std::uint32_t top = f.odd[coord] ? 1u : 2u;
    for (std::uint32_t e = 0; e <= std::min(top, budget); ++e) {
        cur[coord] = e;
        enum_ximonos(f, coord + 1, budget - e, cur, out);
    }
    cur[coord] = 0;
}

} // namespace

Morphism Sampler::morphism(const GradedShape& src, const GradedShape& tgt, unsigned cap) {
    const FormalFrame frame = make_frame(src);
    const std::size_t p = src.counts[0];
    std::vector<XiMono> all;
    XiMono cur(frame.num_formal(), 0);
    enum_ximonos(frame, 0, std::min(cap, 3u), cur, all);
    std::vector<CoordSeries> pb;
    for (std::size_t c = 0; c < tgt.total(); ++c) {
        const Degree want = Degree::from_index(tgt.rank_n(), tgt.block_of(c));
        CoordSeries s;
        for (const auto& a : all) {
            if (!(frame.xi_degree(a) == want) || !coin(0.4)) continue;
            Polynomial poly(p);
            const long nterms = rand_int(0, 2);
            for (long t = 0; t < nterms; ++t) {
                std::vector<std::uint32_t> e(p, 0);
                for (std::size_t v = 0; v < p; ++v)
                    e[v] = static_cast<std::uint32_t>(rand_int(0, 1));
                poly.add_term(e, small_rational());
            }
            if (!poly.is_zero()) cs_accumulate(s, a, poly);
        }
        pb.push_back(std::move(s));
    }
    return make_morphism(src, tgt, cap, std::move(pb));
}

} // namespace z2n
