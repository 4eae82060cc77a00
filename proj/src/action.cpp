#include "z2n/action.hpp"

#include <utility>
#include <vector>

#include "z2n/io.hpp"
#include "z2n/sampling.hpp"

namespace z2n {

LambdaPoint module_action(const GElement& a, const LambdaPoint& x) {
    if (!a.algebra()->same_spec(*x.algebra))
        throw AlgebraMismatch("scalar and point over different algebras");
    Degree d = Degree::from_index(a.algebra()->n(), 0);
    if (!a.is_homogeneous(&d) || !d.is_zero())
        throw DegreeViolation("module scalar must be homogeneous of degree 0");
    std::vector<GElement> comps;
    comps.reserve(x.components.size());
    for (const auto& c : x.components) comps.push_back(gmul(a, c));
    return make_point(x.algebra, x.shape, std::move(comps));
}

LambdaPoint canonical_action(const GMatrix& X, const LambdaPoint& x) {
    if (!X.algebra()->same_spec(*x.algebra))
        throw AlgebraMismatch("matrix and point over different algebras");
    if (X.col_shape() != x.shape || X.row_shape() != x.shape)
        throw ShapeMismatch("matrix shape does not match the point shape");
    if (!is_invertible(X)) throw NotInvertible("the acting matrix is not invertible");
    std::vector<GElement> comps;
    for (std::size_t a = 0; a < x.components.size(); ++a) {
        GElement acc = GElement::zero(x.algebra);
        for (std::size_t b = 0; b < x.components.size(); ++b)
            acc = acc + gmul(x.components[b], X.entry(a, b));
        comps.push_back(std::move(acc));
    }
    return make_point(x.algebra, x.shape, std::move(comps));
}

GMatrix action_composite(const GMatrix& X, const GMatrix& Y) {
    if (!X.algebra()->same_spec(*Y.algebra()))
        throw AlgebraMismatch("matrices over different algebras");
    if (X.row_shape() != Y.col_shape())
        throw ShapeMismatch("composite requires matching shapes");
    std::vector<std::vector<GElement>> entries;
    const std::size_t na = Y.num_rows();
    const std::size_t nb = X.num_cols();
    for (std::size_t a = 0; a < na; ++a) {
        std::vector<GElement> row;
        for (std::size_t b = 0; b < nb; ++b) {
            GElement acc = GElement::zero(X.algebra());
            for (std::size_t c = 0; c < X.num_rows(); ++c)
                acc = acc + gmul(X.entry(c, b), Y.entry(a, c));
            row.push_back(std::move(acc));
        }
        entries.push_back(std::move(row));
    }
    return make_matrix(X.algebra(), Y.row_shape(), X.col_shape(),
                       Y.degree() + X.degree(), std::move(entries));
}

GradedShape action_source_shape(const GradedShape& shape) {
    const GradedShape u = gl0_dimension(shape, shape);
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < shape.num_degrees(); ++i)
        counts.push_back(shape.counts[i] + u.counts[i]);
    return GradedShape(std::move(counts));
}

namespace {

// Row-major list of the matrix-entry positions of each degree.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
entry_lists(const GradedShape& shape) {
    const int n = shape.rank_n();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> lists(shape.num_degrees());
    for (std::size_t a = 0; a < shape.total(); ++a)
        for (std::size_t b = 0; b < shape.total(); ++b) {
            const Degree d = Degree::from_index(n, shape.block_of(a)) +
                             Degree::from_index(n, shape.block_of(b));
            lists[d.index()].emplace_back(a, b);
        }
    return lists;
}

// Flat source index of point coordinate b of the acted-on shape.
std::size_t point_src_index(const GradedShape& src, const GradedShape& shape, std::size_t b) {
    const std::size_t blk = shape.block_of(b);
    return src.offset(blk) + (b - shape.offset(blk));
}

CoordSeries coord_series(const GradedShape& src, const FormalFrame& frame, std::size_t flat) {
    CoordSeries s;
    const std::size_t p = src.counts[0];
    if (src.block_of(flat) == 0) {
        s.terms.emplace(XiMono(frame.num_formal(), 0), Polynomial::variable(p, flat));
    } else {
        XiMono m(frame.num_formal(), 0);
        m[flat - p] = 1;
        s.terms.emplace(m, Polynomial::constant(p, 1));
    }
    return s;
}

} // namespace

Morphism action_as_morphism(const GradedShape& shape, unsigned cap) {
    const GradedShape src = action_source_shape(shape);
    const FormalFrame frame = make_frame(src);
    const auto lists = entry_lists(shape);
    // Flat source index of matrix entry (a, b).
    std::vector<std::vector<std::size_t>> entry_idx(shape.total(),
                                                    std::vector<std::size_t>(shape.total()));
    for (std::size_t d = 0; d < lists.size(); ++d)
        for (std::size_t k = 0; k < lists[d].size(); ++k)
            entry_idx[lists[d][k].first][lists[d][k].second] =
                src.offset(d) + shape.counts[d] + k;
    std::vector<CoordSeries> pb;
    for (std::size_t a = 0; a < shape.total(); ++a) {
        CoordSeries s;
        for (std::size_t b = 0; b < shape.total(); ++b) {
            const CoordSeries xb = coord_series(src, frame, point_src_index(src, shape, b));
            const CoordSeries Xab = coord_series(src, frame, entry_idx[a][b]);
            s = cs_add(s, cs_mul(frame, xb, Xab, cap));
        }
        pb.push_back(std::move(s));
    }
    return make_morphism(src, shape, cap, std::move(pb));
}

LambdaPoint action_input_point(const GMatrix& X, const LambdaPoint& x) {
    const GradedShape& shape = x.shape;
    const GradedShape src = action_source_shape(shape);
    const auto lists = entry_lists(shape);
    std::vector<GElement> comps(src.total(), GElement::zero(x.algebra));
    for (std::size_t b = 0; b < shape.total(); ++b)
        comps[point_src_index(src, shape, b)] = x.components[b];
    for (std::size_t d = 0; d < lists.size(); ++d)
        for (std::size_t k = 0; k < lists[d].size(); ++k)
            comps[src.offset(d) + shape.counts[d] + k] =
                X.entry(lists[d][k].first, lists[d][k].second);
    return make_point(x.algebra, src, std::move(comps));
}

ActionReport check_action_axioms(const AlgebraPtr& alg, const GradedShape& shape,
                                 std::size_t samples, std::uint64_t seed,
                                 const Sigma& sigma_in) {
    const Sigma sigma =
        sigma_in ? sigma_in
                 : Sigma([](const GMatrix& X, const LambdaPoint& v) {
                       return canonical_action(X, v);
                   });
    Sampler s(seed);
    ActionReport rep;
    const GMatrix I = identity_matrix(alg, shape);
    auto witness = [&](const char* axiom, const GMatrix& X, const LambdaPoint& v,
                       const LambdaPoint& lhs, const LambdaPoint& rhs) {
        if (!rep.counterexample.empty()) return;
        rep.counterexample = std::string("axiom: ") + axiom + "\n" + print_matrix(X) +
                             print_point(v) + "lhs: " + print_point(lhs) +
                             "rhs: " + print_point(rhs);
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const GMatrix X = s.invertible_matrix(alg, shape);
        const GMatrix Y = s.invertible_matrix(alg, shape);
        const LambdaPoint v = s.point(alg, shape);
        const LambdaPoint v2 = s.point(alg, shape);
        const GElement a = s.degree0(alg);

        const LambdaPoint idl = sigma(I, v);
        if (!(idl == v)) {
            rep.identity_ok = false;
            witness("identity", I, v, idl, v);
        }

        const LambdaPoint cl = sigma(Y, sigma(X, v));
        const LambdaPoint cr = sigma(action_composite(X, Y), v);
        if (!(cl == cr)) {
            rep.compatibility_ok = false;
            witness("compatibility", X, v, cl, cr);
        }

        const LambdaPoint al = sigma(X, point_add(v, v2));
        const LambdaPoint ar = point_add(sigma(X, v), sigma(X, v2));
        if (!(al == ar)) {
            rep.additivity_ok = false;
            witness("additivity", X, v, al, ar);
        }

        const LambdaPoint sl = sigma(X, module_action(a, v));
        const LambdaPoint sr = module_action(a, sigma(X, v));
        if (!(sl == sr)) {
            rep.scaling_ok = false;
            witness("scaling", X, v, sl, sr);
        }
    }
    return rep;
}

} // namespace z2n
