#include "z2n/points.hpp"

#include <algorithm>

namespace z2n {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(std::vector<std::uint32_t>(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t k) {
    Polynomial p(nvars);
    std::vector<std::uint32_t> e(nvars, 0);
    e[k] = 1;
    p.add_term(e, 1);
    return p;
}

void Polynomial::add_term(const std::vector<std::uint32_t>& exp, const Rational& c) {
    if (exp.size() != nvars_) throw ShapeMismatch("polynomial exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    std::vector<std::uint32_t> w(nvars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) w[i] = a[i] + b[i];
            r.add_term(w, ca * cb);
        }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        auto d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

std::uint32_t Polynomial::max_exponent(std::size_t var) const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

Rational Polynomial::eval_rational(const std::vector<Rational>& at) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= at[i];
        acc += t;
    }
    return acc;
}

GElement Polynomial::eval_gelement(const std::vector<GElement>& at, const AlgebraPtr& alg) const {
    GElement acc = GElement::zero(alg);
    for (const auto& [e, c] : terms_) {
        GElement t = GElement::constant(alg, c);
        for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i)
            if (e[i] > 0) t = gmul(t, gpow(at[i], e[i]));
        acc = acc + t;
    }
    return acc;
}

Degree FormalFrame::xi_degree(const XiMono& a) const {
    Degree d = Degree::zero(shape.rank_n());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & 1u) d = d + coord_degree[i];
    return d;
}

FormalFrame make_frame(const GradedShape& shape) {
    FormalFrame f;
    f.shape = shape;
    const int n = shape.rank_n();
    const std::vector<Degree> degs = enumerate_degrees(n);
    for (std::size_t j = 1; j < shape.num_degrees(); ++j)
        for (std::size_t l = 0; l < shape.counts[j]; ++l) f.coord_degree.push_back(degs[j]);
    const std::size_t q = f.coord_degree.size();
    f.odd.resize(q);
    f.pair.assign(q, std::vector<std::uint8_t>(q, 0));
    for (std::size_t a = 0; a < q; ++a) {
        f.odd[a] =
            static_cast<std::uint8_t>(scalar_product(f.coord_degree[a], f.coord_degree[a]) % 2);
        for (std::size_t b = 0; b < q; ++b)
            f.pair[a][b] = static_cast<std::uint8_t>(
                scalar_product(f.coord_degree[a], f.coord_degree[b]) % 2);
    }
    return f;
}

CoordSeries cs_zero() { return CoordSeries{}; }

void cs_accumulate(CoordSeries& into, const XiMono& m, const Polynomial& p) {
    if (p.is_zero()) return;
    auto it = into.terms.find(m);
    if (it == into.terms.end()) {
        into.terms.emplace(m, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) into.terms.erase(it);
    }
}

CoordSeries cs_add(const CoordSeries& a, const CoordSeries& b) {
    CoordSeries r = a;
    for (const auto& [m, p] : b.terms) cs_accumulate(r, m, p);
    return r;
}

CoordSeries cs_neg(const CoordSeries& a) {
    CoordSeries r;
    for (const auto& [m, p] : a.terms) r.terms.emplace(m, -p);
    return r;
}

CoordSeries cs_mul(const FormalFrame& f, const CoordSeries& a, const CoordSeries& b,
                   unsigned cap) {
    CoordSeries r;
    XiMono w;
    for (const auto& [u, pu] : a.terms) {
        const std::uint32_t tu = mono_total(u);
        for (const auto& [v, pv] : b.terms) {
            if (tu + mono_total(v) > cap) continue;
            const int s = graded_mono_mul(u, v, f.odd, f.pair, w);
            if (s == 0) continue;
            Polynomial prod = pu * pv;
            if (s < 0) prod = -prod;
            cs_accumulate(r, w, prod);
        }
    }
    return r;
}

CoordSeries cs_pow(const FormalFrame& f, const CoordSeries& a, std::uint32_t k, unsigned cap) {
    const std::size_t nvars = f.shape.counts[0];
    CoordSeries r;
    r.terms.emplace(XiMono(f.num_formal(), 0), Polynomial::constant(nvars, 1));
    for (std::uint32_t i = 0; i < k; ++i) r = cs_mul(f, r, a, cap);
    return r;
}

Morphism make_morphism(const GradedShape& src, const GradedShape& tgt, unsigned cap,
                       std::vector<CoordSeries> pullbacks) {
    if (pullbacks.size() != tgt.total())
        throw ShapeMismatch("morphism needs one pullback per target coordinate");
    const FormalFrame frame = make_frame(src);
    const std::vector<Degree> degs = enumerate_degrees(tgt.rank_n());
    if (src.rank_n() != tgt.rank_n())
        throw ShapeMismatch("morphism endpoints over different ambient n");
    const std::size_t p = src.counts[0];
    Morphism m{src, tgt, cap, {}};
    for (std::size_t c = 0; c < pullbacks.size(); ++c) {
        const Degree want = degs[tgt.block_of(c)];
        CoordSeries kept;
        for (const auto& [a, f] : pullbacks[c].terms) {
            if (a.size() != frame.num_formal())
                throw ShapeMismatch("xi-monomial length does not match the source shape");
            if (f.nvars() != p)
                throw ShapeMismatch("base coefficient has wrong variable count");
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] > 1 && frame.odd[i])
                    throw ParityViolation(
                        "odd-pairing formal coordinate raised to a power > 1");
            if (mono_total(a) > cap) continue; // the xi-truncation quotient
            if (frame.xi_degree(a) != want)
                throw DegreeViolation("pullback term of target coordinate " +
                                      std::to_string(c) + " has degree " +
                                      frame.xi_degree(a).to_string() + ", expected " +
                                      want.to_string());
            cs_accumulate(kept, a, f);
        }
        m.pullbacks.push_back(std::move(kept));
    }
    return m;
}

Morphism identity_morphism(const GradedShape& shape, unsigned cap) {
    const FormalFrame frame = make_frame(shape);
    const std::size_t p = shape.counts[0];
    std::vector<CoordSeries> pb;
    for (std::size_t c = 0; c < shape.total(); ++c) {
        CoordSeries s;
        if (c < p) {
            s.terms.emplace(XiMono(frame.num_formal(), 0), Polynomial::variable(p, c));
        } else {
            XiMono a(frame.num_formal(), 0);
            a[c - p] = 1;
            s.terms.emplace(a, Polynomial::constant(p, 1));
        }
        pb.push_back(std::move(s));
    }
    return make_morphism(shape, shape, cap, std::move(pb));
}

Morphism compose(const Morphism& psi, const Morphism& phi) {
    if (phi.target_shape != psi.source_shape)
        throw ShapeMismatch("compose: inner target differs from outer source");
    if (phi.cap != psi.cap) throw CapTooSmall("compose requires equal caps");
    const FormalFrame frame = make_frame(phi.source_shape);
    const std::size_t p_src = phi.source_shape.counts[0];
    const std::size_t p_mid = psi.source_shape.counts[0];
    const unsigned cap = phi.cap;
    const CoordSeries one = [&] {
        CoordSeries s;
        s.terms.emplace(XiMono(frame.num_formal(), 0), Polynomial::constant(p_src, 1));
        return s;
    }();
    std::vector<CoordSeries> out;
    out.reserve(psi.pullbacks.size());
    for (const auto& series : psi.pullbacks) {
        CoordSeries acc;
        for (const auto& [alpha, g] : series.terms) {
            // Substitute the inner pullbacks into the formal monomial...
            CoordSeries xi_part = one;
            for (std::size_t b = 0; b < alpha.size(); ++b)
                if (alpha[b] > 0)
                    xi_part = cs_mul(frame, xi_part,
                                     cs_pow(frame, phi.pullbacks[p_mid + b], alpha[b], cap), cap);
            // ...and into the base coefficient polynomial.
            CoordSeries g_sub;
            for (const auto& [e, c] : g.terms()) {
                CoordSeries t;
                t.terms.emplace(XiMono(frame.num_formal(), 0),
                                Polynomial::constant(p_src, c));
                for (std::size_t b = 0; b < e.size(); ++b)
                    if (e[b] > 0)
                        t = cs_mul(frame, t, cs_pow(frame, phi.pullbacks[b], e[b], cap), cap);
                g_sub = cs_add(g_sub, t);
            }
            acc = cs_add(acc, cs_mul(frame, g_sub, xi_part, cap));
        }
        out.push_back(std::move(acc));
    }
    return make_morphism(phi.source_shape, psi.target_shape, cap, std::move(out));
}

LambdaPoint make_point(const AlgebraPtr& alg, const GradedShape& shape,
                       std::vector<GElement> components) {
    if (shape.num_degrees() != alg->num_degrees())
        throw ShapeMismatch("point shape does not match the algebra's ambient n");
    if (components.size() != shape.total())
        throw ShapeMismatch("point needs one component per coordinate");
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (!components[c].algebra()->same_spec(*alg))
            throw AlgebraMismatch("point component lives in a different algebra");
        const Degree want = alg->degree(shape.block_of(c));
        Degree d;
        if (!components[c].is_homogeneous(&d) || (!components[c].is_zero() && d != want))
            throw WrongDegreeComponent("component " + std::to_string(c) +
                                       " is not homogeneous of degree " + want.to_string());
    }
    return LambdaPoint{alg, shape, std::move(components)};
}

LambdaPoint zero_point(const AlgebraPtr& alg, const GradedShape& shape) {
    return make_point(alg, shape,
                      std::vector<GElement>(shape.total(), GElement::zero(alg)));
}

LambdaPoint point_add(const LambdaPoint& a, const LambdaPoint& b) {
    if (a.shape != b.shape) throw ShapeMismatch("point sum over different shapes");
    std::vector<GElement> comps;
    comps.reserve(a.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i)
        comps.push_back(a.components[i] + b.components[i]);
    return make_point(a.algebra, a.shape, std::move(comps));
}

static void check_eval_pre(const Morphism& phi, const LambdaPoint& x) {
    if (phi.source_shape != x.shape)
        throw ShapeMismatch("evaluation: point shape differs from the morphism source");
    if (phi.cap < x.algebra->cap())
        throw CapTooSmall("morphism cap " + std::to_string(phi.cap) +
                          " below algebra cap " + std::to_string(x.algebra->cap()));
}

// Ordered product of formal components to the powers of alpha.
static GElement xi_product(const AlgebraPtr& alg, const std::vector<GElement>& formal,
                           const XiMono& alpha) {
    GElement t = GElement::constant(alg, 1);
    for (std::size_t i = 0; i < alpha.size() && !t.is_zero(); ++i)
        if (alpha[i] > 0) t = gmul(t, gpow(formal[i], alpha[i]));
    return t;
}

LambdaPoint evaluate(const Morphism& phi, const LambdaPoint& x) {
    check_eval_pre(phi, x);
    const AlgebraPtr& alg = x.algebra;
    const std::size_t p = phi.source_shape.counts[0];
    const std::vector<GElement> base(x.components.begin(), x.components.begin() + p);
    const std::vector<GElement> formal(x.components.begin() + p, x.components.end());
    std::vector<GElement> out;
    out.reserve(phi.pullbacks.size());
    for (const auto& series : phi.pullbacks) {
        GElement acc = GElement::zero(alg);
        for (const auto& [alpha, f] : series.terms)
            acc = acc + gmul(f.eval_gelement(base, alg), xi_product(alg, formal, alpha));
        out.push_back(std::move(acc));
    }
    return make_point(alg, phi.target_shape, std::move(out));
}

LambdaPoint evaluate_taylor(const Morphism& phi, const LambdaPoint& x) {
    check_eval_pre(phi, x);
    const AlgebraPtr& alg = x.algebra;
    const std::size_t p = phi.source_shape.counts[0];
    std::vector<Rational> xbody;
    std::vector<GElement> xsoul;
    for (std::size_t i = 0; i < p; ++i) {
        xbody.push_back(x.components[i].body());
        xsoul.push_back(x.components[i].soul());
    }
    const std::vector<GElement> formal(x.components.begin() + p, x.components.end());
    std::vector<GElement> out;
    out.reserve(phi.pullbacks.size());
    for (const auto& series : phi.pullbacks) {
        GElement acc = GElement::zero(alg);
        for (const auto& [alpha, f] : series.terms) {
            // Taylor sum over beta of (1/beta!) d^beta f (x_body) * soul^beta.
            std::vector<std::uint32_t> maxe(p);
            for (std::size_t i = 0; i < p; ++i) maxe[i] = f.max_exponent(i);
            std::vector<std::uint32_t> beta(p, 0);
            GElement fsum = GElement::zero(alg);
            while (true) {
                Polynomial d = f;
                Rational fact(1);
                for (std::size_t i = 0; i < p; ++i)
                    for (std::uint32_t k = 0; k < beta[i]; ++k) {
                        d = d.derivative(i);
                        fact *= Rational(k + 1);
                    }
                if (!d.is_zero()) {
                    GElement t = GElement::constant(alg, d.eval_rational(xbody) / fact);
                    for (std::size_t i = 0; i < p && !t.is_zero(); ++i)
                        if (beta[i] > 0) t = gmul(t, gpow(xsoul[i], beta[i]));
                    fsum = fsum + t;
                }
                std::size_t i = 0;
                while (i < p) {
                    if (beta[i] < maxe[i]) {
                        ++beta[i];
                        break;
                    }
                    beta[i] = 0;
                    ++i;
                }
                if (i == p) break;
            }
            acc = acc + gmul(fsum, xi_product(alg, formal, alpha));
        }
        out.push_back(std::move(acc));
    }
    return make_point(alg, phi.target_shape, std::move(out));
}

LambdaPoint point_map(const AlgebraMorphism& phi, const LambdaPoint& x) {
    std::vector<GElement> comps;
    comps.reserve(x.components.size());
    for (const auto& c : x.components) comps.push_back(apply_morphism(phi, c));
    return make_point(phi.target(), x.shape, std::move(comps));
}

LambdaPoint zdr_apply(const BlockDiagMap& l, const LambdaPoint& v) {
    if (l.src != v.shape) throw ShapeMismatch("linear map source differs from point shape");
    const AlgebraPtr& alg = v.algebra;
    std::vector<GElement> out(l.tgt.total(), GElement::zero(alg));
    for (std::size_t i = 0; i < l.tgt.num_degrees(); ++i) {
        const std::size_t so = l.src.offset(i), to = l.tgt.offset(i);
        for (std::size_t r = 0; r < l.tgt.counts[i]; ++r) {
            GElement acc = GElement::zero(alg);
            for (std::size_t c = 0; c < l.src.counts[i]; ++c)
                acc = acc + v.components[so + c].scaled(l.blocks[i][r][c]);
            out[to + r] = std::move(acc);
        }
    }
    return make_point(alg, l.tgt, std::move(out));
}

AlgebraPtr probe_algebra(int n) {
    const std::size_t nz = (std::size_t(1) << n) - 1;
    return make_algebra(n, std::vector<std::size_t>(nz, 1), 2);
}

BlockDiagMap reconstruct_linear_map(const PointFunction& component, const GradedShape& src,
                                    const GradedShape& tgt) {
    const int n = src.rank_n();
    if (tgt.rank_n() != n) throw ShapeMismatch("source and target over different ambient n");
    const AlgebraPtr alg = probe_algebra(n);
    const std::size_t nd = src.num_degrees();

    std::vector<RatMat> blocks;
    for (std::size_t i = 0; i < nd; ++i) blocks.push_back(rm_zero(tgt.counts[i], src.counts[i]));

    {
        const LambdaPoint z = component(zero_point(alg, src));
        if (z.shape != tgt) throw ShapeMismatch("component output has wrong shape");
        for (const auto& c : z.components)
            if (!c.is_zero()) throw NotNatural("component does not map zero to zero");
    }

    for (std::size_t j = 0; j < nd; ++j) {
        for (std::size_t l = 0; l < src.counts[j]; ++l) {
            std::vector<GElement> comps(src.total(), GElement::zero(alg));
            const GElement probe_val =
                j == 0 ? GElement::constant(alg, 1) : GElement::generator(alg, j - 1);
            comps[src.offset(j) + l] = probe_val;
            const LambdaPoint probe = make_point(alg, src, comps);
            const LambdaPoint out = component(probe);
            if (out.shape != tgt) throw ShapeMismatch("component output has wrong shape");

            Monomial want(alg->num_gens(), 0);
            if (j != 0) want[j - 1] = 1;
            for (std::size_t c = 0; c < out.components.size(); ++c) {
                const std::size_t bc = tgt.block_of(c);
                const GElement& val = out.components[c];
                if (bc != j) {
                    if (!val.is_zero())
                        throw NotNatural("probe in degree slot " + std::to_string(j) +
                                         " produced output outside that slot");
                    continue;
                }
                for (const auto& [m, coeff] : val.terms()) {
                    if (m != want)
                        throw NotNatural("probe output contains the extraneous monomial '" +
                                         GElement::from_monomial(alg, m, 1).to_string() + "'");
                    blocks[j][c - tgt.offset(j)][l] = coeff;
                }
            }

            // Lambda_0-linearity in the tested direction: rescale the probe.
            const LambdaPoint out2 = component(zdr_apply(
                [&] {
                    BlockDiagMap scale{src, src, {}};
                    for (std::size_t i = 0; i < nd; ++i) {
                        RatMat b = rm_identity(src.counts[i]);
                        for (std::size_t r = 0; r < src.counts[i]; ++r) b[r][r] = 2;
                        scale.blocks.push_back(std::move(b));
                    }
                    return scale;
                }(),
                probe));
            for (std::size_t c = 0; c < out.components.size(); ++c)
                if (out2.components[c] != out.components[c].scaled(2))
                    throw NotNatural("component is not linear in a tested direction");
        }
    }
    return make_blockdiag(src, tgt, std::move(blocks));
}

} // namespace z2n
