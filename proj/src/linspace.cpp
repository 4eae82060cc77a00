#include "z2n/linspace.hpp"

#include <functional>

namespace z2n {

SymElement SymElement::one(int n, const std::vector<std::size_t>& dims, unsigned cap) {
    SymElement e(n, dims, cap);
    e.terms_.emplace(SymWord{}, Rational(1));
    return e;
}

SymElement SymElement::basis_word(int n, const std::vector<std::size_t>& dims, unsigned cap,
                                  const SymWord& w) {
    SymElement e(n, dims, cap);
    e.add_word(w, 1);
    return e;
}

void SymElement::add_word(const SymWord& w, const Rational& c) {
    if (c == 0) return;
    if (w.length() > cap_) return; // truncation
    const std::vector<Degree> degs = enumerate_degrees(n_);
    for (const auto& [j, l] : w.factors) {
        if (j == 0 || j >= degs.size())
            throw ShapeMismatch("symmetric word factor has invalid degree index");
        if (l >= dims_[j - 1])
            throw ShapeMismatch("symmetric word factor index out of range");
    }
    // Insertion sort with Koszul signs.
    auto f = w.factors;
    int sign = 1;
    for (std::size_t i = 1; i < f.size(); ++i)
        for (std::size_t j = i; j > 0 && f[j] < f[j - 1]; --j) {
            sign *= koszul_sign(degs[f[j].first], degs[f[j - 1].first]);
            std::swap(f[j], f[j - 1]);
        }
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1] && scalar_product(degs[f[i].first], degs[f[i].first]) % 2 == 1)
            return; // odd-pairing square vanishes
    SymWord canon{std::move(f)};
    Rational coef = c;
    if (sign < 0) coef = -coef;
    auto it = terms_.find(canon);
    if (it == terms_.end()) {
        terms_.emplace(std::move(canon), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

SymElement SymElement::operator+(const SymElement& o) const {
    if (n_ != o.n_ || dims_ != o.dims_ || cap_ != o.cap_)
        throw AlgebraMismatch("symmetric elements over different spaces");
    SymElement r = *this;
    for (const auto& [w, c] : o.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

SymElement SymElement::scaled(const Rational& c) const {
    SymElement r(n_, dims_, cap_);
    if (c == 0) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

std::vector<SymWord> sym_basis(int n, const std::vector<std::size_t>& dims, std::size_t k) {
    const std::vector<Degree> degs = enumerate_degrees(n);
    if (dims.size() != degs.size() - 1)
        throw ShapeMismatch("expected one dimension per nonzero degree");
    std::vector<SymWord> out;
    SymWord cur;
    std::function<void(std::pair<std::uint32_t, std::uint32_t>, bool)> rec =
        [&](std::pair<std::uint32_t, std::uint32_t> minf, bool strict_at_min) {
            if (cur.length() == k) {
                out.push_back(cur);
                return;
            }
            for (std::uint32_t j = minf.first; j < degs.size(); ++j) {
                const std::uint32_t lstart =
                    (j == minf.first) ? minf.second + (strict_at_min ? 1u : 0u) : 0u;
                if (j == 0) continue;
                for (std::uint32_t l = lstart; l < dims[j - 1]; ++l) {
                    cur.factors.emplace_back(j, l);
                    const bool odd = scalar_product(degs[j], degs[j]) % 2 == 1;
                    rec({j, l}, odd);
                    cur.factors.pop_back();
                }
            }
        };
    rec({1, 0}, false);
    return out;
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
    if (a.n() != b.n() || a.dims() != b.dims() || a.cap() != b.cap())
        throw AlgebraMismatch("symmetric product over different spaces");
    SymElement r(a.n(), a.dims(), a.cap());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            SymWord w = u;
            w.factors.insert(w.factors.end(), v.factors.begin(), v.factors.end());
            r.add_word(w, cu * cv);
        }
    return r;
}

GElement flat_iso(const SymElement& u, const AlgebraPtr& alg) {
    if (alg->n() != u.n() || alg->gen_counts() != u.dims() || alg->cap() != u.cap())
        throw AlgebraMismatch("target algebra does not match the symmetric algebra");
    GElement r = GElement::zero(alg);
    for (const auto& [w, c] : u.terms()) {
        Monomial m(alg->num_gens(), 0);
        for (const auto& [j, l] : w.factors) m[alg->gen_offset(j) + l] += 1;
        r.add_term(m, c);
    }
    return r;
}

SymElement flat_iso_inv(const GElement& a) {
    const AlgebraSpec& alg = *a.algebra();
    SymElement r(alg.n(), alg.gen_counts(), alg.cap());
    for (const auto& [m, c] : a.terms()) {
        SymWord w;
        for (std::size_t g = 0; g < m.size(); ++g)
            for (std::uint32_t e = 0; e < m[g]; ++e)
                w.factors.emplace_back(
                    static_cast<std::uint32_t>(alg.gen_degree_index(g)),
                    static_cast<std::uint32_t>(g - alg.gen_offset(alg.gen_degree_index(g))));
        r.add_word(w, c);
    }
    return r;
}

Morphism manifoldify(const BlockDiagMap& l, unsigned cap) {
    const FormalFrame frame = make_frame(l.src);
    const std::size_t p = l.src.counts[0];
    std::vector<CoordSeries> pb;
    pb.reserve(l.tgt.total());
    for (std::size_t i = 0; i < l.tgt.num_degrees(); ++i) {
        const std::size_t so = l.src.offset(i);
        for (std::size_t r = 0; r < l.tgt.counts[i]; ++r) {
            CoordSeries s;
            if (i == 0) {
                Polynomial poly(p);
                for (std::size_t c = 0; c < l.src.counts[0]; ++c) {
                    std::vector<std::uint32_t> e(p, 0);
                    e[c] = 1;
                    poly.add_term(e, l.blocks[0][r][c]);
                }
                if (!poly.is_zero()) s.terms.emplace(XiMono(frame.num_formal(), 0), poly);
            } else {
                for (std::size_t c = 0; c < l.src.counts[i]; ++c) {
                    if (l.blocks[i][r][c] == 0) continue;
                    XiMono a(frame.num_formal(), 0);
                    a[so + c - p] = 1;
                    s.terms.emplace(a, Polynomial::constant(p, l.blocks[i][r][c]));
                }
            }
            pb.push_back(std::move(s));
        }
    }
    return make_morphism(l.src, l.tgt, cap, std::move(pb));
}

bool is_linear_morphism(const Morphism& phi) {
    const std::size_t p = phi.source_shape.counts[0];
    for (std::size_t c = 0; c < phi.pullbacks.size(); ++c) {
        const bool base_coord = phi.target_shape.block_of(c) == 0;
        for (const auto& [alpha, f] : phi.pullbacks[c].terms) {
            if (base_coord) {
                if (mono_total(alpha) != 0) return false;
                for (const auto& [e, k] : f.terms())
                    if (mono_total(e) != 1) return false;
            } else {
                if (mono_total(alpha) != 1) return false;
                for (const auto& [e, k] : f.terms())
                    if (mono_total(e) != 0) return false;
            }
        }
    }
    return true;
}

BlockDiagMap vectorify(const Morphism& phi) {
    if (!is_linear_morphism(phi))
        throw NotLinear("morphism pullbacks are not of the linear form");
    const GradedShape& src = phi.source_shape;
    const GradedShape& tgt = phi.target_shape;
    const std::size_t p = src.counts[0];
    std::vector<RatMat> blocks;
    for (std::size_t i = 0; i < src.num_degrees(); ++i)
        blocks.push_back(rm_zero(tgt.counts[i], src.counts[i]));
    for (std::size_t c = 0; c < phi.pullbacks.size(); ++c) {
        const std::size_t bc = tgt.block_of(c);
        const std::size_t row = c - tgt.offset(bc);
        for (const auto& [alpha, f] : phi.pullbacks[c].terms) {
            if (bc == 0) {
                for (const auto& [e, k] : f.terms())
                    for (std::size_t v = 0; v < p; ++v)
                        if (e[v] == 1) blocks[0][row][v] = k;
            } else {
                Rational k(0);
                for (const auto& [e, kk] : f.terms()) k = kk;
                for (std::size_t a = 0; a < alpha.size(); ++a)
                    if (alpha[a] == 1) {
                        const std::size_t flat = p + a;
                        const std::size_t bsrc = src.block_of(flat);
                        // Degree law forces bsrc == bc.
                        blocks[bsrc][row][flat - src.offset(bsrc)] = k;
                    }
            }
        }
    }
    return make_blockdiag(src, tgt, std::move(blocks));
}

} // namespace z2n
