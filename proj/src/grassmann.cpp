#include "z2n/grassmann.hpp"

#include <algorithm>
#include <functional>

namespace z2n {

AlgebraSpec::AlgebraSpec(int n, std::vector<std::size_t> gen_counts, unsigned cap)
    : n_(n), gen_counts_(std::move(gen_counts)), cap_(cap) {
    degrees_ = enumerate_degrees(n);
    const std::size_t nz = degrees_.size() - 1;
    if (gen_counts_.size() != nz)
        throw ShapeMismatch("expected " + std::to_string(nz) +
                            " generator counts, got " + std::to_string(gen_counts_.size()));
    gen_offset_.assign(degrees_.size(), 0);
    for (std::size_t j = 1; j < degrees_.size(); ++j) {
        gen_offset_[j] = gen_degree_.size();
        for (std::size_t l = 0; l < gen_counts_[j - 1]; ++l) {
            gen_degree_.push_back(degrees_[j]);
            gen_deg_index_.push_back(j);
        }
    }
    const std::size_t g = gen_degree_.size();
    gen_odd_.resize(g);
    pair_parity_.assign(g, std::vector<std::uint8_t>(g, 0));
    for (std::size_t a = 0; a < g; ++a) {
        gen_odd_[a] = static_cast<std::uint8_t>(scalar_product(gen_degree_[a], gen_degree_[a]) % 2);
        for (std::size_t b = 0; b < g; ++b)
            pair_parity_[a][b] =
                static_cast<std::uint8_t>(scalar_product(gen_degree_[a], gen_degree_[b]) % 2);
    }
}

std::string AlgebraSpec::gen_name(std::size_t g) const {
    const std::size_t j = gen_deg_index_[g];
    const std::size_t idx1 = g - gen_offset_[j] + 1;
    return degrees_[j].to_string() + std::to_string(idx1);
}

AlgebraPtr make_algebra(int n, std::vector<std::size_t> gen_counts, unsigned cap) {
    return std::make_shared<const AlgebraSpec>(n, std::move(gen_counts), cap);
}

GElement GElement::constant(const AlgebraPtr& alg, const Rational& c) {
    GElement e(alg);
    if (c != 0) e.terms_[Monomial(alg->num_gens(), 0)] = c;
    return e;
}

GElement GElement::generator(const AlgebraPtr& alg, std::size_t g) {
    Monomial m(alg->num_gens(), 0);
    m[g] = 1;
    return from_monomial(alg, m, 1);
}

GElement GElement::from_monomial(const AlgebraPtr& alg, const Monomial& m, const Rational& c) {
    GElement e(alg);
    e.add_term(m, c);
    return e;
}

void GElement::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != alg_->num_gens())
        throw ShapeMismatch("monomial length does not match generator count");
    if (c == 0) return;
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] > 1 && alg_->gen_odd(g))
            throw ParityViolation("generator " + alg_->gen_name(g) +
                                  " has odd self-pairing; exponent must be 0 or 1");
    if (mono_total(m) > alg_->cap()) return; // the truncation quotient
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational GElement::body() const {
    const Monomial empty(alg_->num_gens(), 0);
    auto it = terms_.find(empty);
    return it == terms_.end() ? Rational(0) : it->second;
}

GElement GElement::soul() const {
    GElement r(alg_);
    for (const auto& [m, c] : terms_)
        if (mono_total(m) > 0) r.terms_.emplace(m, c);
    return r;
}

Degree GElement::monomial_degree(const Monomial& m) const {
    Degree d = Degree::zero(alg_->n());
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] & 1u) d = d + alg_->gen_degree(g);
    return d;
}

GElement GElement::homogeneous_part(const Degree& g) const {
    GElement r(alg_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) == g) r.terms_.emplace(m, c);
    return r;
}

bool GElement::is_homogeneous(Degree* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = Degree::zero(alg_->n());
        return true;
    }
    Degree d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    if (deg) *deg = d;
    return true;
}

void GElement::check_same(const GElement& o) const {
    if (!alg_->same_spec(*o.alg_))
        throw AlgebraMismatch("operands belong to different algebras");
}

GElement GElement::operator+(const GElement& o) const {
    check_same(o);
    GElement r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

GElement GElement::operator-(const GElement& o) const { return *this + (-o); }

GElement GElement::operator-() const {
    GElement r(alg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GElement GElement::scaled(const Rational& c) const {
    GElement r(alg_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

bool GElement::operator==(const GElement& o) const {
    return alg_->same_spec(*o.alg_) && terms_ == o.terms_;
}

GElement gmul(const GElement& a, const GElement& b) {
    if (!a.algebra()->same_spec(*b.algebra()))
        throw AlgebraMismatch("gmul operands belong to different algebras");
    const AlgebraSpec& alg = *a.algebra();
    GElement r(a.algebra());
    Monomial w;
    for (const auto& [u, cu] : a.terms()) {
        const std::uint32_t tu = mono_total(u);
        for (const auto& [v, cv] : b.terms()) {
            if (tu + mono_total(v) > alg.cap()) continue;
            const int s = graded_mono_mul(u, v, alg.odd_flags(), alg.pair_parity(), w);
            if (s == 0) continue;
            Rational coef = cu * cv;
            if (s < 0) coef = -coef;
            r.add_term(w, coef);
        }
    }
    return r;
}

GElement gpow(const GElement& a, std::uint32_t k) {
    GElement r = GElement::constant(a.algebra(), 1);
    for (std::uint32_t i = 0; i < k; ++i) r = gmul(r, a);
    return r;
}

GElement g_invert(const GElement& a) {
    const Rational b = a.body();
    if (b == 0) throw NonInvertible("element has zero body");
    const Rational rinv = Rational(1) / b;
    const GElement m = a.soul().scaled(-rinv); // -body^{-1} * soul, nilpotent
    GElement acc = GElement::constant(a.algebra(), 1);
    GElement term = GElement::constant(a.algebra(), 1);
    for (unsigned k = 1; k <= a.algebra()->cap(); ++k) {
        term = gmul(term, m);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc.scaled(rinv);
}

GElement truncate_to(const GElement& a, const AlgebraPtr& target) {
    if (!a.algebra()->same_generators(*target))
        throw AlgebraMismatch("truncation requires identical generators");
    if (target->cap() > a.algebra()->cap())
        throw CapTooSmall("truncation target cap exceeds source cap");
    GElement r(target);
    for (const auto& [m, c] : a.terms())
        if (mono_total(m) <= target->cap()) r.add_term(m, c);
    return r;
}

std::vector<Monomial> enumerate_monomials(const AlgebraSpec& alg) {
    std::vector<Monomial> out;
    Monomial cur(alg.num_gens(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t g, unsigned used) {
        if (g == alg.num_gens()) {
            out.push_back(cur);
            return;
        }
        const unsigned room = alg.cap() - used;
        const unsigned maxe = alg.gen_odd(g) ? std::min(1u, room) : room;
        for (unsigned e = 0; e <= maxe; ++e) {
            cur[g] = e;
            rec(g + 1, used + e);
        }
        cur[g] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), mono_less);
    return out;
}

std::string GElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m[g] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += alg_->gen_name(g);
            if (m[g] > 1) mono += "^" + std::to_string(m[g]);
        }
        if (mono.empty()) {
            s += rat_to_string(a);
        } else if (a == 1) {
            s += mono;
        } else {
            s += rat_to_string(a) + " " + mono;
        }
    }
    return s;
}

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<GElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_->n() != target_->n())
        throw AlgebraMismatch("morphism endpoints have different ambient n");
    if (images_.size() != source_->num_gens())
        throw ShapeMismatch("morphism needs one image per source generator");
    for (std::size_t g = 0; g < images_.size(); ++g) {
        const GElement& im = images_[g];
        if (!im.algebra()->same_spec(*target_))
            throw AlgebraMismatch("generator image lives outside the target algebra");
        Degree d;
        if (!im.is_homogeneous(&d) || (!im.is_zero() && d != source_->gen_degree(g)))
            throw DegreeViolation("image of generator " + source_->gen_name(g) +
                                  " is not homogeneous of the generator's degree");
        if (im.body() != 0)
            throw DegreeViolation("image of generator " + source_->gen_name(g) +
                                  " must have zero body");
    }
}

AlgebraMorphism AlgebraMorphism::identity(const AlgebraPtr& alg) {
    std::vector<GElement> images;
    images.reserve(alg->num_gens());
    for (std::size_t g = 0; g < alg->num_gens(); ++g)
        images.push_back(GElement::generator(alg, g));
    return AlgebraMorphism(alg, alg, std::move(images));
}

GElement apply_morphism(const AlgebraMorphism& phi, const GElement& a) {
    if (!a.algebra()->same_spec(*phi.source()))
        throw AlgebraMismatch("argument does not live in the morphism source");
    GElement r = GElement::zero(phi.target());
    for (const auto& [m, c] : a.terms()) {
        GElement t = GElement::constant(phi.target(), c);
        for (std::size_t g = 0; g < m.size() && !t.is_zero(); ++g)
            if (m[g] > 0) t = gmul(t, gpow(phi.images()[g], m[g]));
        r = r + t;
    }
    return r;
}

} // namespace z2n
