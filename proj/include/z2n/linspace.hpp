#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "z2n/grassmann.hpp"
#include "z2n/linmap.hpp"
#include "z2n/points.hpp"

namespace z2n {

// A basis word of the graded symmetric algebra over the nonzero-degree part
// of a graded vector space: a nondecreasing sequence of (degree index,
// generator index) pairs; repeats of an odd-self-pairing generator vanish,
// so admissible words are strictly increasing there.
struct SymWord {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

    bool operator==(const SymWord& o) const { return factors == o.factors; }
    bool operator<(const SymWord& o) const { return factors < o.factors; }
    std::size_t length() const { return factors.size(); }
};

// An element of the truncated graded symmetric algebra, in the word basis.
class SymElement {
public:
    SymElement(int n, std::vector<std::size_t> dims, unsigned cap)
        : n_(n), dims_(std::move(dims)), cap_(cap) {}

    static SymElement one(int n, const std::vector<std::size_t>& dims, unsigned cap);
    static SymElement basis_word(int n, const std::vector<std::size_t>& dims, unsigned cap,
                                 const SymWord& w);

    int n() const { return n_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    unsigned cap() const { return cap_; }
    const std::map<SymWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Normalizes the word into canonical order with Koszul signs and adds it.
    void add_word(const SymWord& w, const Rational& c);

    SymElement operator+(const SymElement& o) const;
    SymElement scaled(const Rational& c) const;
    bool operator==(const SymElement& o) const {
        return n_ == o.n_ && dims_ == o.dims_ && cap_ == o.cap_ && terms_ == o.terms_;
    }

private:
    int n_;
    std::vector<std::size_t> dims_;
    unsigned cap_;
    std::map<SymWord, Rational> terms_;
};

// All admissible words of length k over the given dimensions, in
// lexicographic order.
std::vector<SymWord> sym_basis(int n, const std::vector<std::size_t>& dims, std::size_t k);

SymElement sym_mul(const SymElement& a, const SymElement& b);

// The basis-dependent algebra isomorphism onto a Grassmann algebra with
// matching generator counts and cap: words map to monomials one-to-one.
GElement flat_iso(const SymElement& u, const AlgebraPtr& alg);
SymElement flat_iso_inv(const GElement& a);

// Translates a degree-0 block-diagonal linear map into the morphism with the
// corresponding linear coordinate pullbacks.
Morphism manifoldify(const BlockDiagMap& l, unsigned cap = 4);

// Reads the block-diagonal map back off a linear morphism.
BlockDiagMap vectorify(const Morphism& phi);

// Syntactic test: every base pullback is a homogeneous degree-1 polynomial
// with no formal terms, and every formal pullback is a constant-coefficient
// combination of single formal coordinates.
bool is_linear_morphism(const Morphism& phi);

} // namespace z2n
