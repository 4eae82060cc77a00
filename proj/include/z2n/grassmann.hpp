#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "z2n/degree.hpp"
#include "z2n/errors.hpp"
#include "z2n/graded_mono.hpp"
#include "z2n/rational.hpp"

namespace z2n {

// A truncated Z_2^n-Grassmann algebra: real (here rational) coefficients,
// finitely many generators of nonzero degree, and all monomials of total
// degree above `cap` identified with zero (quotient by the truncation ideal).
class AlgebraSpec {
public:
    // gen_counts[j-1] is the number of generators of the degree with
    // enumeration index j, for j = 1..2^n-1. The zero degree never has
    // generators.
    AlgebraSpec(int n, std::vector<std::size_t> gen_counts, unsigned cap);

    int n() const { return n_; }
    unsigned cap() const { return cap_; }
    const std::vector<std::size_t>& gen_counts() const { return gen_counts_; }
    std::size_t num_degrees() const { return degrees_.size(); }
    const Degree& degree(std::size_t idx) const { return degrees_[idx]; }
    const std::vector<Degree>& degrees() const { return degrees_; }

    std::size_t num_gens() const { return gen_degree_.size(); }
    const Degree& gen_degree(std::size_t g) const { return gen_degree_[g]; }
    std::size_t gen_degree_index(std::size_t g) const { return gen_deg_index_[g]; }
    bool gen_odd(std::size_t g) const { return gen_odd_[g] != 0; }
    const std::vector<std::uint8_t>& odd_flags() const { return gen_odd_; }
    const std::vector<std::vector<std::uint8_t>>& pair_parity() const { return pair_parity_; }

    // Global index of generator `idx1` (1-based) of degree index j, or the
    // generator count preceding degree index j when idx1 == 0.
    std::size_t gen_offset(std::size_t deg_index) const { return gen_offset_[deg_index]; }
    // Canonical generator name "<degree-bits><1-based index>".
    std::string gen_name(std::size_t g) const;

    bool same_spec(const AlgebraSpec& o) const {
        return n_ == o.n_ && gen_counts_ == o.gen_counts_ && cap_ == o.cap_;
    }
    // Same generators, possibly different cap (used by truncation maps).
    bool same_generators(const AlgebraSpec& o) const {
        return n_ == o.n_ && gen_counts_ == o.gen_counts_;
    }

private:
    int n_;
    std::vector<std::size_t> gen_counts_;
    unsigned cap_;
    std::vector<Degree> degrees_;
    std::vector<Degree> gen_degree_;
    std::vector<std::size_t> gen_deg_index_;
    std::vector<std::size_t> gen_offset_;
    std::vector<std::uint8_t> gen_odd_;
    std::vector<std::vector<std::uint8_t>> pair_parity_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

AlgebraPtr make_algebra(int n, std::vector<std::size_t> gen_counts, unsigned cap);

// Exponent vector over the algebra's generators, in canonical order.
using Monomial = std::vector<std::uint32_t>;

// An element of the truncated Grassmann algebra in canonical form: a map
// from monomials to nonzero rational coefficients.
class GElement {
public:
    explicit GElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static GElement zero(const AlgebraPtr& alg) { return GElement(alg); }
    static GElement constant(const AlgebraPtr& alg, const Rational& c);
    static GElement generator(const AlgebraPtr& alg, std::size_t g);
    static GElement from_monomial(const AlgebraPtr& alg, const Monomial& m, const Rational& c);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Monomial, Rational, MonoCmp>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational body() const;
    GElement soul() const;

    // Degree of a monomial: sum of exponent * generator degree, mod 2.
    Degree monomial_degree(const Monomial& m) const;
    GElement homogeneous_part(const Degree& g) const;
    // True when all terms share one degree (the zero element is homogeneous
    // of every degree); on success *deg is set (zero degree for 0).
    bool is_homogeneous(Degree* deg = nullptr) const;

    GElement operator+(const GElement& o) const;
    GElement operator-(const GElement& o) const;
    GElement operator-() const;
    GElement scaled(const Rational& c) const;

    bool operator==(const GElement& o) const;
    bool operator!=(const GElement& o) const { return !(*this == o); }

    std::string to_string() const;

    // Adds c * m, dropping over-cap monomials (the truncation quotient) and
    // rejecting parity violations. Used by construction and parsing.
    void add_term(const Monomial& m, const Rational& c);

private:
    void check_same(const GElement& o) const;

    AlgebraPtr alg_;
    std::map<Monomial, Rational, MonoCmp> terms_;
};

// Product in the algebra, with Koszul-sign normalization per monomial pair.
GElement gmul(const GElement& a, const GElement& b);
GElement gpow(const GElement& a, std::uint32_t k);

// Inverse of an element with nonzero body; throws NonInvertible otherwise.
GElement g_invert(const GElement& a);

// Maps into an algebra with the same generators and a cap <= the source cap,
// dropping terms above the target cap.
GElement truncate_to(const GElement& a, const AlgebraPtr& target);

// All monomials of total degree <= cap, in canonical order.
std::vector<Monomial> enumerate_monomials(const AlgebraSpec& alg);

// A Z_2^n-algebra morphism determined by generator images: each image lives
// in the target, is homogeneous of the same degree as its generator, and has
// zero body.
class AlgebraMorphism {
public:
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<GElement> images);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<GElement>& images() const { return images_; }

    static AlgebraMorphism identity(const AlgebraPtr& alg);

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<GElement> images_;
};

GElement apply_morphism(const AlgebraMorphism& phi, const GElement& a);

} // namespace z2n
