#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "z2n/gmatrix.hpp"
#include "z2n/grassmann.hpp"
#include "z2n/linmap.hpp"

namespace z2n {

// Polynomial over exact rationals in a fixed number of base variables.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t k);

    std::size_t nvars() const { return nvars_; }
    const std::map<std::vector<std::uint32_t>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<std::uint32_t>& exp, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Polynomial derivative(std::size_t var) const;
    std::uint32_t max_exponent(std::size_t var) const;
    Rational eval_rational(const std::vector<Rational>& at) const;
    // Evaluation at degree-0 algebra elements (they commute).
    GElement eval_gelement(const std::vector<GElement>& at, const AlgebraPtr& alg) const;

private:
    std::size_t nvars_;
    std::map<std::vector<std::uint32_t>, Rational> terms_;
};

// Exponent vector over the formal (nonzero-degree) coordinates of a shape.
using XiMono = std::vector<std::uint32_t>;

// Grading data of the formal coordinates of a shape, shared by series
// arithmetic and degree checks.
struct FormalFrame {
    GradedShape shape;
    std::vector<Degree> coord_degree;                 // per formal coordinate
    std::vector<std::uint8_t> odd;                    // self-pairing parity
    std::vector<std::vector<std::uint8_t>> pair;      // pairwise parity
    std::size_t num_formal() const { return coord_degree.size(); }
    Degree xi_degree(const XiMono& a) const;
};

FormalFrame make_frame(const GradedShape& shape);

// One coordinate pullback: a finite series sum_alpha f_alpha(x) xi^alpha.
struct CoordSeries {
    std::map<XiMono, Polynomial> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const CoordSeries& o) const { return terms == o.terms; }
};

CoordSeries cs_zero();
CoordSeries cs_add(const CoordSeries& a, const CoordSeries& b);
CoordSeries cs_neg(const CoordSeries& a);
CoordSeries cs_mul(const FormalFrame& f, const CoordSeries& a, const CoordSeries& b,
                   unsigned cap);
CoordSeries cs_pow(const FormalFrame& f, const CoordSeries& a, std::uint32_t k, unsigned cap);
void cs_accumulate(CoordSeries& into, const XiMono& m, const Polynomial& p);

// A morphism of graded Cartesian domains, given per target coordinate by a
// degree-respecting pullback series with polynomial base coefficients,
// truncated at xi-degree `cap`.
struct Morphism {
    GradedShape source_shape;
    GradedShape target_shape;
    unsigned cap;
    std::vector<CoordSeries> pullbacks; // flat target coordinate order
};

Morphism make_morphism(const GradedShape& src, const GradedShape& tgt, unsigned cap,
                       std::vector<CoordSeries> pullbacks);
Morphism identity_morphism(const GradedShape& shape, unsigned cap);
Morphism compose(const Morphism& psi, const Morphism& phi);

// A Lambda-point of R^{p|q}: one algebra element per coordinate slot, with
// the coordinate's degree.
struct LambdaPoint {
    AlgebraPtr algebra;
    GradedShape shape;
    std::vector<GElement> components; // flat coordinate order

    bool operator==(const LambdaPoint& o) const {
        return shape == o.shape && components == o.components;
    }
};

LambdaPoint make_point(const AlgebraPtr& alg, const GradedShape& shape,
                       std::vector<GElement> components);
LambdaPoint zero_point(const AlgebraPtr& alg, const GradedShape& shape);
LambdaPoint point_add(const LambdaPoint& a, const LambdaPoint& b);

// Direct-substitution evaluation of a morphism at a point.
LambdaPoint evaluate(const Morphism& phi, const LambdaPoint& x);
// Independent route: Taylor expansion of the base coefficients around the
// body of the base components. Must agree with `evaluate` exactly.
LambdaPoint evaluate_taylor(const Morphism& phi, const LambdaPoint& x);

// Functoriality in the algebra: apply an algebra morphism componentwise.
LambdaPoint point_map(const AlgebraMorphism& phi, const LambdaPoint& x);

// The value of a degree-0 linear map under the zero-degree-rules functor:
// block j of the output is L_j applied to block j of v, Lambda-linearly.
LambdaPoint zdr_apply(const BlockDiagMap& l, const LambdaPoint& v);

// Reconstructs a block-diagonal map from its component function at the probe
// algebra with exactly one generator per nonzero degree. Verifies linearity
// in the tested directions and rejects outputs with extraneous monomials.
using PointFunction = std::function<LambdaPoint(const LambdaPoint&)>;
BlockDiagMap reconstruct_linear_map(const PointFunction& component, const GradedShape& src,
                                    const GradedShape& tgt);
// The probe algebra used by reconstruct_linear_map.
AlgebraPtr probe_algebra(int n);

} // namespace z2n
