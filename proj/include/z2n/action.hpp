#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "z2n/gmatrix.hpp"
#include "z2n/points.hpp"

namespace z2n {

// Scalar action of the degree-0 part of the algebra on Lambda-points:
// componentwise product a * x_c.
LambdaPoint module_action(const GElement& a, const LambdaPoint& x);

// The canonical linear action of an invertible degree-0 matrix on a point:
// output component a = sum_b x_b * X(a, b), with the point factor written
// first inside each product.
LambdaPoint canonical_action(const GMatrix& X, const LambdaPoint& x);

// The unique matrix P with
//   canonical_action(Y, canonical_action(X, v)) == canonical_action(P, v):
// P(a, b) = sum_c X(c, b) * Y(a, c). Over commuting entries this coincides
// with mat_mul(Y, X); in general it differs from both mat_mul(X, Y) and
// mat_mul(Y, X) because the factor order inside each entry product matters.
GMatrix action_composite(const GMatrix& X, const GMatrix& Y);

// Source shape of action_as_morphism: for each degree, the point coordinates
// of that degree followed by the matrix-entry coordinates of that degree (in
// row-major entry order). Per degree the counts are
// shape.counts + gl0_dimension(shape, shape).counts.
GradedShape action_source_shape(const GradedShape& shape);

// The canonical action as a morphism of graded domains, one bilinear pullback
// per target coordinate.
Morphism action_as_morphism(const GradedShape& shape, unsigned cap = 4);

// Packs (X, x) into a point of action_source_shape(shape), matching the
// coordinate layout of action_as_morphism.
LambdaPoint action_input_point(const GMatrix& X, const LambdaPoint& x);

struct ActionReport {
    bool identity_ok = true;
    bool compatibility_ok = true;
    bool additivity_ok = true;
    bool scaling_ok = true;
    std::string counterexample; // empty iff all flags are true

    bool all_ok() const {
        return identity_ok && compatibility_ok && additivity_ok && scaling_ok;
    }
};

using Sigma = std::function<LambdaPoint(const GMatrix&, const LambdaPoint&)>;

// Randomized check of the action axioms (identity, compatibility under
// action_composite, additivity, degree-0 scaling) for `sigma`, defaulting to
// the canonical action. Deterministic given (samples, seed).
ActionReport check_action_axioms(const AlgebraPtr& alg, const GradedShape& shape,
                                 std::size_t samples, std::uint64_t seed,
                                 const Sigma& sigma = {});

} // namespace z2n
