#include <doctest.h>

#include "z2n/action.hpp"
#include "z2n/io.hpp"
#include "z2n/sampling.hpp"

using namespace z2n;

namespace {
const AlgebraPtr kAlg = make_algebra(2, {1, 1, 1}, 3);
const GradedShape kSh = GradedShape::from_string("1|1,1,1");
}

TEST_CASE("scalar module action: unit, zero, associativity") {
    Sampler s(71);
    for (int i = 0; i < 60; ++i) {
        const LambdaPoint v = s.point(kAlg, kSh);
        CHECK(module_action(GElement::constant(kAlg, 1), v) == v);
        CHECK(module_action(GElement::zero(kAlg), v) == zero_point(kAlg, kSh));
        const GElement a = s.degree0(kAlg), b = s.degree0(kAlg);
        CHECK(module_action(gmul(a, b), v) == module_action(a, module_action(b, v)));
    }
    CHECK_THROWS_AS(module_action(GElement::generator(kAlg, 0), s.point(kAlg, kSh)),
                    DegreeViolation);
}

TEST_CASE("identity matrix acts as the identity") {
    Sampler s(72);
    const GMatrix id = identity_matrix(kAlg, kSh);
    for (int i = 0; i < 30; ++i) {
        const LambdaPoint v = s.point(kAlg, kSh);
        CHECK(canonical_action(id, v) == v);
    }
}

TEST_CASE("non-invertible matrices are rejected") {
    Sampler s(73);
    const GMatrix z = zero_matrix(kAlg, kSh, kSh, Degree::from_index(2, 0));
    CHECK_THROWS_AS(canonical_action(z, s.point(kAlg, kSh)), NotInvertible);
}

TEST_CASE("the action is additive and degree-0 linear in the point") {
    Sampler s(74);
    for (int i = 0; i < 80; ++i) {
        const GMatrix x = s.invertible_matrix(kAlg, kSh);
        const LambdaPoint v = s.point(kAlg, kSh), w = s.point(kAlg, kSh);
        const GElement a = s.degree0(kAlg);
        CHECK(canonical_action(x, point_add(v, w)) ==
              point_add(canonical_action(x, v), canonical_action(x, w)));
        CHECK(canonical_action(x, module_action(a, v)) ==
              module_action(a, canonical_action(x, v)));
    }
}

TEST_CASE("successive actions compose through the composite product") {
    Sampler s(75);
    for (int i = 0; i < 80; ++i) {
        const GMatrix x = s.invertible_matrix(kAlg, kSh);
        const GMatrix y = s.invertible_matrix(kAlg, kSh);
        const LambdaPoint v = s.point(kAlg, kSh);
        const GMatrix p = action_composite(x, y);
        CHECK(is_invertible(p));
        CHECK(canonical_action(y, canonical_action(x, v)) == canonical_action(p, v));
    }
}

TEST_CASE("plain matrix products fail the composition law over anticommuting entries") {
    // Over the super line with two odd generators, X adds t1 times the odd
    // slot to the even slot and Y adds t2 times the even slot to the odd
    // slot. Successive actions then differ from the action of either plain
    // product, while the composite product is exact.
    const AlgebraPtr super = make_algebra(1, {3}, 3);
    const GradedShape sh = GradedShape::from_string("1|1");
    const GElement one = GElement::constant(super, 1);
    const GElement zero = GElement::zero(super);
    const GElement t1 = GElement::generator(super, 0);
    const GElement t2 = GElement::generator(super, 1);
    const GElement t3 = GElement::generator(super, 2);
    const Degree d0 = Degree::from_index(1, 0);
    const GMatrix x = make_matrix(super, sh, sh, d0, {{one, t1}, {zero, one}});
    const GMatrix y = make_matrix(super, sh, sh, d0, {{one, zero}, {t2, one}});
    const LambdaPoint v = make_point(super, sh, {one, t3});

    const LambdaPoint two_step = canonical_action(y, canonical_action(x, v));
    CHECK(two_step == canonical_action(action_composite(x, y), v));
    CHECK_FALSE(two_step == canonical_action(mat_mul(x, y), v));
    CHECK_FALSE(two_step == canonical_action(mat_mul(y, x), v));
}

TEST_CASE("composite product reduces to the reversed plain product on bodies") {
    Sampler s(76);
    for (int i = 0; i < 40; ++i) {
        const GMatrix x = s.invertible_matrix(kAlg, kSh);
        const GMatrix y = s.invertible_matrix(kAlg, kSh);
        CHECK(epsilon_tilde(action_composite(x, y)) ==
              rm_mul(epsilon_tilde(y), epsilon_tilde(x)));
    }
}

TEST_CASE("the action is natural in the algebra") {
    Sampler s(77);
    const AlgebraPtr tgt = make_algebra(2, {2, 1, 1}, 3);
    for (int i = 0; i < 60; ++i) {
        const AlgebraMorphism f = s.algebra_morphism(kAlg, tgt);
        const GMatrix x = s.invertible_matrix(kAlg, kSh);
        const LambdaPoint v = s.point(kAlg, kSh);
        auto entries = x.entries();
        for (auto& row : entries)
            for (auto& e : row) e = apply_morphism(f, e);
        const GMatrix fx = make_matrix(tgt, kSh, kSh, x.degree(), std::move(entries));
        CHECK(point_map(f, canonical_action(x, v)) ==
              canonical_action(fx, point_map(f, v)));
    }
}

TEST_CASE("the action morphism evaluates to the canonical action") {
    Sampler s(78);
    const Morphism am = action_as_morphism(kSh, kAlg->cap());
    CHECK(am.source_shape == action_source_shape(kSh));
    CHECK(am.source_shape.to_string() == "5|5,5,5");
    for (int i = 0; i < 60; ++i) {
        const GMatrix x = s.invertible_matrix(kAlg, kSh);
        const LambdaPoint v = s.point(kAlg, kSh);
        CHECK(evaluate(am, action_input_point(x, v)) == canonical_action(x, v));
        CHECK(evaluate_taylor(am, action_input_point(x, v)) == canonical_action(x, v));
    }
}

TEST_CASE("axiom checker passes the canonical action and is deterministic") {
    const ActionReport a = check_action_axioms(kAlg, kSh, 40, 9);
    CHECK(a.identity_ok);
    CHECK(a.compatibility_ok);
    CHECK(a.additivity_ok);
    CHECK(a.scaling_ok);
    CHECK(a.counterexample.empty());
    const ActionReport b = check_action_axioms(kAlg, kSh, 40, 9);
    CHECK(b.all_ok() == a.all_ok());
}

TEST_CASE("axiom checker reports a corrupted action with a witness") {
    const Sigma corrupt = [](const GMatrix& x, const LambdaPoint& v) {
        LambdaPoint out = canonical_action(x, v);
        out.components[0] = gmul(out.components[0], out.components[0]);
        return out;
    };
    const ActionReport rep = check_action_axioms(kAlg, kSh, 25, 5, corrupt);
    CHECK_FALSE(rep.all_ok());
    CHECK_FALSE(rep.scaling_ok);
    CHECK_FALSE(rep.counterexample.empty());
}
