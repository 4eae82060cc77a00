#include <doctest.h>

#include "z2n/io.hpp"
#include "z2n/points.hpp"
#include "z2n/sampling.hpp"

using namespace z2n;

namespace {
const AlgebraPtr kAlg = make_algebra(2, {2, 1, 1}, 3);
const GradedShape kSrc = GradedShape::from_string("2|1,1,1");
const GradedShape kTgt = GradedShape::from_string("1|2,0,1");
}

TEST_CASE("points must be componentwise homogeneous of the slot degree") {
    std::vector<GElement> comps(kSrc.total(), GElement::zero(kAlg));
    comps[0] = GElement::constant(kAlg, 3); // base slot, fine
    CHECK_NOTHROW(make_point(kAlg, kSrc, comps));
    comps[2] = GElement::constant(kAlg, 1); // degree-01 slot holding degree 0
    CHECK_THROWS_AS(make_point(kAlg, kSrc, comps), WrongDegreeComponent);
}

TEST_CASE("pullback terms must respect the degree law") {
    const FormalFrame frame = make_frame(kSrc);
    std::vector<CoordSeries> pb(kTgt.total());
    // Target coordinate 0 has degree 0; a single degree-01 formal term breaks it.
    XiMono a(frame.num_formal(), 0);
    a[0] = 1;
    pb[0].terms.emplace(a, Polynomial::constant(2, 1));
    CHECK_THROWS_AS(make_morphism(kSrc, kTgt, 3, pb), DegreeViolation);
}

TEST_CASE("substitution and Taylor evaluation agree on random data") {
    Sampler s(51);
    for (int i = 0; i < 200; ++i) {
        const Morphism phi = s.morphism(kSrc, kTgt, kAlg->cap());
        const LambdaPoint x = s.point(kAlg, kSrc);
        CHECK(evaluate(phi, x) == evaluate_taylor(phi, x));
    }
}

TEST_CASE("identity morphism evaluates to the identity") {
    Sampler s(52);
    const Morphism id = identity_morphism(kSrc, kAlg->cap());
    for (int i = 0; i < 30; ++i) {
        const LambdaPoint x = s.point(kAlg, kSrc);
        CHECK(evaluate(id, x) == x);
        CHECK(evaluate_taylor(id, x) == x);
    }
}

TEST_CASE("a morphism cap below the algebra cap is rejected") {
    Sampler s(53);
    const Morphism phi = s.morphism(kSrc, kTgt, 2);
    const LambdaPoint x = s.point(kAlg, kSrc);
    CHECK_THROWS_AS(evaluate(phi, x), CapTooSmall);
    CHECK_THROWS_AS(evaluate_taylor(phi, x), CapTooSmall);
}

TEST_CASE("composition is functorial under evaluation") {
    Sampler s(54);
    for (int i = 0; i < 100; ++i) {
        const Morphism phi = s.morphism(kSrc, kTgt, kAlg->cap());
        const Morphism psi = s.morphism(kTgt, kSrc, kAlg->cap());
        const LambdaPoint x = s.point(kAlg, kSrc);
        CHECK(evaluate(compose(psi, phi), x) == evaluate(psi, evaluate(phi, x)));
    }
}

TEST_CASE("composition is associative and unital") {
    Sampler s(55);
    const Morphism id_src = identity_morphism(kSrc, 3);
    const Morphism id_tgt = identity_morphism(kTgt, 3);
    for (int i = 0; i < 40; ++i) {
        const Morphism phi = s.morphism(kSrc, kTgt, 3);
        const Morphism psi = s.morphism(kTgt, kSrc, 3);
        const Morphism rho = s.morphism(kSrc, kTgt, 3);
        CHECK(compose(compose(rho, psi), phi).pullbacks ==
              compose(rho, compose(psi, phi)).pullbacks);
        CHECK(compose(phi, id_src).pullbacks == phi.pullbacks);
        CHECK(compose(id_tgt, phi).pullbacks == phi.pullbacks);
    }
}

TEST_CASE("evaluation is natural in the algebra") {
    Sampler s(56);
    const AlgebraPtr tgt_alg = make_algebra(2, {1, 2, 1}, 3);
    for (int i = 0; i < 100; ++i) {
        const AlgebraMorphism f = s.algebra_morphism(kAlg, tgt_alg);
        const Morphism phi = s.morphism(kSrc, kTgt, 3);
        const LambdaPoint x = s.point(kAlg, kSrc);
        CHECK(point_map(f, evaluate(phi, x)) == evaluate(phi, point_map(f, x)));
    }
}

TEST_CASE("naturality also holds into a lower-cap algebra") {
    Sampler s(57);
    const AlgebraPtr low = make_algebra(2, {2, 1, 1}, 2);
    for (int i = 0; i < 60; ++i) {
        const AlgebraMorphism f = s.algebra_morphism(kAlg, low);
        const Morphism phi = s.morphism(kSrc, kTgt, 3);
        const LambdaPoint x = s.point(kAlg, kSrc);
        CHECK(point_map(f, evaluate(phi, x)) == evaluate(phi, point_map(f, x)));
    }
}

TEST_CASE("zero-degree-rules application is additive and blockwise") {
    Sampler s(58);
    for (int i = 0; i < 60; ++i) {
        const BlockDiagMap l = s.blockdiag(kSrc, kTgt);
        const LambdaPoint v = s.point(kAlg, kSrc);
        const LambdaPoint w = s.point(kAlg, kSrc);
        CHECK(zdr_apply(l, point_add(v, w)) == point_add(zdr_apply(l, v), zdr_apply(l, w)));
    }
    const BlockDiagMap id = blockdiag_identity(kSrc);
    const LambdaPoint v = s.point(kAlg, kSrc);
    CHECK(zdr_apply(id, v) == v);
}

TEST_CASE("zero-degree-rules application is functorial in the map") {
    Sampler s(59);
    for (int i = 0; i < 60; ++i) {
        const BlockDiagMap l = s.blockdiag(kSrc, kTgt);
        const BlockDiagMap m = s.blockdiag(kTgt, kSrc);
        const LambdaPoint v = s.point(kAlg, kSrc);
        CHECK(zdr_apply(blockdiag_compose(m, l), v) == zdr_apply(m, zdr_apply(l, v)));
    }
}

TEST_CASE("linear maps are reconstructed exactly from their point components") {
    Sampler s(60);
    for (int i = 0; i < 100; ++i) {
        const BlockDiagMap l = s.blockdiag(kSrc, kTgt);
        const BlockDiagMap back =
            reconstruct_linear_map([&](const LambdaPoint& v) { return zdr_apply(l, v); },
                                   kSrc, kTgt);
        CHECK(back.blocks == l.blocks);
    }
}

TEST_CASE("reconstruction rejects non-natural component functions") {
    const AlgebraPtr probe = probe_algebra(2);
    // Squaring a base slot is not linear.
    auto square = [&](const LambdaPoint& v) {
        auto comps = v.components;
        comps[0] = gmul(comps[0], comps[0]);
        return make_point(probe, kSrc, comps);
    };
    CHECK_THROWS_AS(reconstruct_linear_map(square, kSrc, kSrc), NotNatural);
    // A constant offset does not map zero to zero.
    auto affine = [&](const LambdaPoint& v) {
        auto comps = v.components;
        comps[0] = comps[0] + GElement::constant(probe, 1);
        return make_point(probe, kSrc, comps);
    };
    CHECK_THROWS_AS(reconstruct_linear_map(affine, kSrc, kSrc), NotNatural);
    // Mixing a generator into a base slot produces an extraneous monomial:
    // the degree-11 slot times the degree-11 generator is degree 0 but not
    // a constant.
    auto mix = [&](const LambdaPoint& v) {
        auto comps = v.components;
        comps[0] = comps[0] + gmul(v.components[4], GElement::generator(probe, 2));
        return make_point(probe, kSrc, comps);
    };
    CHECK_THROWS_AS(reconstruct_linear_map(mix, kSrc, kSrc), NotNatural);
}
