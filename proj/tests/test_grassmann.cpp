#include <doctest.h>

#include "z2n/grassmann.hpp"
#include "z2n/sampling.hpp"

using namespace z2n;

namespace {
const AlgebraPtr kAlg = make_algebra(2, {2, 1, 2}, 3);
}

TEST_CASE("generator squares vanish exactly on odd self-pairing degrees") {
    // degree 01 and 10 pair oddly with themselves, 11 evenly.
    const GElement a = GElement::generator(kAlg, 0); // degree 01
    const GElement c = GElement::generator(kAlg, 2); // degree 10
    const GElement z = GElement::generator(kAlg, 3); // degree 11
    CHECK(gmul(a, a).is_zero());
    CHECK(gmul(c, c).is_zero());
    CHECK_FALSE(gmul(z, z).is_zero());
}

TEST_CASE("graded commutativity with the Koszul sign on homogeneous pairs") {
    Sampler s(11);
    const auto degs = enumerate_degrees(2);
    for (int i = 0; i < 200; ++i) {
        const Degree da = degs[s.rand_int(0, 3)];
        const Degree db = degs[s.rand_int(0, 3)];
        const GElement a = s.homogeneous(kAlg, da);
        const GElement b = s.homogeneous(kAlg, db);
        CHECK(gmul(a, b) == gmul(b, a).scaled(koszul_sign(da, db)));
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    Sampler s(12);
    for (int i = 0; i < 200; ++i) {
        const GElement a = s.element(kAlg), b = s.element(kAlg), c = s.element(kAlg);
        CHECK(gmul(gmul(a, b), c) == gmul(a, gmul(b, c)));
        CHECK(gmul(a, b + c) == gmul(a, b) + gmul(a, c));
        CHECK(gmul(a + b, c) == gmul(a, c) + gmul(b, c));
    }
}

TEST_CASE("unit, zero, and scalar compatibility") {
    Sampler s(13);
    const GElement one = GElement::constant(kAlg, 1);
    for (int i = 0; i < 50; ++i) {
        const GElement a = s.element(kAlg);
        CHECK(gmul(one, a) == a);
        CHECK(gmul(a, one) == a);
        CHECK(gmul(GElement::zero(kAlg), a).is_zero());
        CHECK(gmul(a, GElement::zero(kAlg)).is_zero());
    }
}

TEST_CASE("scalar factors pull out of the product") {
    Sampler s(14);
    for (int i = 0; i < 100; ++i) {
        const GElement a = s.element(kAlg), b = s.element(kAlg);
        const Rational c = s.small_rational();
        CHECK(gmul(a.scaled(c), b) == gmul(a, b).scaled(c));
        CHECK(gmul(a, b.scaled(c)) == gmul(a, b).scaled(c));
    }
}

TEST_CASE("body and soul decompose every element") {
    Sampler s(15);
    for (int i = 0; i < 50; ++i) {
        const GElement a = s.element(kAlg);
        CHECK(GElement::constant(kAlg, a.body()) + a.soul() == a);
        CHECK(a.soul().body() == 0);
    }
}

TEST_CASE("homogeneous parts sum back to the element") {
    Sampler s(16);
    for (int i = 0; i < 50; ++i) {
        const GElement a = s.element(kAlg);
        GElement sum = GElement::zero(kAlg);
        for (const auto& d : enumerate_degrees(2)) sum = sum + a.homogeneous_part(d);
        CHECK(sum == a);
    }
}

TEST_CASE("inverse exists exactly for nonzero body and certifies by product") {
    Sampler s(17);
    const GElement one = GElement::constant(kAlg, 1);
    for (int i = 0; i < 100; ++i) {
        const GElement u = s.invertible_scalar(kAlg);
        const GElement ui = g_invert(u);
        CHECK(gmul(u, ui) == one);
        CHECK(gmul(ui, u) == one);
        CHECK_THROWS_AS(g_invert(s.element(kAlg).soul()), NonInvertible);
    }
}

TEST_CASE("hand inverse of 1 + generator") {
    // (1 + z)^{-1} = 1 - z + z^2 - z^3 truncated at the cap.
    const GElement z = GElement::generator(kAlg, 3);
    const GElement u = GElement::constant(kAlg, 1) + z;
    GElement expect = GElement::constant(kAlg, 1) - z + gmul(z, z) - gmul(gmul(z, z), z);
    CHECK(g_invert(u) == expect);
}

TEST_CASE("truncation to a smaller cap is a ring homomorphism") {
    const AlgebraPtr low = make_algebra(2, {2, 1, 2}, 2);
    Sampler s(18);
    for (int i = 0; i < 200; ++i) {
        const GElement a = s.element(kAlg), b = s.element(kAlg);
        CHECK(truncate_to(gmul(a, b), low) == gmul(truncate_to(a, low), truncate_to(b, low)));
        CHECK(truncate_to(a + b, low) == truncate_to(a, low) + truncate_to(b, low));
    }
}

TEST_CASE("over-cap products are identified with zero") {
    const AlgebraPtr tight = make_algebra(2, {1, 1, 0}, 1);
    const GElement a = GElement::generator(tight, 0);
    const GElement b = GElement::generator(tight, 1);
    CHECK(gmul(a, b).is_zero());
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("monomial enumeration is complete, sorted, and duplicate-free") {
    const auto monos = enumerate_monomials(*kAlg);
    for (std::size_t i = 0; i + 1 < monos.size(); ++i) CHECK(mono_less(monos[i], monos[i + 1]));
    for (const auto& m : monos) {
        CHECK(mono_total(m) <= kAlg->cap());
        // Odd self-pairing generators never exceed exponent 1.
        for (std::size_t g = 0; g < m.size(); ++g)
            if (kAlg->gen_odd(g)) CHECK(m[g] <= 1);
    }
    // Independent count for a small algebra: two odd generators, cap 2 gives
    // {1, a, b, ab}.
    const AlgebraPtr tiny = make_algebra(1, {2}, 2);
    CHECK(enumerate_monomials(*tiny).size() == 4);
}

TEST_CASE("algebra morphisms are ring homomorphisms on random data") {
    Sampler s(19);
    const AlgebraPtr tgt = make_algebra(2, {1, 2, 1}, 3);
    for (int i = 0; i < 60; ++i) {
        const AlgebraMorphism phi = s.algebra_morphism(kAlg, tgt);
        const GElement a = s.element(kAlg), b = s.element(kAlg);
        CHECK(apply_morphism(phi, gmul(a, b)) ==
              gmul(apply_morphism(phi, a), apply_morphism(phi, b)));
        CHECK(apply_morphism(phi, a + b) ==
              apply_morphism(phi, a) + apply_morphism(phi, b));
        CHECK(apply_morphism(phi, GElement::constant(kAlg, 1)) ==
              GElement::constant(tgt, 1));
    }
}

TEST_CASE("morphism images must be homogeneous of the generator degree with zero body") {
    const AlgebraPtr tgt = make_algebra(2, {1, 1, 1}, 3);
    std::vector<GElement> images;
    for (std::size_t g = 0; g < kAlg->num_gens(); ++g)
        images.push_back(GElement::zero(tgt));
    images[0] = GElement::constant(tgt, 1); // wrong: nonzero body, wrong degree
    CHECK_THROWS_AS(AlgebraMorphism(kAlg, tgt, images), DegreeViolation);
}

TEST_CASE("identity morphism fixes every element") {
    Sampler s(20);
    const AlgebraMorphism id = AlgebraMorphism::identity(kAlg);
    for (int i = 0; i < 30; ++i) {
        const GElement a = s.element(kAlg);
        CHECK(apply_morphism(id, a) == a);
    }
}
