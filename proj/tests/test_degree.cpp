#include <doctest.h>

#include "z2n/degree.hpp"

using namespace z2n;

TEST_CASE("degree enumeration is lexicographic with the zero degree first") {
    const auto degs = enumerate_degrees(2);
    REQUIRE(degs.size() == 4);
    CHECK(degs[0].to_string() == "00");
    CHECK(degs[1].to_string() == "01");
    CHECK(degs[2].to_string() == "10");
    CHECK(degs[3].to_string() == "11");
    for (std::size_t i = 0; i < degs.size(); ++i) CHECK(degs[i].index() == i);
    for (std::size_t i = 0; i + 1 < degs.size(); ++i) CHECK(degs[i] < degs[i + 1]);
}

TEST_CASE("degree enumeration covers 2^n distinct values for n up to 4") {
    for (int n = 1; n <= 4; ++n) {
        const auto degs = enumerate_degrees(n);
        REQUIRE(degs.size() == (std::size_t(1) << n));
        for (std::size_t i = 0; i < degs.size(); ++i) {
            CHECK(Degree::from_index(n, i) == degs[i]);
            for (std::size_t j = i + 1; j < degs.size(); ++j) CHECK(degs[i] != degs[j]);
        }
    }
}

TEST_CASE("addition is componentwise mod 2 and every degree is self-inverse") {
    const auto degs = enumerate_degrees(3);
    for (const auto& a : degs) {
        CHECK((a + a).is_zero());
        CHECK(a + Degree::zero(3) == a);
        for (const auto& b : degs) CHECK(a + b == b + a);
    }
}

TEST_CASE("scalar product over the integers distinguishes parity") {
    const Degree d01 = Degree::from_string("01");
    const Degree d10 = Degree::from_string("10");
    const Degree d11 = Degree::from_string("11");
    CHECK(scalar_product(d01, d01) == 1);
    CHECK(scalar_product(d01, d10) == 0);
    CHECK(scalar_product(d11, d11) == 2);
    CHECK(scalar_product(d11, d01) == 1);
    CHECK(koszul_sign(d01, d01) == -1);
    CHECK(koszul_sign(d11, d11) == 1);
    CHECK(koszul_sign(d01, d10) == 1);
    CHECK(koszul_sign(d11, d10) == -1);
}

TEST_CASE("koszul sign is symmetric and biadditive in exponent") {
    const auto degs = enumerate_degrees(3);
    for (const auto& a : degs)
        for (const auto& b : degs) {
            CHECK(koszul_sign(a, b) == koszul_sign(b, a));
            for (const auto& c : degs)
                CHECK(koszul_sign(a + b, c) == koszul_sign(a, c) * koszul_sign(b, c));
        }
}

TEST_CASE("bitstring parse and print round trip") {
    for (int n = 1; n <= 3; ++n)
        for (std::size_t i = 0; i < (std::size_t(1) << n); ++i) {
            const Degree d = Degree::from_index(n, i);
            CHECK(Degree::from_string(d.to_string()) == d);
        }
    CHECK_THROWS_AS(Degree::from_string("0a1"), DegreeViolation);
    CHECK_THROWS_AS(Degree::from_string(""), DegreeViolation);
}
