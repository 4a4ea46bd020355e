#include <doctest.h>

#include <array>

#include "klr/cartan.hpp"

using namespace klr;

TEST_CASE("bilinear form values") {
    const auto C = CartanType::c(), A = CartanType::a();
    CHECK(bilinear_form(C, 0, 0) == 4);
    CHECK(bilinear_form(C, 0, 1) == -2);
    CHECK(bilinear_form(C, 1, 0) == -2);
    CHECK(bilinear_form(A, 3, 5) == 0);
    CHECK(bilinear_form(A, -3, -3) == 2);
    CHECK(bilinear_form(A, -1, 0) == -1);
    CHECK_THROWS_AS(bilinear_form(C, -1, 0), Error);
    CHECK_THROWS_AS(bilinear_form(C, 2, -5), Error);
}

TEST_CASE("bilinear form table in type C") {
    const auto C = CartanType::c();
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            int expect = 0;
            if (i == j) expect = i == 0 ? 4 : 2;
            else if (std::abs(i - j) == 1) expect = std::min(i, j) == 0 ? -2 : -1;
            CHECK(bilinear_form(C, i, j) == expect);
        }
    }
}

TEST_CASE("bilinear form is symmetric") {
    for (auto t : {CartanType::a(), CartanType::c()}) {
        const int lo = t.kind == CartanKind::A ? -20 : 0;
        for (int i = lo; i <= 20; ++i)
            for (int j = lo; j <= 20; ++j) REQUIRE(bilinear_form(t, i, j) == bilinear_form(t, j, i));
    }
}

TEST_CASE("cartan pairing") {
    CHECK(cartan_pairing(1, DominantWeight(CartanType::a(), {1, 1})) == 2);
    CHECK(cartan_pairing(0, DominantWeight(CartanType::c(), {3})) == 0);
    CHECK(cartan_pairing(5, DominantWeight(CartanType::c(), {5})) == 1);
}

TEST_CASE("weights validate type C charges") {
    CHECK_THROWS_AS(DominantWeight(CartanType::c(), {-1}), Error);
    CHECK_NOTHROW(DominantWeight(CartanType::a(), {-1, 4}));
    CHECK(DominantWeight(CartanType::a(), {4, 4}).level() == 2);
}

TEST_CASE("generator degrees") {
    const auto C = CartanType::c(), A = CartanType::a();
    const std::array<Residue, 1> zero{0};
    const std::array<Residue, 2> two_three{2, 3};
    CHECK(generator_degree(C, Generator::Dot, zero) == 4);
    CHECK(generator_degree(C, Generator::Crossing, two_three) == -1);
    CHECK(generator_degree(A, Generator::Idempotent, {}) == 0);
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            const std::array<Residue, 2> ij{i, j}, ji{j, i};
            CHECK(generator_degree(C, Generator::Crossing, ij) + generator_degree(C, Generator::Crossing, ji) ==
                  2 * bilinear_form(C, i, j));
        }
    }
}

TEST_CASE("root vector arithmetic") {
    const RootVector a = RootVector::simple(0) + RootVector::simple(1);
    CHECK(a - RootVector::simple(0) == RootVector::simple(1));
    CHECK(RootVector({{0, 2}, {1, 2}}).height() == 4);
    try {
        (void)(RootVector::simple(0) - RootVector::simple(1));
        FAIL("subtraction below zero must throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).rfind("not a subroot", 0) == 0);
    }
    CHECK(RootVector({{0, 0}, {3, 1}}).entries().size() == 1);
    CHECK(RootVector({{0, 1}, {1, 2}}).to_string() == "a0+2a1");
    CHECK(RootVector().to_string() == "0");
    CHECK(RootVector::simple(1).le(a));
    CHECK_FALSE(a.le(RootVector::simple(1)));
}

TEST_CASE("cartan type parsing") {
    CHECK(parse_cartan_type("c") == CartanType::c());
    CHECK(parse_cartan_type("A") == CartanType::a());
    CHECK_THROWS_AS(parse_cartan_type("b"), Error);
}
