#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symrel/gf.hpp"

#include <vector>

using namespace symrel;

TEST_CASE("construction and default moduli") {
    Field f2(2);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<unsigned>{0, 1});

    Field f4(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1}); // X^2+X+1

    Field f8(2, 3);
    CHECK(f8.q() == 8);
    Field f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1}); // X^2+1

    CHECK_THROWS_AS(Field(4), error);                                    // non-prime p
    CHECK_THROWS_AS(Field(2, 2, std::vector<unsigned>{1, 0, 1}), error); // X^2+1 = (X+1)^2
    CHECK_THROWS_AS(Field(2, 2, std::vector<unsigned>{1, 1}), error);    // wrong degree
    CHECK_THROWS_AS(Field(2, 2, std::vector<unsigned>{1, 1, 0}), error); // not monic
    CHECK_THROWS_AS(Field(2, 0), error);
    CHECK_THROWS_AS(Field(2, 11), error); // q over the supported maximum
}

TEST_CASE("basic arithmetic examples") {
    Field f2(2);
    CHECK((f2.one() + f2.one()).is_zero());

    Field f4(2, 2);
    FieldElement x = f4.element(2); // X
    CHECK(x * x == f4.element(3));  // X^2 = X+1 mod X^2+X+1

    Field f3(3);
    CHECK(f3.element(2) * f3.element(2) == f3.one());

    CHECK_THROWS_AS(f3.element(1) / f3.zero(), error);
    CHECK_THROWS_AS(f3.add(f3.one(), f2.one()), error); // mixed fields
}

TEST_CASE("pow") {
    Field f4(2, 2);
    for (std::uint32_t i = 0; i < 4; ++i)
        CHECK(f4.pow(f4.element(i), 4) == f4.element(i));
    CHECK(f4.pow(f4.zero(), 0) == f4.one());
    Field f3(3);
    CHECK(f3.pow(f3.element(2), 2) == f3.one());
}

TEST_CASE("frobenius examples") {
    Field f4(2, 2);
    CHECK(f4.frobenius(f4.element(2), 1) == f4.element(3)); // X -> X+1
    CHECK(f4.frobenius(f4.element(2), 0) == f4.element(2));
    CHECK(f4.frobenius(f4.element(2), 2) == f4.element(2)); // j = k fixes everything
    Field f5(5);
    for (std::uint32_t i = 0; i < 5; ++i)
        CHECK(f5.frobenius(f5.element(i), 1) == f5.element(i));
}

TEST_CASE("element order") {
    Field f4(2, 2);
    CHECK(f4.zero().index() == 0);
    CHECK(f4.one().index() == 1);
    Field f9(3, 2);
    // 2X+1 has digits (1,2): index 1 + 2*3 = 7
    CHECK(f9.coeffs(f9.element(7)) == std::vector<unsigned>{1, 2});
    for (std::uint32_t i = 0; i < f9.q(); ++i)
        CHECK(f9.element(i).index() == i);
    CHECK_THROWS_AS(f9.element(9), error);
}

static void check_axioms(const Field& f) {
    const std::uint32_t q = f.q();
    for (std::uint32_t a = 0; a < q; ++a) {
        FieldElement ea = f.element(a);
        CHECK(ea + f.zero() == ea);
        CHECK(ea * f.one() == ea);
        CHECK((ea + (-ea)).is_zero());
        if (a != 0) CHECK(ea * f.inv(ea) == f.one());
        for (std::uint32_t b = 0; b < q; ++b) {
            FieldElement eb = f.element(b);
            CHECK(ea + eb == eb + ea);
            CHECK(ea * eb == eb * ea);
            for (std::uint32_t c = 0; c < q; ++c) {
                FieldElement ec = f.element(c);
                CHECK((ea + eb) + ec == ea + (eb + ec));
                CHECK((ea * eb) * ec == ea * (eb * ec));
                CHECK(ea * (eb + ec) == ea * eb + ea * ec);
            }
        }
    }
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    check_axioms(Field(2));
    check_axioms(Field(3));
    check_axioms(Field(2, 2));
    check_axioms(Field(5));
    check_axioms(Field(7));
    check_axioms(Field(2, 3));
    check_axioms(Field(3, 2));
    check_axioms(Field(11));
    check_axioms(Field(13));
    check_axioms(Field(2, 4));
}

TEST_CASE("x^q = x and Frobenius properties, exhaustive for q <= 81") {
    std::vector<std::pair<unsigned, unsigned>> fields = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
        {5, 2}, {3, 3}, {7, 2}, {2, 6}, {3, 4},
    };
    for (auto [p, k] : fields) {
        Field f(p, k);
        unsigned fixed = 0;
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            FieldElement ea = f.element(a);
            CHECK(f.pow(ea, f.q()) == ea);
            FieldElement fa = f.frobenius(ea);
            if (fa == ea) {
                ++fixed;
                auto d = f.coeffs(ea);
                for (unsigned i = 1; i < f.k(); ++i) CHECK(d[i] == 0);
            }
            CHECK(f.frobenius(ea, f.k()) == ea);
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                FieldElement eb = f.element(b);
                CHECK(f.frobenius(ea + eb) == fa + f.frobenius(eb));
                CHECK(f.frobenius(ea * eb) == fa * f.frobenius(eb));
            }
        }
        CHECK(fixed == f.p());
    }
}
