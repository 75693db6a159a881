#include <doctest.h>

#include "ratcomb/rational.hpp"

using namespace ratcomb;

TEST_CASE("rationals normalize at construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    // normalization is idempotent: re-normalizing a stored value changes nothing
    const Rational r(-6, 8);
    CHECK(Rational(r.num(), r.den()) == r);
    CHECK(r.den() > 0);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("string round trip") {
    CHECK(Rational(-691, 2730).str() == "-691/2730");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::from_string("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational::from_string("-15/12") == Rational(-5, 4));  // lenient
    CHECK_THROWS_AS(Rational::from_string("-15/12", true), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("x"), ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), ParseError);
}

TEST_CASE("pochhammer symbols") {
    // (1)_n = n!
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(pochhammer(Rational(1), n) == Rational(factorial(n)));
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer_k(Rational(2), 3, Rational(2)) == Rational(48));  // 2*4*6
    CHECK(pochhammer_k(Rational(2), 2, Rational(3)) / Rational(9) ==
          pochhammer(Rational(2, 3), 2));
    CHECK(pochhammer(Rational(-3), 5) == Rational(0));  // hits zero
}

TEST_CASE("pochhammer k-symbol scaling law") {
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (unsigned n = 0; n <= 10; ++n) {
                CHECK(pochhammer_k(Rational(a), n, Rational(b)) /
                          Rational(b).pow(static_cast<long>(n)) ==
                      pochhammer(Rational(a, b), n));
            }
}

TEST_CASE("integer helpers") {
    CHECK(binomial(14, 7) == 3432);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(12) == 479001600);
    const std::vector<unsigned> parts = {2, 1, 1};
    CHECK(multinomial(4, parts) == 12);
}
