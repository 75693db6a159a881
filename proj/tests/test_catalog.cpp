#include <doctest.h>

#include "ratcomb/catalog.hpp"

using namespace ratcomb;
using Tag = SeriesName::Tag;

TEST_CASE("builtin coefficients") {
    const EgfSeries z1 = builtin_series({Tag::Zeta, 1}, 6);
    CHECK(z1[0] == Rational(0));
    CHECK(z1[3] == Rational(1, 3));
    const EgfSeries s = builtin_series({Tag::Sin, 0}, 6);
    CHECK(s[3] == Rational(-1));
    CHECK(s[2] == Rational(0));
    CHECK(s[5] == Rational(1));
    const EgfSeries sf = builtin_series({Tag::SFactorialSq, 0}, 6);
    CHECK(sf[2] == Rational(1, 2));
    CHECK(sf[4] == Rational(1, 24));
    const EgfSeries zr2 = builtin_series({Tag::ZetaRising, 2}, 6);
    CHECK(zr2[3] == Rational(1, 12));  // 1/(3*4)
    const EgfSeries e3 = builtin_series({Tag::Ek, 3}, 4);
    CHECK(e3[2] == Rational(1, 4));  // 1/(2!)^2
    CHECK(builtin_series({Tag::Ek, 1}, 6) == builtin_series({Tag::Exp, 0}, 6));
}

TEST_CASE("series name spelling round trip") {
    for (const char* text : {"exp", "sin", "cos", "ek:3", "zeta:2", "zrising:1", "sfac2"})
        CHECK(SeriesName::parse(text).str() == text);
    CHECK_THROWS_AS(SeriesName::parse("tan"), ParseError);
    CHECK_THROWS_AS(SeriesName::parse("ek:0"), ParseError);
    CHECK_THROWS_AS(SeriesName::parse("zeta:"), ParseError);
    CHECK_THROWS_AS(SeriesName::parse("zeta:x"), ParseError);
}

TEST_CASE("signed ratios") {
    CHECK(SignedRatio::parse("1/2").value() == Rational(1, 2));
    CHECK(SignedRatio::parse("-3/4").value() == Rational(-3, 4));
    CHECK(SignedRatio::parse("+5").value() == Rational(5));
    CHECK(SignedRatio::parse("-1/2").str() == "-1/2");
    CHECK_THROWS_AS(SignedRatio::parse("0/2"), ParseError);
    CHECK_THROWS_AS(SignedRatio::parse("1/0"), ParseError);
    CHECK_THROWS_AS(SignedRatio::parse(""), ParseError);
}

TEST_CASE("hypergeometric series") {
    const EgfSeries geo = hypergeom_series(SignedRatio::parse("1/1"),
                                           SignedRatio::parse("1/1"),
                                           SignedRatio::parse("1/1"), 6);
    for (unsigned n = 0; n <= 6; ++n) CHECK(geo[n] == Rational(factorial(n)));
    const EgfSeries h = hypergeom_series(SignedRatio::parse("1/2"),
                                         SignedRatio::parse("1/3"),
                                         SignedRatio::parse("2/5"), 4);
    CHECK(h[0] == Rational(1));
    CHECK(h[2] == Rational(25, 42));
    // (-2/1)_n vanishes from n = 3 on
    CHECK_THROWS_AS(hypergeom_series(SignedRatio::parse("1/2"),
                                     SignedRatio::parse("1/3"),
                                     SignedRatio::parse("-2/1"), 6),
                    PochhammerZeroDenominator);
    try {
        hypergeom_series(SignedRatio::parse("1/2"), SignedRatio::parse("1/3"),
                         SignedRatio::parse("-2/1"), 6);
    } catch (const PochhammerZeroDenominator& e) {
        CHECK(e.offending_index == 3);
    }
    // cancellation: h(a, e; e)_n = (a)_n
    const EgfSeries cancel = hypergeom_series(SignedRatio::parse("3/1"),
                                              SignedRatio::parse("7/2"),
                                              SignedRatio::parse("7/2"), 8);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(cancel[n] == pochhammer(Rational(3), n));
}

TEST_CASE("ek species series") {
    CHECK(ek_species_series(1, 8) == builtin_series({Tag::Exp, 0}, 8));
    CHECK(ek_species_series(3, 4)[1] == Rational(4));  // 2^{(3-1)*1}
    // c_n = 2^{(k-1)n}/(n!)^{k-1}
    for (unsigned k = 1; k <= 3; ++k) {
        const EgfSeries s = ek_species_series(k, 6);
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(s[n] == Rational(pow_ui(mpz_class(2), (k - 1) * n)) /
                              Rational(pow_ui(factorial(n), k - 1)));
    }
}

TEST_CASE("pythagorean identity") {
    const EgfSeries s = builtin_series({Tag::Sin, 0}, 14);
    const EgfSeries c = builtin_series({Tag::Cos, 0}, 14);
    CHECK(series_add(series_mul(s, s), series_mul(c, c)) == EgfSeries::unit(14));
}

TEST_CASE("zrising:1 equals zeta:1") {
    CHECK(builtin_series({Tag::ZetaRising, 1}, 10) ==
          builtin_series({Tag::Zeta, 1}, 10));
}
