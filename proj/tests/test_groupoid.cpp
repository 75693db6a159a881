#include <doctest.h>

#include "ratcomb/catalog.hpp"
#include "ratcomb/groupoid.hpp"

using namespace ratcomb;

TEST_CASE("cardinality of basic groupoids") {
    CHECK(groupoid_cardinality(cyclic_groupoid(3)) == Rational(1, 3));
    CHECK(groupoid_cardinality(cyclic_groupoid(-2)) == Rational(-1, 2));
    CHECK(groupoid_cardinality(discrete_groupoid(5)) == Rational(5));
    CHECK(groupoid_cardinality(GroupoidCard()) == Rational(0));
    CHECK_THROWS_AS(cyclic_groupoid(0), Error);
}

TEST_CASE("union, product, negation") {
    const GroupoidCard z2 = cyclic_groupoid(2);
    const GroupoidCard z3 = cyclic_groupoid(3);
    CHECK(groupoid_cardinality(groupoid_union(z2, z2)) == Rational(1));
    CHECK(groupoid_cardinality(groupoid_product(z2, z3)) == Rational(1, 6));
    CHECK(groupoid_cardinality(groupoid_union(groupoid_negate(z3), z3)) ==
          Rational(0));
    // parity adds mod 2 under products
    CHECK(groupoid_cardinality(groupoid_product(groupoid_negate(z2),
                                                groupoid_negate(z3))) ==
          Rational(1, 6));
}

TEST_CASE("power and pochhammer groupoids") {
    CHECK(groupoid_cardinality(power_groupoid(cyclic_groupoid(2), 3)) ==
          Rational(1, 8));
    CHECK(groupoid_cardinality(power_groupoid(discrete_groupoid(3), 2)) ==
          Rational(9));
    CHECK(groupoid_cardinality(pochhammer_groupoid(discrete_groupoid(1), 2,
                                                   discrete_groupoid(1))) ==
          Rational(2));  // (1)_{2,1} = 1*2
    // |(G)_{n,K}| = (|G|)_{n,|K|} with nontrivial automorphisms
    const GroupoidCard g = cyclic_groupoid(2);
    const GroupoidCard k = discrete_groupoid(3);
    CHECK(groupoid_cardinality(pochhammer_groupoid(g, 3, k)) ==
          pochhammer_k(Rational(1, 2), 3, Rational(3)));
}

TEST_CASE("cyclic chains") {
    CHECK(groupoid_cardinality(cyclic_chain_groupoid(2, 2, 3)) == Rational(1, 10));
    for (long m = 1; m <= 5; ++m)
        for (unsigned n = 0; n <= 4; ++n)
            for (unsigned l = 0; l <= 3; ++l)
                CHECK(groupoid_cardinality(cyclic_chain_groupoid(m, n, l)) ==
                      Rational(1) / pochhammer_k(Rational(m), n,
                                                 Rational(static_cast<long>(l))));
    // negative start: |Zbar_{-3,2,2}| = 1/((-3)(-1)) = 1/3
    CHECK(groupoid_cardinality(cyclic_chain_groupoid(-3, 2, 2)) == Rational(1, 3));
    CHECK_THROWS_AS(cyclic_chain_groupoid(-2, 3, 1), PochhammerZeroDenominator);
}

TEST_CASE("hypergeometric groupoid matches the series") {
    const SignedRatio half = SignedRatio::parse("1/2");
    const SignedRatio third = SignedRatio::parse("1/3");
    const SignedRatio two_fifths = SignedRatio::parse("2/5");
    CHECK(hyper_groupoid_card(half, third, two_fifths, 0) == Rational(1));
    CHECK(hyper_groupoid_card(half, third, two_fifths, 2) == Rational(25, 42));
    CHECK(hyper_groupoid_card(SignedRatio::parse("-1/2"), third, two_fifths, 1) ==
          Rational(-5, 12));
    const EgfSeries h = hypergeom_series(half, third, two_fifths, 5);
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(hyper_groupoid_card(half, third, two_fifths, n) == h[n]);
}

TEST_CASE("action groupoids by orbit-stabilizer enumeration") {
    CHECK(action_groupoid_subsets(3) == Rational(4, 3));
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(action_groupoid_subsets(n) ==
              Rational(pow_ui(mpz_class(2), n)) / Rational(factorial(n)));
    CHECK(action_groupoid_ek(2, 2) == Rational(2));
    CHECK(action_groupoid_ek(2, 3) == Rational(4));
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 5; ++n)
            CHECK(action_groupoid_ek(n, k) ==
                  Rational(pow_ui(mpz_class(2), (k - 1) * n)) /
                      Rational(pow_ui(factorial(n), k - 1)));
    CHECK_THROWS_AS(action_groupoid_subsets(9), SizeExplosion);
    CHECK_THROWS_AS(action_groupoid_ek(6, 2), SizeExplosion);
    CHECK_THROWS_AS(action_groupoid_ek(3, 4), SizeExplosion);
}

TEST_CASE("ek catalog coefficients equal the enumerated cardinalities") {
    for (unsigned k = 1; k <= 3; ++k) {
        const EgfSeries s = ek_species_series(k, 5);
        for (unsigned n = 0; n <= 5; ++n)
            CHECK(s[n] == action_groupoid_ek(n, k));
    }
}

TEST_CASE("class multisets stay canonical") {
    const GroupoidCard g({{2, 0, 1}, {2, 0, 3}, {3, 1, 1}});
    CHECK(g.class_count() == 2);  // the two aut-2 classes merge
    CHECK(groupoid_cardinality(g) == Rational(2) - Rational(1, 3));
}
