#include <doctest.h>

#include "ratcomb/polynomial.hpp"

using namespace ratcomb;

TEST_CASE("construction trims trailing zeros") {
    CHECK(QPolynomial(std::vector<Rational>{Rational(1), Rational(0)}).degree() == 0);
    CHECK(QPolynomial(std::vector<Rational>{Rational(0)}).is_zero());
    CHECK(QPolynomial().degree() == -1);
    CHECK(QPolynomial::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("arithmetic and evaluation") {
    const QPolynomial p(std::vector<Rational>{Rational(-1), Rational(0), Rational(3)});  // 3x^2 - 1
    const QPolynomial q(std::vector<Rational>{Rational(1), Rational(1)});                // x + 1
    CHECK((p + q).coeff(0) == Rational(0));
    CHECK((p * q).degree() == 3);
    CHECK((p * q).coeff(3) == Rational(3));
    CHECK(p.eval(Rational(2)) == Rational(11));
    CHECK((p - p).is_zero());
    CHECK((Rational(1, 3) * p).coeff(2) == Rational(1));
}

TEST_CASE("derivative and antiderivative") {
    const QPolynomial p(std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(3)});
    CHECK(poly_derivative(p) ==
          QPolynomial(std::vector<Rational>{Rational(-1), Rational(0), Rational(9)}));
    CHECK(poly_antiderivative(QPolynomial::constant(Rational(1))) ==
          QPolynomial::monomial(Rational(1), 1));
    CHECK(poly_antiderivative(QPolynomial()).is_zero());
    // D(I(p)) = p
    CHECK(poly_derivative(poly_antiderivative(p)) == p);
    // I fixes the integration constant to zero
    CHECK(poly_antiderivative(p).coeff(0) == Rational(0));
}

TEST_CASE("falling factorial polynomials") {
    CHECK(falling_factorial_poly(0) == QPolynomial::constant(Rational(1)));
    CHECK(falling_factorial_poly(2) ==
          QPolynomial(std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}));
    CHECK(falling_factorial_poly(3) ==
          QPolynomial(std::vector<Rational>{Rational(0), Rational(2), Rational(-3), Rational(1)}));
    // value at x = n is n!
    CHECK(falling_factorial_poly(5).eval(Rational(5)) == Rational(120));
    CHECK(falling_factorial_poly(5).eval(Rational(3)) == Rational(0));
}

TEST_CASE("canonical rendering") {
    CHECK(QPolynomial().str() == "0");
    CHECK(falling_factorial_poly(3).str() == "x^3 - 3*x^2 + 2*x");
    CHECK(QPolynomial(std::vector<Rational>{Rational(-1, 4), Rational(1)}).str() == "x - 1/4");
    CHECK(QPolynomial(std::vector<Rational>{Rational(5, 72), Rational(-1, 2), Rational(1, 2)}).str() ==
          "1/2*x^2 - 1/2*x + 5/72");
    CHECK(QPolynomial(std::vector<Rational>{Rational(0), Rational(-1)}).str() == "-x");
    CHECK(QPolynomial::constant(Rational(-3)).str() == "-3");
}
