#pragma once

#include <string>
#include <vector>

#include "ratcomb/rational.hpp"

namespace ratcomb {

// Dense exact polynomial in one variable over Q. Stored without trailing
// zero coefficients; the zero polynomial has an empty coefficient vector.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);

    static QPolynomial constant(const Rational& c);
    static QPolynomial monomial(const Rational& c, unsigned k);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^k; zero beyond the degree.
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    // Canonical rendering: descending powers, e.g. "x^3 - 3*x^2 + 2*x",
    // "1/2*x^2 - 1/2*x + 5/72", "0".
    std::string str() const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { a += b; return a; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { a -= b; return a; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const Rational& c, const QPolynomial& p);
    friend QPolynomial operator-(const QPolynomial& p) { return Rational(-1) * p; }
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

QPolynomial poly_derivative(const QPolynomial& p);
// Antiderivative with integration constant fixed to 0.
QPolynomial poly_antiderivative(const QPolynomial& p);

// x(x-1)...(x-n+1); n = 0 gives 1.
QPolynomial falling_factorial_poly(unsigned n);

} // namespace ratcomb
