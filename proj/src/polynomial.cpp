#include "ratcomb/polynomial.hpp"

#include <sstream>

namespace ratcomb {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(const Rational& c) {
    return QPolynomial(std::vector<Rational>{c});
}

QPolynomial QPolynomial::monomial(const Rational& c, unsigned k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return QPolynomial(std::move(v));
}

Rational QPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational QPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(r));
}

QPolynomial operator*(const Rational& c, const QPolynomial& p) {
    std::vector<Rational> r(p.coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * p.coeffs_[i];
    return QPolynomial(std::move(r));
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPolynomial poly_derivative(const QPolynomial& p) {
    if (p.degree() < 1) return QPolynomial();
    std::vector<Rational> r(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = Rational(static_cast<long>(i + 1)) * p.coeff(i + 1);
    return QPolynomial(std::move(r));
}

QPolynomial poly_antiderivative(const QPolynomial& p) {
    if (p.is_zero()) return QPolynomial();
    std::vector<Rational> r(static_cast<std::size_t>(p.degree()) + 2);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        r[i + 1] = p.coeff(i) / Rational(static_cast<long>(i + 1));
    return QPolynomial(std::move(r));
}

QPolynomial falling_factorial_poly(unsigned n) {
    QPolynomial r = QPolynomial::constant(1);
    for (unsigned i = 0; i < n; ++i) {
        // multiply by (x - i)
        r = r * QPolynomial(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    }
    return r;
}

} // namespace ratcomb
