#pragma once

#include <cstddef>
#include <vector>

#include "ratcomb/polynomial.hpp"
#include "ratcomb/series.hpp"

namespace ratcomb {

// Truncated series in y whose coefficients are polynomials in x:
// sum of P_n(x) y^n/n! for n <= T. Houses f(xy) and the Bernoulli-polynomial
// generating identities.
class PolySeries {
public:
    explicit PolySeries(std::vector<QPolynomial> coeffs);
    static PolySeries zero(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const QPolynomial& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<QPolynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    friend bool operator==(const PolySeries& a, const PolySeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolySeries& a, const PolySeries& b) { return !(a == b); }

private:
    std::vector<QPolynomial> coeffs_;
};

PolySeries ps_add(const PolySeries& a, const PolySeries& b);
PolySeries ps_sub(const PolySeries& a, const PolySeries& b);
// Multiply by a scalar series in y (binomial convolution).
PolySeries ps_mul_series(const PolySeries& a, const EgfSeries& s);
// f(xy) as a PolySeries: P_n = f_n x^n.
PolySeries scaled_argument_series(const EgfSeries& f, std::size_t order);

} // namespace ratcomb
