#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratcomb/poly_series.hpp"
#include "ratcomb/polynomial.hpp"
#include "ratcomb/series.hpp"

namespace ratcomb {

// Row of generalized Bernoulli numbers B_{N,0..T} for a series f:
// the coefficients of (x^N/N!)/(f - pi_N f). B_{N,0} = 1/f_N.
struct BernoulliRow {
    std::string label;  // descriptor of f, informational
    unsigned shift = 0; // N
    std::vector<Rational> values;

    const Rational& at(std::size_t n) const { return values.at(n); }
    std::size_t count() const { return values.size() - 1; }
};

// Series-division route: reciprocal(divided_shift(f, N)) up to index `count`.
// Requires f_N != 0 (ZeroPivot) and f.order() >= N + count (OrderTooSmall).
BernoulliRow bernoulli_numbers(const EgfSeries& f, unsigned n_shift,
                               std::size_t count, std::string label = {});

// Triangular recursion route; requires the normalized pivot f_N = 1
// (PivotNotOne). Agrees exactly with bernoulli_numbers.
BernoulliRow bernoulli_via_recursion(const EgfSeries& f, unsigned n_shift,
                                     std::size_t count, std::string label = {});

// B_{N,n}(x) = sum over k of binom(n,k) B_{N,n-k} f_k x^k.
QPolynomial bernoulli_polynomial(const EgfSeries& f, unsigned n_shift, unsigned n);

// Residual of the generating identity for Bernoulli polynomials:
// [sum B_{N,n}(x) y^n/n!] (f(y) - pi_N f(y)) - f(xy) y^N/N!, truncated at
// `order`; identically zero by construction.
PolySeries bernoulli_poly_genfun_residual(const EgfSeries& f, unsigned n_shift,
                                          std::size_t order);

// sum over n <= deg(p) of f_n D^n(p)/n! where D = d/dx.
QPolynomial apply_series_of_d(const EgfSeries& f, const QPolynomial& p);

// Right inverse G for O = f(D) - pi_N(f)(D):
// G(p) = N! sum over n of B_{N,n} D^n(I^N p)/n!, with I the antiderivative
// fixing the integration constant to 0. O(G(p)) = p exactly.
QPolynomial right_inverse_apply(const EgfSeries& f, unsigned n_shift,
                                const QPolynomial& p);

// Returns (B_{1,2n}^sin, (-1)^{n-1}(2^{2n}-2) B_{2n}); the two agree, and the
// odd-index neighbour B_{1,2n+1}^sin is checked to vanish.
std::pair<Rational, Rational> sin_cos_identity_check(unsigned n);

} // namespace ratcomb
