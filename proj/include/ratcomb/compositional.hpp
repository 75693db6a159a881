#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratcomb/poly_series.hpp"
#include "ratcomb/polynomial.hpp"
#include "ratcomb/series.hpp"

namespace ratcomb {

// Row of compositional Bernoulli numbers C_{N,n}: the coefficients of the
// compositional inverse of N! x^{1-N}(f - pi_N f). The series starts at
// n = 1; values[0] is the conventional C_{N,0} = 0 so indexing matches
// EgfSeries. C_{N,1} = 1/f_N.
struct CompBernoulliRow {
    std::string label;
    unsigned shift = 1;  // N
    std::vector<Rational> values;

    const Rational& at(std::size_t n) const { return values.at(n); }
    std::size_t count() const { return values.size() - 1; }
};

// Requires N >= 1, f_N != 0 (ZeroPivot), f.order() >= N + count - 1.
CompBernoulliRow comp_bernoulli_numbers(const EgfSeries& f, unsigned n_shift,
                                        std::size_t count, std::string label = {});

// C_{N,n}(x) = sum over compositions a of n with k parts of
// (1/k!) multinomial(n;a) f_k C_{N,a_1}...C_{N,a_k} x^k.
QPolynomial comp_bernoulli_polynomial(const EgfSeries& f, unsigned n_shift,
                                      unsigned n);

// f(xy) with h(y) = sum C_{N,n} y^n/n! substituted for the second slot:
// sum over k of f_k x^k h(y)^k/k!. Coefficient polynomials coincide with
// comp_bernoulli_polynomial (a second computation path for the same object).
PolySeries second_gen_genfun(const EgfSeries& f, unsigned n_shift,
                             std::size_t order);

// (sum C_{N,n} y^n/n!) composed with f(xy); requires f_0 = 0. Each
// coefficient is a monomial in x of degree n.
PolySeries first_generalization(const EgfSeries& f, unsigned n_shift,
                                std::size_t order);

} // namespace ratcomb
