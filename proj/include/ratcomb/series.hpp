#pragma once

#include <cstddef>
#include <vector>

#include "ratcomb/rational.hpp"

namespace ratcomb {

// Truncated exponential generating function: sum of c_n x^n/n! for n <= T,
// with T the truncation order. Values are immutable after construction; all
// operations below are pure and propagate the minimum operand order unless
// stated otherwise.
class EgfSeries {
public:
    // order = coeffs.size() - 1; coeffs must be non-empty.
    explicit EgfSeries(std::vector<Rational> coeffs);

    static EgfSeries zero(std::size_t order);
    static EgfSeries unit(std::size_t order);      // 1
    static EgfSeries identity(std::size_t order);  // x (order >= 1)
    static EgfSeries basis(std::size_t n, std::size_t order);  // x^n/n!

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const EgfSeries& a, const EgfSeries& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

EgfSeries truncate(const EgfSeries& f, std::size_t order);

EgfSeries series_add(const EgfSeries& f, const EgfSeries& g);
EgfSeries series_sub(const EgfSeries& f, const EgfSeries& g);
EgfSeries series_neg(const EgfSeries& f);
// Coefficient-wise scalar multiple c*f.
EgfSeries series_scale(const Rational& c, const EgfSeries& f);
// EGF product: c_n = sum over k of binom(n,k) f_k g_{n-k}.
EgfSeries series_mul(const EgfSeries& f, const EgfSeries& g);
// f(lambda * x): c_n = lambda^n f_n.
EgfSeries series_scale_arg(const EgfSeries& f, const Rational& lambda);
// N-projection: keeps coefficients below index N, zeroes the rest.
EgfSeries pi_n(const EgfSeries& f, std::size_t n);

// Multiplicative inverse; requires f_0 != 0 (ZeroConstantTerm).
EgfSeries reciprocal(const EgfSeries& f);

// f(g(x)); requires g_0 = 0 (NonzeroConstantInner).
EgfSeries compose(const EgfSeries& f, const EgfSeries& g);

// Compositional inverse h with g(h(x)) = h(g(x)) = x up to the order;
// requires g_0 = 0 and g_1 != 0 (NotInvertible). Triangular recursion:
// h_1 = 1/g_1 and h_n is the unique value killing the x^n coefficient of
// g(h(x)).
EgfSeries comp_inverse(const EgfSeries& g);

// N! (f - pi_N f)/x^N: order drops by N; c_n = N! n! f_{n+N}/(n+N)!.
EgfSeries divided_shift(const EgfSeries& f, std::size_t n_shift);

// N! x^{1-N}(f - pi_N f): c_0 = 0, c_n = N! n! f_{N+n-1}/(N+n-1)! for n >= 1;
// requires N >= 1; output order T_f - N + 1.
EgfSeries shifted_normalized(const EgfSeries& f, std::size_t n_shift);

} // namespace ratcomb
