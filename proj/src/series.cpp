#include "ratcomb/series.hpp"

#include <algorithm>

#include "ratcomb/error.hpp"

namespace ratcomb {

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("EgfSeries needs at least the constant coefficient");
}

EgfSeries EgfSeries::zero(std::size_t order) {
    return EgfSeries(std::vector<Rational>(order + 1));
}

EgfSeries EgfSeries::unit(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = Rational(1);
    return EgfSeries(std::move(c));
}

EgfSeries EgfSeries::identity(std::size_t order) {
    return basis(1, order);
}

EgfSeries EgfSeries::basis(std::size_t n, std::size_t order) {
    if (n > order) throw OrderTooSmall("basis exponent exceeds truncation order");
    std::vector<Rational> c(order + 1);
    c[n] = Rational(1);
    return EgfSeries(std::move(c));
}

bool EgfSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

EgfSeries truncate(const EgfSeries& f, std::size_t order) {
    if (order > f.order()) throw OrderTooSmall("truncate beyond stored order");
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().begin() + order + 1);
    return EgfSeries(std::move(c));
}

EgfSeries series_add(const EgfSeries& f, const EgfSeries& g) {
    const std::size_t t = std::min(f.order(), g.order());
    std::vector<Rational> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) c[n] = f[n] + g[n];
    return EgfSeries(std::move(c));
}

EgfSeries series_sub(const EgfSeries& f, const EgfSeries& g) {
    const std::size_t t = std::min(f.order(), g.order());
    std::vector<Rational> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) c[n] = f[n] - g[n];
    return EgfSeries(std::move(c));
}

EgfSeries series_neg(const EgfSeries& f) {
    return series_scale(Rational(-1), f);
}

EgfSeries series_scale(const Rational& s, const EgfSeries& f) {
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) c[n] = s * f[n];
    return EgfSeries(std::move(c));
}

EgfSeries series_mul(const EgfSeries& f, const EgfSeries& g) {
    const std::size_t t = std::min(f.order(), g.order());
    std::vector<Rational> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k <= n; ++k)
            acc += Rational(binomial(n, k)) * f[k] * g[n - k];
        c[n] = acc;
    }
    return EgfSeries(std::move(c));
}

EgfSeries series_scale_arg(const EgfSeries& f, const Rational& lambda) {
    std::vector<Rational> c(f.order() + 1);
    Rational p(1);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        c[n] = p * f[n];
        p *= lambda;
    }
    return EgfSeries(std::move(c));
}

EgfSeries pi_n(const EgfSeries& f, std::size_t n) {
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t i = 0; i <= f.order() && i < n; ++i) c[i] = f[i];
    return EgfSeries(std::move(c));
}

EgfSeries reciprocal(const EgfSeries& f) {
    if (f[0].is_zero()) throw ZeroConstantTerm("reciprocal: constant term is zero");
    const std::size_t t = f.order();
    std::vector<Rational> b(t + 1);
    const Rational inv0 = f[0].inverse();
    b[0] = inv0;
    for (std::size_t n = 1; n <= t; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k)
            acc += Rational(binomial(n, k)) * f[n - k] * b[k];
        b[n] = -(inv0 * acc);
    }
    return EgfSeries(std::move(b));
}

EgfSeries compose(const EgfSeries& f, const EgfSeries& g) {
    if (!g[0].is_zero())
        throw NonzeroConstantInner("compose: inner series has nonzero constant term");
    const std::size_t t = std::min(f.order(), g.order());
    std::vector<Rational> c(t + 1);
    c[0] = f[0];
    // f(g) = sum over k of f_k g^k / k!; g_0 = 0 makes (g^k)_n vanish for k > n.
    EgfSeries power = EgfSeries::unit(t);
    const EgfSeries gt = truncate(g, t);
    Rational kfact(1);
    for (std::size_t k = 1; k <= t; ++k) {
        power = series_mul(power, gt);
        kfact *= Rational(static_cast<long>(k));
        const Rational scale = f[k] / kfact;
        if (scale.is_zero()) continue;
        for (std::size_t n = k; n <= t; ++n) c[n] += scale * power[n];
    }
    return EgfSeries(std::move(c));
}

EgfSeries comp_inverse(const EgfSeries& g) {
    if (!g[0].is_zero())
        throw NotInvertible("comp_inverse: constant term must be zero");
    if (g.order() < 1 || g[1].is_zero())
        throw NotInvertible("comp_inverse: linear coefficient must be nonzero");
    const std::size_t t = g.order();
    std::vector<Rational> h(t + 1);
    h[1] = g[1].inverse();
    for (std::size_t n = 2; n <= t; ++n) {
        // With h known below n, the x^n coefficient of g(h) is g_1 h_n plus a
        // remainder r; solve g_1 h_n + r = 0.
        const EgfSeries partial(std::vector<Rational>(h.begin(), h.begin() + n + 1));
        const Rational r = compose(truncate(g, n), partial)[n];
        h[n] = -(r / g[1]);
    }
    return EgfSeries(std::move(h));
}

EgfSeries divided_shift(const EgfSeries& f, std::size_t n_shift) {
    if (f.order() < n_shift)
        throw OrderTooSmall("divided_shift: series order below shift");
    const std::size_t t = f.order() - n_shift;
    const Rational nfact(factorial(n_shift));
    std::vector<Rational> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n)
        c[n] = nfact * Rational(factorial(n)) * f[n + n_shift] / Rational(factorial(n + n_shift));
    return EgfSeries(std::move(c));
}

EgfSeries shifted_normalized(const EgfSeries& f, std::size_t n_shift) {
    if (n_shift < 1) throw Error("shifted_normalized: shift must be >= 1");
    if (f.order() < n_shift)
        throw OrderTooSmall("shifted_normalized: series order below shift");
    const std::size_t t = f.order() - n_shift + 1;
    const Rational nfact(factorial(n_shift));
    std::vector<Rational> c(t + 1);
    for (std::size_t n = 1; n <= t; ++n)
        c[n] = nfact * Rational(factorial(n)) * f[n_shift + n - 1] /
               Rational(factorial(n_shift + n - 1));
    return EgfSeries(std::move(c));
}

} // namespace ratcomb
