#include "ratcomb/bernoulli.hpp"

#include "ratcomb/catalog.hpp"
#include "ratcomb/error.hpp"

namespace ratcomb {

BernoulliRow bernoulli_numbers(const EgfSeries& f, unsigned n_shift,
                               std::size_t count, std::string label) {
    if (f.order() < n_shift + count)
        throw OrderTooSmall("bernoulli_numbers: need f up to order N + count");
    if (f[n_shift].is_zero())
        throw ZeroPivot("bernoulli_numbers: f_N = 0");
    const EgfSeries rec = reciprocal(truncate(divided_shift(f, n_shift), count));
    return BernoulliRow{std::move(label), n_shift, rec.coeffs()};
}

BernoulliRow bernoulli_via_recursion(const EgfSeries& f, unsigned n_shift,
                                     std::size_t count, std::string label) {
    if (f.order() < n_shift + count)
        throw OrderTooSmall("bernoulli_via_recursion: need f up to order N + count");
    if (!f[n_shift].is_one())
        throw PivotNotOne("bernoulli_via_recursion: requires f_N = 1");
    std::vector<Rational> b(count + 1);
    b[0] = Rational(1);
    // The printed form of this recursion drops the leading minus sign; the
    // sign below is forced by the defining identity (see DISCREPANCIES.md).
    for (std::size_t n = 1; n <= count; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k)
            acc += Rational(binomial(n_shift + n, k)) * f[n_shift + n - k] * b[k];
        b[n] = -(acc / Rational(binomial(n_shift + n, n)));
    }
    return BernoulliRow{std::move(label), n_shift, std::move(b)};
}

QPolynomial bernoulli_polynomial(const EgfSeries& f, unsigned n_shift, unsigned n) {
    const BernoulliRow row = bernoulli_numbers(f, n_shift, n);
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[k] = Rational(binomial(n, k)) * row.values[n - k] * f[k];
    return QPolynomial(std::move(c));
}

PolySeries bernoulli_poly_genfun_residual(const EgfSeries& f, unsigned n_shift,
                                          std::size_t order) {
    if (n_shift < 1)
        throw Error("bernoulli_poly_genfun_residual: N must be >= 1");
    const BernoulliRow row = bernoulli_numbers(f, n_shift, order);
    std::vector<QPolynomial> polys(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        std::vector<Rational> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            c[k] = Rational(binomial(n, k)) * row.values[n - k] * f[k];
        polys[n] = QPolynomial(std::move(c));
    }
    const PolySeries lhs =
        ps_mul_series(PolySeries(std::move(polys)),
                      truncate(series_sub(f, pi_n(f, n_shift)), order));
    // f(xy) y^N/N! has n-th coefficient binom(n,N) f_{n-N} x^{n-N}.
    std::vector<QPolynomial> rhs(order + 1);
    for (std::size_t n = n_shift; n <= order; ++n)
        rhs[n] = QPolynomial::monomial(Rational(binomial(n, n_shift)) * f[n - n_shift],
                                       static_cast<unsigned>(n - n_shift));
    return ps_sub(lhs, PolySeries(std::move(rhs)));
}

QPolynomial apply_series_of_d(const EgfSeries& f, const QPolynomial& p) {
    const int deg = p.degree();
    if (deg >= 0 && f.order() < static_cast<std::size_t>(deg))
        throw OrderTooSmall("apply_series_of_d: series order below polynomial degree");
    QPolynomial acc;
    QPolynomial dp = p;
    Rational nfact(1);
    for (int n = 0; n <= deg; ++n) {
        if (n > 0) {
            dp = poly_derivative(dp);
            nfact *= Rational(n);
        }
        acc += (f[static_cast<std::size_t>(n)] / nfact) * dp;
    }
    return acc;
}

QPolynomial right_inverse_apply(const EgfSeries& f, unsigned n_shift,
                                const QPolynomial& p) {
    if (p.is_zero()) return QPolynomial();
    const std::size_t top = static_cast<std::size_t>(p.degree()) + n_shift;
    const BernoulliRow row = bernoulli_numbers(f, n_shift, top);
    QPolynomial lifted = p;
    for (unsigned i = 0; i < n_shift; ++i) lifted = poly_antiderivative(lifted);
    QPolynomial acc;
    QPolynomial dq = lifted;
    Rational nfact(1);
    for (std::size_t n = 0; n <= top; ++n) {
        if (n > 0) {
            dq = poly_derivative(dq);
            nfact *= Rational(static_cast<long>(n));
        }
        acc += (row.values[n] / nfact) * dq;
    }
    return Rational(factorial(n_shift)) * acc;
}

std::pair<Rational, Rational> sin_cos_identity_check(unsigned n) {
    if (n < 1) throw Error("sin_cos_identity_check: n must be >= 1");
    const EgfSeries sin_series =
        builtin_series({SeriesName::Tag::Sin, 0}, 1 + 2 * n + 1);
    const BernoulliRow sin_row = bernoulli_numbers(sin_series, 1, 2 * n + 1, "sin");
    if (!sin_row.values[2 * n + 1].is_zero())
        throw Error("sin_cos_identity_check: odd-index entry is nonzero");
    const EgfSeries exp_series = builtin_series({SeriesName::Tag::Exp, 0}, 1 + 2 * n);
    const BernoulliRow classical = bernoulli_numbers(exp_series, 1, 2 * n, "exp");
    const Rational scale = Rational(pow_ui(mpz_class(2), 2 * n)) - Rational(2);
    const Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
    return {sin_row.values[2 * n], sign * scale * classical.values[2 * n]};
}

} // namespace ratcomb
