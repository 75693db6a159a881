#include "ratcomb/poly_series.hpp"

#include <algorithm>

#include "ratcomb/error.hpp"

namespace ratcomb {

PolySeries::PolySeries(std::vector<QPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("PolySeries needs at least the constant coefficient");
}

PolySeries PolySeries::zero(std::size_t order) {
    return PolySeries(std::vector<QPolynomial>(order + 1));
}

bool PolySeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const QPolynomial& p) { return p.is_zero(); });
}

PolySeries ps_add(const PolySeries& a, const PolySeries& b) {
    const std::size_t t = std::min(a.order(), b.order());
    std::vector<QPolynomial> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) c[n] = a[n] + b[n];
    return PolySeries(std::move(c));
}

PolySeries ps_sub(const PolySeries& a, const PolySeries& b) {
    const std::size_t t = std::min(a.order(), b.order());
    std::vector<QPolynomial> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) c[n] = a[n] - b[n];
    return PolySeries(std::move(c));
}

PolySeries ps_mul_series(const PolySeries& a, const EgfSeries& s) {
    const std::size_t t = std::min(a.order(), s.order());
    std::vector<QPolynomial> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        QPolynomial acc;
        for (std::size_t k = 0; k <= n; ++k)
            acc += (Rational(binomial(n, k)) * s[n - k]) * a[k];
        c[n] = acc;
    }
    return PolySeries(std::move(c));
}

PolySeries scaled_argument_series(const EgfSeries& f, std::size_t order) {
    if (f.order() < order) throw OrderTooSmall("scaled_argument_series: order exceeds input");
    std::vector<QPolynomial> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c[n] = QPolynomial::monomial(f[n], static_cast<unsigned>(n));
    return PolySeries(std::move(c));
}

} // namespace ratcomb
