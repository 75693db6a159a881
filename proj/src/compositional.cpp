#include "ratcomb/compositional.hpp"

#include "ratcomb/error.hpp"
#include "ratcomb/oracle.hpp"

namespace ratcomb {

CompBernoulliRow comp_bernoulli_numbers(const EgfSeries& f, unsigned n_shift,
                                        std::size_t count, std::string label) {
    if (n_shift < 1) throw Error("comp_bernoulli_numbers: N must be >= 1");
    if (count < 1) throw Error("comp_bernoulli_numbers: count must be >= 1");
    if (f.order() + 1 < n_shift + count)
        throw OrderTooSmall("comp_bernoulli_numbers: need f up to order N + count - 1");
    if (f[n_shift].is_zero())
        throw ZeroPivot("comp_bernoulli_numbers: f_N = 0");
    const EgfSeries h = comp_inverse(truncate(shifted_normalized(f, n_shift), count));
    return CompBernoulliRow{std::move(label), n_shift, h.coeffs()};
}

QPolynomial comp_bernoulli_polynomial(const EgfSeries& f, unsigned n_shift,
                                      unsigned n) {
    if (n < 1) throw Error("comp_bernoulli_polynomial: n must be >= 1");
    if (f.order() < n)
        throw OrderTooSmall("comp_bernoulli_polynomial: need f up to order n");
    const CompBernoulliRow row = comp_bernoulli_numbers(f, n_shift, n);
    std::vector<Rational> c(n + 1);
    for_each_composition(n, 1, false, [&](const std::vector<unsigned>& parts) {
        const unsigned k = static_cast<unsigned>(parts.size());
        Rational term = Rational(multinomial(n, parts)) / Rational(factorial(k));
        term *= f[k];
        for (unsigned a : parts) term *= row.values[a];
        c[k] += term;
    });
    return QPolynomial(std::move(c));
}

PolySeries second_gen_genfun(const EgfSeries& f, unsigned n_shift,
                             std::size_t order) {
    if (f.order() < order)
        throw OrderTooSmall("second_gen_genfun: need f up to the requested order");
    const CompBernoulliRow row =
        comp_bernoulli_numbers(f, n_shift, order > 0 ? order : 1);
    const EgfSeries h(std::vector<Rational>(row.values.begin(),
                                            row.values.begin() + order + 1));
    std::vector<QPolynomial> out(order + 1);
    out[0] = QPolynomial::constant(f[0]);
    EgfSeries power = EgfSeries::unit(order);
    Rational kfact(1);
    for (std::size_t k = 1; k <= order; ++k) {
        power = series_mul(power, h);
        kfact *= Rational(static_cast<long>(k));
        const Rational scale = f[k] / kfact;
        for (std::size_t n = k; n <= order; ++n)
            out[n] += QPolynomial::monomial(scale * power[n], static_cast<unsigned>(k));
    }
    return PolySeries(std::move(out));
}

PolySeries first_generalization(const EgfSeries& f, unsigned n_shift,
                                std::size_t order) {
    if (!f[0].is_zero())
        throw NonzeroConstantInner("first_generalization: f_0 must be zero");
    if (f.order() < order)
        throw OrderTooSmall("first_generalization: need f up to the requested order");
    const CompBernoulliRow row =
        comp_bernoulli_numbers(f, n_shift, order > 0 ? order : 1);
    std::vector<QPolynomial> out(order + 1);
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc(0);
        for_each_composition(n, 1, false, [&](const std::vector<unsigned>& parts) {
            const unsigned k = static_cast<unsigned>(parts.size());
            Rational term = Rational(multinomial(n, parts)) / Rational(factorial(k));
            term *= row.values[k];
            for (unsigned a : parts) term *= f[a];
            acc += term;
        });
        out[n] = QPolynomial::monomial(acc, n);
    }
    return PolySeries(std::move(out));
}

} // namespace ratcomb
