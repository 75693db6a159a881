#include "ratcomb/catalog.hpp"

#include <cctype>

#include "ratcomb/error.hpp"

namespace ratcomb {

namespace {

unsigned parse_positive(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError(std::string(what) + ": missing number");
    unsigned long v = 0;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(std::string(what) + ": expected a positive integer");
        v = v * 10 + static_cast<unsigned long>(ch - '0');
        if (v > 1'000'000) throw ParseError(std::string(what) + ": parameter too large");
    }
    if (v == 0) throw ParseError(std::string(what) + ": must be >= 1");
    return static_cast<unsigned>(v);
}

} // namespace

std::string SeriesName::str() const {
    switch (tag) {
        case Tag::Exp: return "exp";
        case Tag::Sin: return "sin";
        case Tag::Cos: return "cos";
        case Tag::Ek: return "ek:" + std::to_string(param);
        case Tag::Zeta: return "zeta:" + std::to_string(param);
        case Tag::ZetaRising: return "zrising:" + std::to_string(param);
        case Tag::SFactorialSq: return "sfac2";
    }
    throw Error("unreachable series tag");
}

SeriesName SeriesName::parse(std::string_view text) {
    if (text == "exp") return {Tag::Exp, 0};
    if (text == "sin") return {Tag::Sin, 0};
    if (text == "cos") return {Tag::Cos, 0};
    if (text == "sfac2") return {Tag::SFactorialSq, 0};
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view head = text.substr(0, colon);
        const std::string_view tail = text.substr(colon + 1);
        if (head == "ek") return {Tag::Ek, parse_positive(tail, "ek")};
        if (head == "zeta") return {Tag::Zeta, parse_positive(tail, "zeta")};
        if (head == "zrising") return {Tag::ZetaRising, parse_positive(tail, "zrising")};
    }
    throw ParseError("unknown series name \"" + std::string(text) + "\"");
}

Rational SignedRatio::value() const {
    return Rational(static_cast<long>(sign) * static_cast<long>(num),
                    static_cast<long>(den));
}

std::string SignedRatio::str() const {
    return (sign < 0 ? "-" : "") + std::to_string(num) + "/" + std::to_string(den);
}

SignedRatio SignedRatio::parse(std::string_view text) {
    SignedRatio r;
    std::string_view rest = text;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        r.sign = rest.front() == '-' ? -1 : 1;
        rest.remove_prefix(1);
    }
    const auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
        r.num = parse_positive(rest, "signed ratio numerator");
        r.den = 1;
    } else {
        r.num = parse_positive(rest.substr(0, slash), "signed ratio numerator");
        r.den = parse_positive(rest.substr(slash + 1), "signed ratio denominator");
    }
    return r;
}

EgfSeries builtin_series(const SeriesName& name, std::size_t order) {
    std::vector<Rational> c(order + 1);
    switch (name.tag) {
        case SeriesName::Tag::Exp:
            for (auto& x : c) x = Rational(1);
            break;
        case SeriesName::Tag::Sin:
            for (std::size_t n = 1; n <= order; n += 2)
                c[n] = (n / 2) % 2 == 0 ? Rational(1) : Rational(-1);
            break;
        case SeriesName::Tag::Cos:
            for (std::size_t n = 0; n <= order; n += 2)
                c[n] = (n / 2) % 2 == 0 ? Rational(1) : Rational(-1);
            break;
        case SeriesName::Tag::Ek:
            for (std::size_t n = 0; n <= order; ++n)
                c[n] = Rational(1, 1) / Rational(pow_ui(factorial(n), name.param - 1));
            break;
        case SeriesName::Tag::Zeta:
            for (std::size_t n = 1; n <= order; ++n)
                c[n] = Rational(1) / Rational(pow_ui(mpz_class(static_cast<unsigned long>(n)), name.param));
            break;
        case SeriesName::Tag::ZetaRising:
            for (std::size_t n = 1; n <= order; ++n) {
                mpz_class rising = 1;
                for (unsigned i = 0; i < name.param; ++i)
                    rising *= static_cast<unsigned long>(n + i);
                c[n] = Rational(1) / Rational(rising);
            }
            break;
        case SeriesName::Tag::SFactorialSq:
            for (std::size_t n = 0; n <= order; ++n)
                c[n] = Rational(1) / Rational(factorial(n));
            break;
    }
    return EgfSeries(std::move(c));
}

EgfSeries hypergeom_series(const SignedRatio& r1, const SignedRatio& r2,
                           const SignedRatio& r3, std::size_t order) {
    const Rational a = r1.value(), b = r2.value(), e = r3.value();
    std::vector<Rational> c(order + 1);
    Rational top1(1), top2(1), bottom(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (bottom.is_zero())
            throw PochhammerZeroDenominator(
                "hypergeom: (" + r3.str() + ")_" + std::to_string(n) + " vanishes",
                static_cast<unsigned long>(n));
        c[n] = top1 * top2 / bottom;
        const Rational i(static_cast<long>(n));
        top1 *= a + i;
        top2 *= b + i;
        bottom *= e + i;
    }
    return EgfSeries(std::move(c));
}

EgfSeries ek_species_series(unsigned k, std::size_t order) {
    if (k < 1) throw Error("ek_species_series: k must be >= 1");
    const EgfSeries base = builtin_series({SeriesName::Tag::Ek, k}, order);
    return series_scale_arg(base, Rational(pow_ui(mpz_class(2), k - 1)));
}

} // namespace ratcomb
