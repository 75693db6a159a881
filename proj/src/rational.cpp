#include "ratcomb/rational.hpp"

#include <cctype>
#include <ostream>

namespace ratcomb {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
}

} // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    require_nonzero_den(den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s, bool strict) {
    const std::string text(s);
    const auto bad = [&](const char* why) {
        throw ParseError("invalid rational \"" + text + "\": " + why);
    };
    if (s.empty()) bad("empty");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-') { neg = true; ++pos; }
    const auto digits = [&](std::size_t from, std::size_t to) {
        if (from == to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const std::size_t slash = s.find('/', pos);
    mpz_class num, den = 1;
    if (slash == std::string_view::npos) {
        if (!digits(pos, s.size())) bad("expected integer");
        num = mpz_class(std::string(s.substr(pos)));
    } else {
        if (!digits(pos, slash)) bad("expected numerator");
        if (!digits(slash + 1, s.size())) bad("expected denominator");
        num = mpz_class(std::string(s.substr(pos, slash - pos)));
        den = mpz_class(std::string(s.substr(slash + 1)));
        if (sgn(den) == 0) bad("zero denominator");
    }
    if (neg) num = -num;
    Rational r(num, den);
    if (strict && (r.num() != num || r.den() != den))
        bad("not in lowest terms with positive denominator");
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(den(), num());
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                                  : static_cast<unsigned long>(e);
    Rational r(pow_ui(base.num(), k), pow_ui(base.den(), k));
    return r;
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::string to_string(const Rational& r) { return r.str(); }

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class multinomial(unsigned long n, std::span<const unsigned> parts) {
    mpz_class r = factorial(n);
    unsigned long total = 0;
    for (unsigned p : parts) {
        r /= factorial(p);
        total += p;
    }
    if (total != n) throw Error("multinomial: parts do not sum to n");
    return r;
}

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i) r *= x + Rational(static_cast<long>(i));
    return r;
}

Rational pochhammer_k(const Rational& x, unsigned long n, const Rational& step) {
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i)
        r *= x + Rational(static_cast<long>(i)) * step;
    return r;
}

} // namespace ratcomb
