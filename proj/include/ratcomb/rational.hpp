#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratcomb/error.hpp"

namespace ratcomb {

// Exact rational scalar. Invariants: denominator > 0, numerator/denominator
// coprime, zero stored as 0/1. Arithmetic is exact; equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den = 1);

    // Accepts "p" or "p/q" with optional leading '-'. With strict set, q must
    // be positive and the fraction already in lowest terms (the SeriesFile
    // wire invariant); otherwise the value is normalized silently.
    static Rational from_string(std::string_view s, bool strict = false);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;
    Rational abs() const;
    // Integer exponent; negative exponents invert (throws on zero base).
    Rational pow(long e) const;

    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

std::string to_string(const Rational& r);

// Exact integer helpers used throughout the coefficient algebra.
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
// n must equal the sum of parts.
mpz_class multinomial(unsigned long n, std::span<const unsigned> parts);
mpz_class pow_ui(const mpz_class& base, unsigned long e);

// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long n);
// Pochhammer k-symbol (x)_{n,k} = x(x+k)(x+2k)...(x+(n-1)k).
Rational pochhammer_k(const Rational& x, unsigned long n, const Rational& step);

} // namespace ratcomb
