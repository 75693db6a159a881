#pragma once

#include <string>
#include <string_view>

#include "ratcomb/series.hpp"

namespace ratcomb {

// Named generating series. Textual spellings (used by the CLI):
// exp, sin, cos, ek:K, zeta:M, zrising:M, sfac2.
struct SeriesName {
    enum class Tag { Exp, Sin, Cos, Ek, Zeta, ZetaRising, SFactorialSq };

    Tag tag = Tag::Exp;
    unsigned param = 0;  // K for ek, M for zeta/zrising

    std::string str() const;
    static SeriesName parse(std::string_view text);
};

// Signed ratio +-a/b with positive a, b; the hypergeometric parameter form.
struct SignedRatio {
    int sign = 1;      // +1 or -1
    unsigned num = 1;  // a >= 1
    unsigned den = 1;  // b >= 1

    Rational value() const;
    std::string str() const;
    // Accepts "a/b", "+a/b", "-a/b", and bare "a"; zero parts rejected.
    static SignedRatio parse(std::string_view text);
};

// Coefficients: exp c_n = 1; sin c_{2m+1} = (-1)^m; cos c_{2m} = (-1)^m;
// ek(k) c_n = 1/(n!)^{k-1}; zeta(M) c_0 = 0, c_n = 1/n^M;
// zrising(M) c_0 = 0, c_n = 1/(n(n+1)...(n+M-1)); sfac2 c_n = 1/n!.
EgfSeries builtin_series(const SeriesName& name, std::size_t order);

// c_n = (r1)_n (r2)_n / (r3)_n; requires (r3)_n != 0 for all n <= order
// (PochhammerZeroDenominator otherwise).
EgfSeries hypergeom_series(const SignedRatio& r1, const SignedRatio& r2,
                           const SignedRatio& r3, std::size_t order);

// ek(k) with argument scaled by 2^{k-1}: c_n = 2^{(k-1)n}/(n!)^{k-1}.
EgfSeries ek_species_series(unsigned k, std::size_t order);

} // namespace ratcomb
