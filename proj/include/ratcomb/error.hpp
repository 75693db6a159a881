#pragma once

#include <stdexcept>
#include <string>

namespace ratcomb {

// Base class for all library errors; the CLI maps these to exit code 3
// (precondition violation).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// reciprocal(f) with f_0 = 0.
class ZeroConstantTerm : public Error {
public:
    explicit ZeroConstantTerm(const std::string& what) : Error(what) {}
};

// Inner series of a composition has a nonzero constant term.
class NonzeroConstantInner : public Error {
public:
    explicit NonzeroConstantInner(const std::string& what) : Error(what) {}
};

// comp_inverse(g) with g_0 != 0 or g_1 = 0.
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

// Input series is truncated below what the operation needs.
class OrderTooSmall : public Error {
public:
    explicit OrderTooSmall(const std::string& what) : Error(what) {}
};

// Bernoulli-style construction with f_N = 0.
class ZeroPivot : public Error {
public:
    explicit ZeroPivot(const std::string& what) : Error(what) {}
};

// The normalized recursion requires f_N = 1.
class PivotNotOne : public Error {
public:
    explicit PivotNotOne(const std::string& what) : Error(what) {}
};

// A Pochhammer product in a denominator hits zero; carries the offending n.
class PochhammerZeroDenominator : public Error {
public:
    PochhammerZeroDenominator(const std::string& what, unsigned long offending)
        : Error(what), offending_index(offending) {}
    unsigned long offending_index;
};

// A groupoid construction would exceed the desk-scale class-count bound.
class SizeExplosion : public Error {
public:
    explicit SizeExplosion(const std::string& what) : Error(what) {}
};

// Malformed textual input (rational strings, series files, catalog names).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace ratcomb
