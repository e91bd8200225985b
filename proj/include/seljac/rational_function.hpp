#pragma once

#include "seljac/unipoly.hpp"

namespace seljac {

/// Reduced quotient of two UniPoly: gcd(num, den) = 1 and the denominator is
/// monic, so equal values have equal representations.  The variable is
/// whatever the caller says it is (N throughout this project).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(const UniPoly& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Exact evaluation; throws DomainError where the denominator vanishes.
    Rational evaluate(const Rational& x) const;

    /// Limit as the variable goes to +infinity: 0 if deg num < deg den, the
    /// leading-coefficient ratio if equal, DomainError("limit infinite") if
    /// the numerator dominates.
    Rational limit_at_infinity() const;

    std::string to_string(const std::string& var = "N") const;

private:
    void reduce();
    UniPoly num_, den_;
};

} // namespace seljac
