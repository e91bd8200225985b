#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "seljac/errors.hpp"

namespace seljac {

/// Arbitrary-precision rational, always reduced, denominator always positive.
/// Zero is 0/1.  Every scalar in the library is one of these; no floating
/// point enters any exact computation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p", "-p", "p/q" or "-p/q" (q > 0 after normalization).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    /// Exact "num/den" rendering, denominator always present ("3" -> "3/1").
    std::string to_fraction_string() const;

    /// Fixed-precision decimal rendering (display only): `digits` significant
    /// digits, ties rounded half-to-even against the exact value.
    std::string to_decimal_string(int digits = 12) const;

    /// Nearest double (display / Monte Carlo reference only).
    double to_double() const { return v_.get_d(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact Rational; n >= 0.
Rational factorial(long n);

/// Rising factorial x(x+1)...(x+n-1); n >= 0.
Rational pochhammer(const Rational& x, long n);

} // namespace seljac
