#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "seljac/rational.hpp"

namespace seljac {

/// Dense univariate polynomial over Rational.  coeffs[i] is the coefficient
/// of x^i; the zero polynomial is the empty list, otherwise the last
/// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& constant) { c_.push_back(constant); normalize(); }
    UniPoly(long constant) : UniPoly(Rational(constant)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(int deg, const Rational& coeff);
    /// a1*x + a0
    static UniPoly linear(const Rational& a0, const Rational& a1) { return UniPoly({a0, a1}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<size_t>(i)];
    }
    Rational leading_coeff() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& x) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const UniPoly& a, const Rational& s);
    friend UniPoly operator*(const Rational& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

    /// Same polynomial scaled to leading coefficient 1; zero stays zero.
    UniPoly monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0,0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Nonempty sequence f_0(x), ..., f_k(x) fed to the binomial-type transforms.
class PolySequence {
public:
    explicit PolySequence(std::vector<UniPoly> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw DomainError("PolySequence: must be nonempty");
    }
    PolySequence(std::initializer_list<UniPoly> entries) : PolySequence(std::vector<UniPoly>(entries)) {}

    size_t size() const { return entries_.size(); }
    const UniPoly& operator[](size_t i) const { return entries_[i]; }
    const std::vector<UniPoly>& entries() const { return entries_; }

private:
    std::vector<UniPoly> entries_;
};

} // namespace seljac
