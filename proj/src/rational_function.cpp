#include "seljac/rational_function.hpp"

namespace seljac {

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Rational lc = den_.leading_coeff();
    if (lc != Rational(1)) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d.is_zero())
        throw DomainError("RationalFunction: denominator vanishes at " + x.to_fraction_string());
    return num_.evaluate(x) / d;
}

Rational RationalFunction::limit_at_infinity() const {
    if (is_zero()) return Rational(0);
    if (num_.degree() < den_.degree()) return Rational(0);
    if (num_.degree() == den_.degree()) return num_.leading_coeff() / den_.leading_coeff();
    throw DomainError("RationalFunction: limit infinite (numerator degree exceeds denominator)");
}

std::string RationalFunction::to_string(const std::string& var) const {
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace seljac
