#include "seljac/unipoly.hpp"

#include <sstream>

namespace seljac {

UniPoly UniPoly::monomial(int deg, const Rational& coeff) {
    if (deg < 0) throw DomainError("UniPoly::monomial: negative degree");
    std::vector<Rational> c(static_cast<size_t>(deg) + 1, Rational(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
    if (s.is_zero()) return UniPoly();
    UniPoly r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("UniPoly: division by zero polynomial");
    UniPoly rem(*this);
    std::vector<Rational> quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quot.assign(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
    const Rational lead = divisor.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational q = rem.leading_coeff() / lead;
        quot[static_cast<size_t>(shift)] = q;
        rem -= UniPoly::monomial(shift, q) * divisor;
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return *this * (Rational(1) / leading_coeff());
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (i == 0 || a != Rational(1)) os << a;
        if (i > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

} // namespace seljac
