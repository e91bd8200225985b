#include "seljac/rational.hpp"

#include <cctype>
#include <ostream>

namespace seljac {

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw DomainError("Rational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::string_view rest = text;
    bool neg = false;
    if (rest.front() == '+' || rest.front() == '-') {
        neg = rest.front() == '-';
        rest.remove_prefix(1);
    }
    auto take_digits = [&](std::string_view& sv) {
        std::string out;
        while (!sv.empty() && std::isdigit(static_cast<unsigned char>(sv.front()))) {
            out.push_back(sv.front());
            sv.remove_prefix(1);
        }
        if (out.empty()) bad();
        return out;
    };
    std::string num = take_digits(rest);
    std::string den = "1";
    if (!rest.empty()) {
        if (rest.front() != '/') bad();
        rest.remove_prefix(1);
        if (!rest.empty() && rest.front() == '-') bad();  // sign belongs up front
        den = take_digits(rest);
        if (!rest.empty()) bad();
    }
    mpz_class n(num), d(den);
    if (d == 0) throw DomainError("Rational: zero denominator in '" + std::string(text) + "'");
    if (neg) n = -n;
    return Rational(n, d);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("Rational: 0 raised to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / *this : *this;
    unsigned long m = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Rational acc(1);
    while (m != 0) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    return acc;
}

std::string Rational::to_fraction_string() const {
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::to_decimal_string(int digits) const {
    if (digits < 1) digits = 1;
    if (is_zero()) {
        std::string s = "0.";
        s.append(static_cast<size_t>(digits - 1), '0');
        return digits == 1 ? "0" : s;
    }
    mpz_class p = numerator(), q = denominator();
    bool neg = p < 0;
    if (neg) p = -p;

    // d = floor(log10(p/q)): the unique d with 10^d <= p/q < 10^(d+1).
    long d = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
    auto cmp_pow = [&](long e) {
        // sign of p/q - 10^e
        mpz_class lhs = p, rhs = q;
        if (e >= 0) {
            mpz_class t;
            mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e));
            rhs *= t;
        } else {
            mpz_class t;
            mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(-e));
            lhs *= t;
        }
        return cmp(lhs, rhs);
    };
    while (cmp_pow(d) < 0) --d;
    while (cmp_pow(d + 1) >= 0) ++d;

    // Want round(p/q * 10^(digits-1-d)) with ties to even.
    long shift = digits - 1 - d;
    mpz_class num = p, den = q;
    mpz_class t;
    if (shift >= 0) {
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= t;
    } else {
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= t;
    }
    mpz_class whole, rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class twice = rem * 2;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(whole.get_mpz_t()))) whole += 1;

    std::string mant = whole.get_str();
    if (static_cast<int>(mant.size()) > digits) {
        // rounding carried into a new leading digit (e.g. 999.. -> 1000..)
        mant.pop_back();
        ++d;
    }

    std::string out;
    if (d >= 0 && d <= digits + 2) {
        if (d + 1 >= static_cast<long>(mant.size()))
            mant.append(static_cast<size_t>(d + 1 - mant.size()), '0');
        out = mant.substr(0, static_cast<size_t>(d + 1));
        if (d + 1 < static_cast<long>(mant.size())) out += "." + mant.substr(static_cast<size_t>(d + 1));
    } else if (d < 0 && d >= -4) {
        out = "0.";
        out.append(static_cast<size_t>(-d - 1), '0');
        out += mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(d);
    }
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    if (r.is_integer()) return os << r.numerator().get_str();
    return os << r.to_fraction_string();
}

Rational factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational pochhammer(const Rational& x, long n) {
    if (n < 0) throw DomainError("pochhammer: negative length");
    Rational acc(1);
    for (long i = 0; i < n; ++i) acc *= x + Rational(i);
    return acc;
}

} // namespace seljac
