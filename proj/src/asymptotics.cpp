#include "seljac/asymptotics.hpp"

#include "seljac/combinat.hpp"

namespace seljac {

Rational ik_limit(long k, const Rational& a1, const Rational& b1) {
    if (k < 1) throw DomainError("ik_limit: need k >= 1");
    const Rational d = Rational(2) + a1 + b1;
    if (d.is_zero()) throw DomainError("ik_limit: degenerate scaling 2 + a1 + b1 = 0");
    const Rational u = Rational(1) + a1;
    const Rational ratio = u / d;
    Rational total(0);
    for (long j = 0; j <= k - 1; ++j) {
        Rational inner(0);
        for (long i = 0; i <= k - 1 - j; ++i)
            inner += u.pow(i) * binomial(k, i + j + 1) * binomial(k, i);
        Rational term = ratio.pow(j) * binomial(j + k - 1, j) * inner;
        if (j % 2 != 0) term = -term;
        total += term;
    }
    return u / (Rational(k) * d.pow(k)) * total;
}

Rational ik_limit(const LimitQuery& q) { return ik_limit(q.k, q.params.a1, q.params.b1); }

Rational ik_limit_l1l2(long k, const Rational& l1, const Rational& l2, Limit1Reading reading) {
    if (k < 1) throw DomainError("ik_limit_l1l2: need k >= 1");
    if (l2.is_zero()) throw DomainError("ik_limit_l1l2: need l2 != 0");
    Rational bracket(1);
    for (long j = 1; j <= k - 1; ++j) {
        Rational inner(0);
        const long i_from = reading == Limit1Reading::PrintedSignJ ? 1 : 0;
        for (long i = i_from; i <= j; ++i) {
            Rational term = binomial(j, i) * binomial(i + k - 1, j - 1) * l2.pow(i);
            bool negate = false;
            switch (reading) {
                case Limit1Reading::Corrected: negate = i % 2 != 0; break;
                case Limit1Reading::PrintedSignJ: negate = j % 2 != 0; break;
                case Limit1Reading::BinomialTransform: negate = (j - i) % 2 != 0; break;
            }
            if (negate) term = -term;
            inner += term;
        }
        bracket += l1.pow(j) / Rational(j) * binomial(k, j + 1) * inner;
    }
    return l1 * l2.pow(k) * bracket;
}

Rational ik_limit_regrouped(long k, const Rational& a1, const Rational& b1) {
    if (k < 1) throw DomainError("ik_limit_regrouped: need k >= 1");
    const Rational d = Rational(2) + a1 + b1;
    if (d.is_zero()) throw DomainError("ik_limit_regrouped: degenerate scaling 2 + a1 + b1 = 0");
    const Rational u = Rational(1) + a1;
    const Rational ratio = u / d;
    Rational bracket = u.pow(k - 1);
    for (long i = 0; i <= k - 2; ++i) {
        Rational inner(0);
        for (long j = 0; j <= k - 1 - i; ++j) {
            Rational term = ratio.pow(j) * binomial(j + k - 1, i + j + 1) * binomial(k - i - 1, j);
            if (j % 2 != 0) term = -term;
            inner += term;
        }
        bracket += u.pow(i) / Rational(k - i - 1) * binomial(k, i) * inner;
    }
    return u / d.pow(k) * bracket;
}

std::optional<Rational> limit_special_zero_one(long k, const Rational& a1, const Rational& b1) {
    if (k < 1) throw DomainError("limit_special_zero_one: need k >= 1");
    if ((Rational(2) + a1 + b1).is_zero()) return std::nullopt;
    if (a1 == Rational(-1) && b1 != Rational(-1)) return Rational(0);
    if (b1 == Rational(-1) && a1 != Rational(1)) return Rational(1);
    return std::nullopt;
}

Rational limit_central_binomial(long k) {
    if (k < 1) throw DomainError("limit_central_binomial: need k >= 1");
    return binomial(2 * k, k) / Rational(4).pow(k);
}

Rational limit_catalan(long k, const Rational& l) {
    if (k < 1) throw DomainError("limit_catalan: need k >= 1");
    if (l == Rational(-1)) throw DomainError("limit_catalan: l = -1 is degenerate");
    Rational sum(0);
    for (long i = 0; i <= k - 1; ++i) sum += catalan_triangle(k, i) * l.pow(i);
    return sum / (Rational(1) + l).pow(2 * k - 1);
}

Rational limit_dyck(long k, const Rational& l) {
    if (k < 1) throw DomainError("limit_dyck: need k >= 1");
    if (l == Rational(-1)) throw DomainError("limit_dyck: l = -1 is degenerate");
    Rational sum(0);
    for (long i = 0; i <= 2 * (k - 1); ++i) sum += gimel(k - 1, i) * l.pow(i);
    return l * sum / (Rational(1) + l).pow(2 * k - 1);
}

Rational limit_dyck_alternating(long k, const Rational& l) {
    if (k < 1) throw DomainError("limit_dyck_alternating: need k >= 1");
    if (l == Rational(-1)) throw DomainError("limit_dyck_alternating: l = -1 is degenerate");
    const Rational w = l / (Rational(1) + l).pow(2);
    Rational sum(0);
    for (long i = 1; i <= k; ++i) {
        Rational term = binomial(k - 1, i - 1) * binomial(2 * (i - 1), i - 1) * w.pow(i) / Rational(i);
        if (i % 2 == 0) term = -term;
        sum += term;
    }
    return (l + Rational(1)) * sum;
}

} // namespace seljac
