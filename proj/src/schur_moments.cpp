#include "seljac/schur_moments.hpp"

#include <algorithm>
#include <map>

#include "seljac/combinat.hpp"

namespace seljac {

Rational selberg_value(long n, long a, long b, long beta) {
    if (n < 1 || a < 1 || b < 1 || beta < 1)
        throw DomainError("selberg_value: all parameters must be positive integers");
    Rational acc(1);
    for (long j = 0; j < n; ++j) {
        acc *= factorial(a + j * beta - 1);
        acc *= factorial(b + j * beta - 1);
        acc *= factorial((j + 1) * beta);
        acc /= factorial(a + b + (n + j - 1) * beta - 1);
        acc /= factorial(beta);
    }
    return acc;
}

Rational schur_average(const Partition& lambda, const Rational& a, const Rational& b, long n) {
    const long ell = lambda.length();
    if (n < ell) throw DomainError("schur_average: need n >= length(lambda)");
    if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("schur_average: need a > 0 and b > 0");
    Rational acc(1);
    for (long i = 1; i <= ell; ++i) {
        const long li = lambda.part(static_cast<size_t>(i - 1));
        for (long j = i + 1; j <= ell; ++j) {
            const long lj = lambda.part(static_cast<size_t>(j - 1));
            acc *= Rational(li - lj + j - i, j - i);
        }
        for (long j = 0; j <= li - 1; ++j) {
            Rational den1(ell + j - i + 1);
            Rational den2 = a + b + Rational(2 * n - i + j - 1);
            if (den2.is_zero())
                throw DomainError("schur_average: vanishing factor a+b+2N-i+j-1 at i=" +
                                  std::to_string(i) + ", j=" + std::to_string(j));
            acc *= Rational(j + n - i + 1) * (a + Rational(n - i + j)) / (den1 * den2);
        }
    }
    return acc;
}

RationalFunction schur_average_rf(const Partition& lambda, const ScalingParams& params, long n_min) {
    const long ell = lambda.length();
    if (n_min < ell) throw DomainError("schur_average_rf: need n_min >= length(lambda)");
    Rational prefactor(1);
    UniPoly num(Rational(1)), den(Rational(1));
    const Rational na1 = Rational(1) + params.a1;            // slope of a(N)+N
    const Rational d1 = Rational(2) + params.a1 + params.b1; // slope of a+b+2N
    for (long i = 1; i <= ell; ++i) {
        const long li = lambda.part(static_cast<size_t>(i - 1));
        for (long j = i + 1; j <= ell; ++j) {
            const long lj = lambda.part(static_cast<size_t>(j - 1));
            prefactor *= Rational(li - lj + j - i, j - i);
        }
        for (long j = 0; j <= li - 1; ++j) {
            num *= UniPoly::linear(Rational(j - i + 1), Rational(1));
            num *= UniPoly::linear(params.a0 + Rational(-i + j), na1);
            prefactor /= Rational(ell + j - i + 1);
            UniPoly f = UniPoly::linear(params.a0 + params.b0 + Rational(-i + j - 1), d1);
            if (f.is_zero())
                throw DomainError("schur_average_rf: degenerate scaling, denominator factor vanishes identically");
            den *= f;
        }
    }
    return RationalFunction(num * prefactor, den);
}

Rational schur_limit(const Partition& lambda, const ScalingParams& params) {
    const Rational d1 = Rational(2) + params.a1 + params.b1;
    if (d1.is_zero()) throw DomainError("schur_limit: degenerate scaling 2 + a1 + b1 = 0");
    const long ell = lambda.length();
    Rational acc = ((Rational(1) + params.a1) / d1).pow(lambda.weight());
    for (long i = 1; i <= ell; ++i) {
        const long li = lambda.part(static_cast<size_t>(i - 1));
        for (long j = i + 1; j <= ell; ++j) {
            const long lj = lambda.part(static_cast<size_t>(j - 1));
            acc *= Rational(li - lj + j - i, j - i);
        }
        for (long j = 0; j <= li - 1; ++j) {
            if (ell + j - i + 1 <= 0)
                throw ConsistencyError("schur_limit: nonpositive factor ell+j-i+1");
            acc /= Rational(ell + j - i + 1);
        }
    }
    return acc;
}

Rational ik_closed(long k, const Rational& a, const Rational& b, long n) {
    if (k < 1) throw DomainError("ik_closed: need k >= 1");
    if (n < 1) throw DomainError("ik_closed: need n >= 1");
    // Term i carries the hook of length i+1.  A vanishing denominator factor
    // a+b+2n+j-2 is tolerated only where the term is provably zero anyway:
    // the numerator must vanish to strictly higher order (as a function of N)
    // and the hook must not fit into n variables, so its true contribution is
    // zero.  Anything else is a genuine singularity of this rearrangement.
    Rational sum(0);
    for (long i = 0; i <= k - 1; ++i) {
        Rational nonzero = binomial(k - 1, i);
        if (i % 2 != 0) nonzero = -nonzero;
        long zeros_num = 0, zeros_den = 0;
        for (long j = -i; j <= k - i - 1; ++j) {
            Rational f1(n + j);
            Rational f2 = a + Rational(n + j - 1);
            Rational g = a + b + Rational(2 * n + j - 2);
            if (f1.is_zero()) ++zeros_num; else nonzero *= f1;
            if (f2.is_zero()) ++zeros_num; else nonzero *= f2;
            if (g.is_zero()) ++zeros_den; else nonzero /= g;
        }
        if (zeros_den == 0) {
            if (zeros_num == 0) sum += nonzero;
            continue;
        }
        if (zeros_num > zeros_den && i >= n) continue;
        throw DomainError("ik_closed: denominator factor a+b+2N+j-2 vanishes at term i=" +
                          std::to_string(i) + " and the term does not vanish with it");
    }
    return sum / factorial(k);
}

Rational ik_via_schur(long k, const Rational& a, const Rational& b, long n) {
    if (k < 1) throw DomainError("ik_via_schur: need k >= 1");
    Rational sum(0);
    for (long i = 0; i <= k - 1; ++i) {
        Partition hook = Partition::hook(k, i);
        if (hook.length() > n) continue;  // Schur polynomial vanishes in n variables
        Rational term = schur_average(hook, a, b, n);
        if (i % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

UniPoly ik_numerator_unreduced(long k, const ScalingParams& params) {
    if (k < 1) throw DomainError("ik_numerator_unreduced: need k >= 1");
    const Rational d1 = Rational(2) + params.a1 + params.b1;
    const Rational d0 = params.a0 + params.b0 - Rational(2);
    const Rational na1 = Rational(1) + params.a1;
    auto big_factor = [&](long j) { return UniPoly::linear(d0 + Rational(j), d1); };
    UniPoly total;
    for (long i = 0; i <= k - 1; ++i) {
        UniPoly term(binomial(k - 1, i) * Rational(i % 2 != 0 ? -1 : 1));
        for (long j = -k + 1; j <= -i - 1; ++j) term *= big_factor(j);
        for (long j = -i; j <= k - 1 - i; ++j) {
            term *= UniPoly::linear(Rational(j), Rational(1));
            term *= UniPoly::linear(params.a0 + Rational(j - 1), na1);
        }
        for (long j = k - i; j <= k - 1; ++j) term *= big_factor(j);
        total += term;
    }
    return total;
}

RationalFunction ik_rf(long k, const ScalingParams& params) {
    if (k < 1) throw DomainError("ik_rf: need k >= 1");
    const Rational d1 = Rational(2) + params.a1 + params.b1;
    if (d1.is_zero()) throw DomainError("ik_rf: degenerate scaling 2 + a1 + b1 = 0");
    const Rational d0 = params.a0 + params.b0 - Rational(2);
    UniPoly den(factorial(k));
    den *= UniPoly::x();
    for (long j = -k + 1; j <= k - 1; ++j) den *= UniPoly::linear(d0 + Rational(j), d1);
    return RationalFunction(ik_numerator_unreduced(k, params), den);
}

namespace {

// Border-strip insertion in beta-number coordinates: adding an r-ribbon to mu
// moves one beta up by r; the sign counts the occupied slots jumped over.
void add_ribbons(const std::map<Partition, Rational>& acc, long r,
                 std::map<Partition, Rational>& out) {
    for (const auto& [mu, coeff] : acc) {
        const long len = mu.length() + r;
        std::vector<long> beta(static_cast<size_t>(len));
        for (long pos = 0; pos < len; ++pos)
            beta[static_cast<size_t>(pos)] = mu.part(static_cast<size_t>(pos)) + (len - 1 - pos);
        for (long pos = 0; pos < len; ++pos) {
            const long target = beta[static_cast<size_t>(pos)] + r;
            long jumped = 0;
            bool occupied = false;
            for (long q = 0; q < len; ++q) {
                if (q == pos) continue;
                const long bq = beta[static_cast<size_t>(q)];
                if (bq == target) { occupied = true; break; }
                if (bq > beta[static_cast<size_t>(pos)] && bq < target) ++jumped;
            }
            if (occupied) continue;
            std::vector<long> nb = beta;
            nb[static_cast<size_t>(pos)] = target;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<long> parts;
            for (long q = 0; q < len; ++q) {
                long part = nb[static_cast<size_t>(q)] - (len - 1 - q);
                if (part > 0) parts.push_back(part);
            }
            Rational c = coeff;
            if (jumped % 2 != 0) c = -c;
            out[Partition(std::move(parts))] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
}

} // namespace

std::vector<std::pair<Partition, Rational>> mn_expand(const Partition& lambda, long max_weight) {
    if (lambda.empty()) throw DomainError("mn_expand: lambda must be nonempty");
    if (lambda.weight() > max_weight)
        throw DomainError("mn_expand: |lambda| = " + std::to_string(lambda.weight()) +
                          " exceeds the cap " + std::to_string(max_weight));
    std::map<Partition, Rational> acc;
    acc[Partition()] = Rational(1);
    for (long r : lambda.parts()) {
        std::map<Partition, Rational> next;
        add_ribbons(acc, r, next);
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

Rational plambda_limit(const Partition& lambda, const ScalingParams& params) {
    const Rational d1 = Rational(2) + params.a1 + params.b1;
    if (d1.is_zero()) throw DomainError("plambda_limit: degenerate scaling 2 + a1 + b1 = 0");
    RationalFunction sum;
    for (const auto& [mu, coeff] : mn_expand(lambda)) {
        RationalFunction term = schur_average_rf(mu, params, mu.length());
        sum += term * RationalFunction(coeff);
    }
    RationalFunction scaled(sum.num(), sum.den() * UniPoly::monomial(static_cast<int>(lambda.length()), Rational(1)));
    if (scaled.num().degree() > scaled.den().degree())
        throw ConsistencyError("plambda_limit: <p_lambda>/N^l diverges; expansion degrees " +
                               std::to_string(scaled.num().degree()) + " over " +
                               std::to_string(scaled.den().degree()));
    return scaled.limit_at_infinity();
}

} // namespace seljac
