#include "seljac/combinat.hpp"

#include <algorithm>

namespace seljac {

Rational binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Rational(0);
    if (k > n - k) k = n - k;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational stirling2(long p, long k) {
    if (p < 0 || k < 0) throw DomainError("stirling2: arguments must be nonnegative");
    if (k > p) return Rational(0);
    if (p == 0) return Rational(1);
    // row-by-row up the triangle
    std::vector<mpz_class> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (long n = 1; n <= p; ++n) {
        for (long j = std::min(n, k); j >= 1; --j)
            row[static_cast<size_t>(j)] = j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0;
    }
    return Rational(row[static_cast<size_t>(k)]);
}

UniPoly inverse_binomial_transform(const PolySequence& seq, long k) {
    if (k < 0 || k >= static_cast<long>(seq.size()))
        throw DomainError("inverse_binomial_transform: order k out of range");
    UniPoly acc;
    for (long i = 0; i <= k; ++i) {
        Rational c = binomial(k, i);
        if ((k - i) % 2 != 0) c = -c;
        acc += seq[static_cast<size_t>(i)] * c;
    }
    return acc;
}

std::vector<Rational> divided_difference_coeffs(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw DomainError("divided_difference_coeffs: no points");
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("divided_difference_coeffs: repeated abscissa " +
                                  points[i].first.to_fraction_string());
    std::vector<Rational> table(n);
    for (size_t i = 0; i < n; ++i) table[i] = points[i].second;
    std::vector<Rational> coeffs;
    coeffs.reserve(n);
    coeffs.push_back(table[0]);
    for (size_t order = 1; order < n; ++order) {
        for (size_t i = 0; i + order < n; ++i)
            table[i] = (table[i + 1] - table[i]) / (points[i + order].first - points[i].first);
        coeffs.push_back(table[0]);
    }
    return coeffs;
}

UniPoly p_poly(long i, long k, const Rational& a, const Rational& b) {
    if (i < 0 || i > k) throw DomainError("p_poly: need 0 <= i <= k");
    UniPoly acc(Rational(1));
    for (long j = 0; j <= k - i - 1; ++j) acc *= UniPoly::linear(Rational(j) + a, Rational(1));
    for (long j = 0; j <= i - 1; ++j) acc *= UniPoly::linear(b - Rational(j), Rational(1));
    return acc;
}

UniPoly t_transform(const PolySequence& seq, long k, const Rational& a, const Rational& b) {
    if (k < 0 || k >= static_cast<long>(seq.size()))
        throw DomainError("t_transform: order k out of range");
    std::vector<UniPoly> twisted;
    twisted.reserve(static_cast<size_t>(k) + 1);
    for (long i = 0; i <= k; ++i) twisted.push_back(p_poly(i, k, a, b) * seq[static_cast<size_t>(i)]);
    UniPoly r = inverse_binomial_transform(PolySequence(std::move(twisted)), k);
    return (k % 2 != 0) ? -r : r;
}

Rational catalan_triangle(long k, long i) {
    if (k < 1 || i < 0 || i > k - 1) throw DomainError("catalan_triangle: need k >= 1, 0 <= i <= k-1");
    return Rational(k - i, k) * binomial(2 * k, i);
}

Rational gimel(long k, long i) {
    if (k < 0 || i < 0 || i > 2 * k) throw DomainError("gimel: need k >= 0, 0 <= i <= 2k");
    return binomial(k, (i + 1) / 2) * binomial(k, i / 2);
}

Rational convention_product(long lo, long hi, const std::function<Rational(long)>& f) {
    Rational acc(1);
    if (lo <= hi) {
        for (long i = lo; i <= hi; ++i) acc *= f(i);
    } else {
        // telescoping extension: lo = hi+1 is empty, beyond that invert
        for (long i = hi + 1; i <= lo - 1; ++i) acc /= f(i);
    }
    return acc;
}

} // namespace seljac
