#pragma once

#include <map>
#include <vector>

#include "seljac/partition.hpp"
#include "seljac/rational.hpp"

namespace seljac {

/// Multivariate polynomial in a fixed number of variables, stored as
/// exponent-vector -> coefficient.  Expansion carrier for the brute-force
/// integrator; term counts stay small because n <= 5 there.
class MonomialPoly {
public:
    explicit MonomialPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw DomainError("MonomialPoly: need at least one variable");
    }

    static MonomialPoly constant(int nvars, const Rational& c);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const std::vector<int>& exps, const Rational& coeff);

    MonomialPoly& operator+=(const MonomialPoly& o);
    friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
    friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
    friend MonomialPoly operator*(const MonomialPoly& a, const Rational& s);

    friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Invariance under all adjacent variable swaps.
    bool is_symmetric() const;

private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

/// p_k = x_1^k + ... + x_n^k.
MonomialPoly power_sum_poly(long k, int n);

/// Schur polynomial s_lambda(x_1..x_n) by direct semistandard-tableau
/// enumeration (zero when length(lambda) > n).  Deliberately independent of
/// the product formula in schur_moments so the two can check each other.
MonomialPoly schur_poly(const Partition& lambda, int n);

/// prod_{i<j} (x_i - x_j)^2, expanded via the permutation determinant and
/// squared; cached per n.
const MonomialPoly& vandermonde_squared(int n);

/// Applies the Beta-moment functional x^m -> prod_{j<m} (a+j)/(a+b+j)
/// variable by variable and sums.  This equals the integral of poly against
/// prod x^(a-1)(1-x)^(b-1) dx divided by B(a,b)^n.
Rational beta_moment_functional(const MonomialPoly& poly, const Rational& a, const Rational& b);

/// <f>_{a,b} / <1>_{a,b} by full monomial expansion; exact.  Requires
/// n <= 5, f symmetric in its n variables, a > 0, b > 0.
Rational brute_average(const MonomialPoly& f, int n, const Rational& a, const Rational& b);

/// Jacobi spectral-density parameters: exponents A = a-1, B = b-1 and the
/// dimension N.
struct SpectralParams {
    long A = 0;
    long B = 0;
    long N = 1;
};

/// I_k from the nested-sum evaluation of the one-point density: the Jacobi
/// polynomial squares are expanded and integrated term by term, which leaves
/// only factorials and rising factorials, all exact for integer A, B >= 0.
/// k = 0 returns the normalization N.  Must equal ik_closed(k, A+1, B+1, N).
Rational density_ik(long k, const SpectralParams& sp);

} // namespace seljac
