#pragma once

#include <utility>
#include <vector>

#include "seljac/partition.hpp"
#include "seljac/rational.hpp"
#include "seljac/rational_function.hpp"

namespace seljac {

/// Linear scaling laws a(N) = a1*N + a0 and b(N) = b1*N + b0.
struct ScalingParams {
    Rational a1, a0, b1, b0;

    static ScalingParams constant(const Rational& a, const Rational& b) {
        return {Rational(0), a, Rational(0), b};
    }

    Rational a_at(long n) const { return a1 * Rational(n) + a0; }
    Rational b_at(long n) const { return b1 * Rational(n) + b0; }
};

/// Selberg product S_N(a, b, beta) for positive integer parameters, where
/// every Gamma value collapses to a factorial.  This is N! times the
/// normalization <1>_{a,b} used by the averages below (all exposed averages
/// are ratios, so the N! never shows up elsewhere).
Rational selberg_value(long n, long a, long b, long beta);

/// <s_lambda>_{a,b} / <1>_{a,b} over the unitary Jacobi weight, evaluated as
/// the finite product formula (so rational a, b are exact).  Requires
/// n >= length(lambda) and a, b > 0.
Rational schur_average(const Partition& lambda, const Rational& a, const Rational& b, long n);

/// The same product assembled symbolically in N under linear scalings;
/// valid for all integer N >= n_min >= length(lambda).
RationalFunction schur_average_rf(const Partition& lambda, const ScalingParams& params, long n_min);

/// Exact limit of <s_lambda> / (N^{|lambda|} <1>) as N -> infinity.
/// Requires 2 + a1 + b1 != 0.
Rational schur_limit(const Partition& lambda, const ScalingParams& params);

/// I_k = <p_k>/<1> via the hook-sum closed form.  Requires k >= 1, n >= 1.
/// A vanishing factor a + b + 2n + j - 2 is tolerated only in terms whose
/// hook exceeds n and whose numerator vanishes to strictly higher order (the
/// term is zero); any other vanishing factor raises DomainError naming the
/// term.
Rational ik_closed(long k, const Rational& a, const Rational& b, long n);

/// I_k assembled from Schur averages of hook shapes; must agree with
/// ik_closed everywhere (hooks longer than n contribute zero).
Rational ik_via_schur(long k, const Rational& a, const Rational& b, long n);

/// The cleared numerator of I_k/N under linear scalings, before any
/// reduction: an alternating sum whose naive degree is 3k-1 but whose true
/// degree is 2k.
UniPoly ik_numerator_unreduced(long k, const ScalingParams& params);

/// I_k/N as a reduced rational function of N.  Requires 2 + a1 + b1 != 0.
RationalFunction ik_rf(long k, const ScalingParams& params);

/// Expansion of the power-sum product p_{lambda_1} * ... * p_{lambda_l} in
/// the Schur basis (iterated border-strip insertion); coefficients are
/// signed integers.  Results are sorted by partition for deterministic
/// output.  |lambda| is capped to keep the partition lattice bounded.
std::vector<std::pair<Partition, Rational>> mn_expand(const Partition& lambda, long max_weight = 12);

/// lim_{N->inf} <p_lambda> / (N^{length(lambda)} <1>), computed exactly by
/// summing Schur-average rational functions over the expansion of p_lambda
/// (the O(N^{|lambda|}) pieces cancel in exact arithmetic) and reading the
/// degree-matched limit off the reduced quotient.
Rational plambda_limit(const Partition& lambda, const ScalingParams& params);

} // namespace seljac
