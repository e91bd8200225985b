#pragma once

#include <optional>

#include "seljac/rational.hpp"
#include "seljac/schur_moments.hpp"

namespace seljac {

/// A limit request: only the slopes a1, b1 of the scalings enter the limit.
struct LimitQuery {
    long k = 1;
    ScalingParams params;
};

/// lim_{N->inf} I_k/N under a = a1*N + a0, b = b1*N + b0, as the normative
/// double sum
///   (1+a1)/(k (2+a1+b1)^k) * sum_j (-1)^j ((1+a1)/(2+a1+b1))^j C(j+k-1,j)
///       * sum_i (1+a1)^i C(k,i+j+1) C(k,i).
/// Requires k >= 1 and 2 + a1 + b1 != 0.  This is the limit of the rational
/// function I_k(N)/N, which exists even for slopes (a1 < 0, b1 < 0) where the
/// finite-N weight eventually loses positivity; the probabilistic reading
/// needs nonnegative slopes or compensating offsets.
Rational ik_limit(long k, const Rational& a1, const Rational& b1);
Rational ik_limit(const LimitQuery& q);

/// Readings of the reparametrized single-sum form (a1 = l1 - 1,
/// b1 = 1/l2 - l1 - 1).  The printed variants preserve two suspect
/// typographies; Corrected is the rearrangement that actually reproduces
/// ik_limit and is the default.
enum class Limit1Reading {
    Corrected,          // inner sum from i = 0 with sign (-1)^i
    PrintedSignJ,       // inner sum from i = 1 with constant sign (-1)^j
    BinomialTransform,  // inner sum as a literal inverse binomial transform, sign (-1)^(j-i)
};

/// The l1/l2 form of the limit; must equal ik_limit under the substitution
/// whenever reading == Corrected.  Requires l2 != 0.
Rational ik_limit_l1l2(long k, const Rational& l1, const Rational& l2,
                       Limit1Reading reading = Limit1Reading::Corrected);

/// The regrouped double sum sitting between the normative formula and the
/// l1/l2 form: prefactor (1+a1)/(2+a1+b1)^k times
///   (1+a1)^(k-1) + sum_{i<=k-2} (1+a1)^i/(k-i-1) C(k,i)
///       * sum_j (-1)^j ((1+a1)/(2+a1+b1))^j C(j+k-1,i+j+1) C(k-i-1,j).
/// Kept as an independent route and cross-checked against ik_limit.
Rational ik_limit_regrouped(long k, const Rational& a1, const Rational& b1);

/// Short-circuit branches: 0 when a1 = -1 (b1 != -1), 1 when b1 = -1
/// (a1 != 1); nullopt when neither branch applies or the scaling is
/// degenerate.
std::optional<Rational> limit_special_zero_one(long k, const Rational& a1, const Rational& b1);

/// a1 = b1 = 0: the limit is C(2k,k)/4^k.
Rational limit_central_binomial(long k);

/// a1 = 0, b1 = l - 1: Catalan-triangle form
///   sum_i ((k-i)/k) C(2k,i) l^i / (1+l)^(2k-1).  Requires l != -1.
Rational limit_catalan(long k, const Rational& l);

/// b1 = 0, a1 = l - 1: peak-counting form
///   l/(1+l)^(2k-1) * sum_i C(k-1,ceil(i/2)) C(k-1,floor(i/2)) l^i.
/// Requires l != -1.
Rational limit_dyck(long k, const Rational& l);

/// The same limit as an alternating sum over central binomials; kept as an
/// independent route and cross-checked against limit_dyck.
Rational limit_dyck_alternating(long k, const Rational& l);

} // namespace seljac
