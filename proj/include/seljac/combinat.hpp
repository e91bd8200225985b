#pragma once

#include <functional>
#include <vector>

#include "seljac/rational.hpp"
#include "seljac/unipoly.hpp"

namespace seljac {

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// Stirling number of the second kind S(p, k), via the triangular recurrence
/// S(p,k) = k*S(p-1,k) + S(p-1,k-1).  Both arguments >= 0.
Rational stirling2(long p, long k);

/// Inverse binomial transform at order k:
///   sum_{i=0..k} (-1)^(k-i) C(k,i) f_i(x),   0 <= k < seq.size().
UniPoly inverse_binomial_transform(const PolySequence& seq, long k);

/// Newton divided-difference coefficients c_j for the points (y_j, f(y_j)):
/// f(y) = sum_j c_j (y - y_0)...(y - y_{j-1}).  Abscissae must be distinct.
std::vector<Rational> divided_difference_coeffs(const std::vector<std::pair<Rational, Rational>>& points);

/// P_i^k(x; a, b) = prod_{j=0..k-i-1} (x + j + a) * prod_{j=0..i-1} (x - j + b),
/// expanded.  Both products are empty products (= 1) when their range is
/// empty.  Requires 0 <= i <= k.
UniPoly p_poly(long i, long k, const Rational& a, const Rational& b);

/// The twisted transform (-1)^k * B_k^{-1}[ (P_i^k(x;a,b) * seq_i(x))_i ].
UniPoly t_transform(const PolySequence& seq, long k, const Rational& a, const Rational& b);

/// Catalan triangle entry ((k-i)/k) * C(2k, i); integer-valued.
/// Requires k >= 1 and 0 <= i <= k-1.
Rational catalan_triangle(long k, long i);

/// Dyck-path peak counts: C(k, ceil(i/2)) * C(k, floor(i/2)).
/// Requires k >= 0 and 0 <= i <= 2k.
Rational gimel(long k, long i);

/// prod_{i=lo..hi} f(i), extended to reversed ranges the telescoping way:
/// lo = hi+1 gives the empty product 1, and lo > hi+1 gives
/// prod_{i=hi+1..lo-1} f(i)^{-1}.  Plain forward loops elsewhere in the
/// library treat lo > hi as the empty product; this helper exists for the
/// places (and tests) that need the reversal reading.
Rational convention_product(long lo, long hi, const std::function<Rational(long)>& f);

} // namespace seljac
