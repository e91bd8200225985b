#include "seljac/verify.hpp"

#include <functional>
#include <sstream>

#include "seljac/asymptotics.hpp"
#include "seljac/combinat.hpp"
#include "seljac/oracle.hpp"
#include "seljac/schur_moments.hpp"

namespace seljac {

namespace {

// Runs `body`, which reports the first counterexample by filling `fail` and
// returning false, and counts the cases it examined.
CheckResult run_check(const std::string& name,
                      const std::function<bool(long& cases, std::string& fail)>& body) {
    CheckResult r;
    r.name = name;
    long cases = 0;
    std::string fail;
    try {
        r.pass = body(cases, fail);
        r.detail = r.pass ? std::to_string(cases) + " cases" : fail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

std::string rstr(const Rational& r) { return r.to_fraction_string(); }

const std::vector<Rational>& small_rationals() {
    static const std::vector<Rational> v = {Rational(1),      Rational(1, 2), Rational(2),
                                            Rational(3, 5),   Rational(7),    Rational(-2, 3),
                                            Rational(5, 4)};
    return v;
}

// ---------------------------------------------------------------- identities

CheckResult check_stirling_transform() {
    return run_check("power-sequence-transform-is-stirling", [](long& cases, std::string& fail) {
        for (long p = 0; p <= 8; ++p) {
            std::vector<UniPoly> seq;
            for (long i = 0; i <= p; ++i) seq.push_back(UniPoly(Rational(i).pow(p)));
            PolySequence s(seq);
            for (long k = 0; k <= p; ++k) {
                ++cases;
                UniPoly got = inverse_binomial_transform(s, k);
                UniPoly want(factorial(k) * stirling2(p, k));
                if (got != want) {
                    fail = "p=" + std::to_string(p) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    });
}

CheckResult check_newton_coefficients() {
    return run_check("transform-equals-scaled-newton-coefficient", [](long& cases, std::string& fail) {
        // fixed pseudo-random coefficient stream
        uint64_t state = 0x2545f4914f6cdd1dull;
        auto next_rat = [&state] {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            long num = static_cast<long>(state % 19) - 9;
            long den = static_cast<long>((state >> 32) % 7) + 1;
            return Rational(num, den);
        };
        for (int trial = 0; trial < 12; ++trial) {
            long p = 1 + static_cast<long>(trial % 6);
            std::vector<Rational> coeffs;
            for (long i = 0; i <= p; ++i) coeffs.push_back(next_rat());
            if (coeffs.back().is_zero()) coeffs.back() = Rational(1);
            UniPoly f((std::vector<Rational>(coeffs)));
            std::vector<UniPoly> vals;
            std::vector<std::pair<Rational, Rational>> nodes;
            for (long i = 0; i <= p; ++i) {
                vals.push_back(UniPoly(f.evaluate(Rational(i))));
                nodes.emplace_back(Rational(i), f.evaluate(Rational(i)));
            }
            auto newton = divided_difference_coeffs(nodes);
            PolySequence s(vals);
            for (long k = 0; k <= p; ++k) {
                ++cases;
                if (inverse_binomial_transform(s, k) !=
                    UniPoly(factorial(k) * newton[static_cast<size_t>(k)])) {
                    fail = "trial=" + std::to_string(trial) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    });
}

CheckResult check_shifted_induction() {
    return run_check("shifted-newton-induction", [](long& cases, std::string& fail) {
        for (long p = 1; p <= 7; ++p) {
            for (long k = 0; k + 1 <= p; ++k) {
                ++cases;
                std::vector<std::pair<Rational, Rational>> lhs, rhs;
                for (long i = 0; i <= k + 1; ++i) lhs.emplace_back(Rational(i), Rational(i).pow(p));
                for (long i = 0; i <= k; ++i) rhs.emplace_back(Rational(i), Rational(i + 1).pow(p - 1));
                if (divided_difference_coeffs(lhs).back() != divided_difference_coeffs(rhs).back()) {
                    fail = "p=" + std::to_string(p) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    });
}

CheckResult check_factor_reorganization() {
    return run_check("telescoped-factor-reorganization", [](long& cases, std::string& fail) {
        std::vector<Rational> bs = {Rational(1), Rational(1, 2), Rational(3, 7), Rational(-1, 3)};
        for (const Rational& b : bs) {
            for (long a = 0; a <= 3; ++a)
                for (long c = 0; c <= 3; ++c)
                    for (long N = a + c; N <= a + c + 4; ++N) {
                        ++cases;
                        Rational lhs(1), rhs(1);
                        for (long i = a + 1; i <= N; ++i)
                            lhs *= (b + Rational(i)) / (b + Rational(c + i));
                        for (long i = 1; i <= c; ++i)
                            rhs *= (Rational(a) + b + Rational(i)) / (b + Rational(N + i));
                        if (lhs != rhs) {
                            fail = "a=" + std::to_string(a) + " c=" + std::to_string(c) +
                                   " N=" + std::to_string(N) + " b=" + rstr(b);
                            return false;
                        }
                    }
        }
        return true;
    });
}

CheckResult check_leading_coefficient_product() {
    return run_check("linear-factor-transform-product", [](long& cases, std::string& fail) {
        std::vector<std::pair<Rational, Rational>> abs = {
            {Rational(1, 3), Rational(4, 7)}, {Rational(2), Rational(-1, 2)}, {Rational(-3, 5), Rational(5, 2)}};
        for (const auto& [a, b] : abs) {
            for (long k = 0; k <= 6; ++k) {
                for (long p = 0; p <= k; ++p) {
                    ++cases;
                    std::vector<UniPoly> seq;
                    for (long i = p; i <= k; ++i) seq.push_back(p_poly(i, k, a, b));
                    UniPoly got = inverse_binomial_transform(PolySequence(seq), k - p);
                    UniPoly want(Rational(1));
                    for (long i = 0; i <= p - 1; ++i)
                        want *= UniPoly::linear(b - Rational(i), Rational(1));
                    Rational scalar(1);
                    for (long i = 0; i <= k - p - 1; ++i) scalar *= b - a - Rational(p) - Rational(i);
                    want *= scalar;
                    if (got != want) {
                        fail = "k=" + std::to_string(k) + " p=" + std::to_string(p) +
                               " a=" + rstr(a) + " b=" + rstr(b);
                        return false;
                    }
                }
            }
        }
        return true;
    });
}

CheckResult check_t_transform_leading() {
    return run_check("t-transform-leading-coefficient", [](long& cases, std::string& fail) {
        std::vector<std::pair<Rational, Rational>> abs = {
            {Rational(1, 3), Rational(4, 7)}, {Rational(-2), Rational(5, 3)}};
        for (const auto& [a, b] : abs) {
            for (long k = 0; k <= 6; ++k) {
                for (long p = 0; p <= 8; ++p) {
                    ++cases;
                    std::vector<UniPoly> seq;
                    for (long i = 0; i <= k; ++i) seq.push_back(UniPoly(Rational(i).pow(p)));
                    UniPoly t = t_transform(PolySequence(seq), k, a, b);
                    if (p <= k) {
                        Rational want = factorial(k) / factorial(k - p);
                        if (k % 2 != 0) want = -want;
                        for (long i = 0; i <= k - p - 1; ++i)
                            want *= b - a - Rational(p) - Rational(i);
                        if (t.coeff(static_cast<int>(p)) != want) {
                            fail = "k=" + std::to_string(k) + " p=" + std::to_string(p);
                            return false;
                        }
                    } else if (t.degree() >= static_cast<int>(p)) {
                        fail = "degree not lowered: k=" + std::to_string(k) + " p=" + std::to_string(p);
                        return false;
                    }
                }
            }
        }
        return true;
    });
}

CheckResult check_beta_independence() {
    return run_check("paired-linear-factor-top-coefficient", [](long& cases, std::string& fail) {
        const Rational a(3, 7), b(-1, 2);
        std::vector<std::pair<Rational, Rational>> alphas = {
            {Rational(2, 3), Rational(-3, 2)}, {Rational(1, 2), Rational(4)}};
        std::vector<std::pair<Rational, Rational>> betas = {
            {Rational(1, 5), Rational(-2)}, {Rational(7, 3), Rational(3, 4)}};
        for (const auto& [alpha1, alpha2] : alphas) {
            for (long k = 0; k <= 4; ++k) {
                for (long p = 0; p <= k; ++p) {
                    ++cases;
                    auto top_coeff = [&](const Rational& beta1, const Rational& beta2) {
                        std::vector<UniPoly> seq;
                        for (long i = 0; i <= k; ++i) {
                            UniPoly prod(Rational(1));
                            for (long j = 0; j <= p - 1; ++j) {
                                prod *= UniPoly::linear(Rational(j - i) + beta1, alpha1);
                                prod *= UniPoly::linear(Rational(j - i) + beta2, alpha2);
                            }
                            seq.push_back(prod);
                        }
                        return t_transform(PolySequence(seq), k, a, b).coeff(static_cast<int>(2 * p));
                    };
                    Rational c1 = top_coeff(betas[0].first, betas[0].second);
                    Rational c2 = top_coeff(betas[1].first, betas[1].second);
                    Rational formula(0);
                    for (long j = 0; j <= k; ++j) {
                        Rational inner(0);
                        for (long i = 0; i <= p; ++i)
                            inner += binomial(p, i) * binomial(p, 2 * p - j - i) *
                                     alpha1.pow(i) * alpha2.pow(2 * p - i - j);
                        Rational tail(1);
                        for (long i = 0; i <= k - j - 1; ++i) tail *= a - b + Rational(j + i);
                        formula += factorial(k) / factorial(k - j) * inner * tail;
                    }
                    if (c1 != c2 || c1 != formula) {
                        fail = "k=" + std::to_string(k) + " p=" + std::to_string(p) +
                               " got " + rstr(c1) + " / " + rstr(c2) + " vs " + rstr(formula);
                        return false;
                    }
                }
            }
        }
        return true;
    });
}

CheckResult check_binomial_column_identity() {
    return run_check("alternating-binomial-column-sum", [](long& cases, std::string& fail) {
        for (long a = 0; a <= 10; ++a)
            for (long b = 0; b <= 10; ++b)
                for (long c = 0; c <= 10; ++c) {
                    ++cases;
                    Rational lhs(0);
                    for (long j = 0; j <= a; ++j) {
                        Rational t = binomial(a, j) * binomial(c + j, b + j);
                        if (j % 2 != 0) t = -t;
                        lhs += t;
                    }
                    Rational rhs = binomial(c, a + b);
                    if (a % 2 != 0) rhs = -rhs;
                    if (lhs != rhs) {
                        fail = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                               " c=" + std::to_string(c);
                        return false;
                    }
                }
        return true;
    });
}

CheckResult check_halved_binomial_identity() {
    return run_check("half-weighted-binomial-sum", [](long& cases, std::string& fail) {
        for (long n = 0; n <= 10; ++n)
            for (long m = 0; m <= n; ++m) {
                ++cases;
                Rational lhs(0);
                for (long j = 0; j <= n - m; ++j)
                    lhs += Rational(-1, 2).pow(j) * binomial(n - m + j, j) * binomial(2 * n, n + m + j);
                Rational rhs = Rational(2).pow(m - n) * binomial(n, m) * binomial(2 * n, n) /
                               binomial(2 * m, m);
                if (lhs != rhs) {
                    fail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_reciprocal_transform() {
    return run_check("reciprocal-product-transform", [](long& cases, std::string& fail) {
        for (long p = 1; p <= 6; ++p)
            for (long m = 0; m <= 5; ++m) {
                ++cases;
                std::vector<UniPoly> seq;
                for (long i = 0; i <= m; ++i)
                    seq.push_back(UniPoly(Rational(1) / (Rational(p + i) * Rational(p + i + 1))));
                UniPoly got = inverse_binomial_transform(PolySequence(seq), m);
                Rational want = factorial(m + 1);
                if (m % 2 != 0) want = -want;
                for (long i = 0; i <= m + 1; ++i) want /= Rational(p + i);
                if (got != UniPoly(want)) {
                    fail = "p=" + std::to_string(p) + " m=" + std::to_string(m);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_paired_binomial_sum() {
    return run_check("shifted-binomial-convolution", [](long& cases, std::string& fail) {
        for (long k = 1; k <= 12; ++k)
            for (long j = 0; j <= k - 1; ++j) {
                ++cases;
                Rational lhs(0);
                for (long i = 0; i <= k; ++i) lhs += binomial(k, i + j + 1) * binomial(k, i);
                if (lhs != binomial(2 * k, k + j + 1)) {
                    fail = "k=" + std::to_string(k) + " j=" + std::to_string(j);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_peak_recurrence() {
    return run_check("peak-count-three-term-recurrence", [](long& cases, std::string& fail) {
        for (long k = 1; k <= 10; ++k) {
            if (gimel(k, 0) != Rational(1) || gimel(k, 1) != Rational(k)) {
                fail = "initial values at k=" + std::to_string(k);
                return false;
            }
            for (long i = 0; i + 2 <= 2 * k; ++i) {
                ++cases;
                Rational lhs = Rational(-(2 * k + 1 - i) * (2 * k - i)) * gimel(k, i) +
                               Rational(2 + 2 * i - 2 * k) * gimel(k, i + 1) +
                               Rational((i + 3) * (i + 2)) * gimel(k, i + 2);
                if (!lhs.is_zero()) {
                    fail = "k=" + std::to_string(k) + " i=" + std::to_string(i);
                    return false;
                }
            }
        }
        return true;
    });
}

// ------------------------------------------------------------------- oracles

CheckResult check_oracle_triangle() {
    return run_check("three-route-power-sum-average", [](long& cases, std::string& fail) {
        std::vector<std::pair<long, long>> abs = {{1, 1}, {2, 1}, {3, 2}, {1, 3}};
        for (long n = 1; n <= 4; ++n)
            for (long k = 1; k <= 4; ++k)
                for (auto [a, b] : abs) {
                    ++cases;
                    Rational closed = ik_closed(k, Rational(a), Rational(b), n);
                    Rational brute = brute_average(power_sum_poly(k, static_cast<int>(n)),
                                                   static_cast<int>(n), Rational(a), Rational(b));
                    Rational density = density_ik(k, SpectralParams{a - 1, b - 1, n});
                    if (closed != brute || closed != density) {
                        fail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                               ": closed=" + rstr(closed) + " brute=" + rstr(brute) +
                               " density=" + rstr(density);
                        return false;
                    }
                }
        return true;
    });
}

CheckResult check_density_beta_slice() {
    return run_check("density-single-variable-beta-moment", [](long& cases, std::string& fail) {
        for (long A = 0; A <= 3; ++A)
            for (long B = 0; B <= 3; ++B)
                for (long k = 1; k <= 6; ++k) {
                    ++cases;
                    Rational moment(1);
                    for (long j = 0; j < k; ++j)
                        moment *= Rational(A + 1 + j) / Rational(A + B + 2 + j);
                    if (density_ik(k, SpectralParams{A, B, 1}) != moment) {
                        fail = "A=" + std::to_string(A) + " B=" + std::to_string(B) +
                               " k=" + std::to_string(k);
                        return false;
                    }
                }
        return true;
    });
}

CheckResult check_density_normalization() {
    return run_check("density-normalization", [](long& cases, std::string& fail) {
        for (long N = 1; N <= 4; ++N)
            for (long A = 0; A <= 2; ++A)
                for (long B = 0; B <= 2; ++B) {
                    ++cases;
                    if (density_ik(0, SpectralParams{A, B, N}) != Rational(N)) {
                        fail = "N=" + std::to_string(N) + " A=" + std::to_string(A) +
                               " B=" + std::to_string(B);
                        return false;
                    }
                }
        return true;
    });
}

CheckResult check_schur_brute_match() {
    return run_check("schur-average-vs-expansion", [](long& cases, std::string& fail) {
        std::vector<Partition> shapes = {Partition{1},    Partition{2},    Partition{1, 1},
                                         Partition{3},    Partition{2, 1}, Partition{1, 1, 1},
                                         Partition{4},    Partition{2, 2}, Partition{3, 1},
                                         Partition{2, 1, 1}};
        std::vector<std::pair<Rational, Rational>> abs = {
            {Rational(1), Rational(1)}, {Rational(2), Rational(1)}, {Rational(3, 2), Rational(5, 3)}};
        for (int n = 1; n <= 3; ++n)
            for (const auto& shape : shapes) {
                if (shape.length() > n) continue;
                for (const auto& [a, b] : abs) {
                    ++cases;
                    Rational direct = schur_average(shape, a, b, n);
                    Rational brute = brute_average(schur_poly(shape, n), n, a, b);
                    if (direct != brute) {
                        fail = "lambda=" + shape.to_string() + " n=" + std::to_string(n) +
                               " a=" + rstr(a) + " b=" + rstr(b);
                        return false;
                    }
                }
            }
        return true;
    });
}

CheckResult check_selberg_normalization() {
    return run_check("selberg-product-vs-expansion", [](long& cases, std::string& fail) {
        for (long n = 1; n <= 4; ++n)
            for (long a = 1; a <= 3; ++a)
                for (long b = 1; b <= 3; ++b) {
                    ++cases;
                    // unnormalized integral = Phi(V^2) * B(a,b)^n
                    Rational beta_ab = factorial(a - 1) * factorial(b - 1) / factorial(a + b - 1);
                    Rational integral =
                        beta_moment_functional(vandermonde_squared(static_cast<int>(n)),
                                               Rational(a), Rational(b)) *
                        beta_ab.pow(n);
                    if (integral != selberg_value(n, a, b, 1)) {
                        fail = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                               " b=" + std::to_string(b);
                        return false;
                    }
                }
        return true;
    });
}

// -------------------------------------------------------------------- limits

const std::vector<std::pair<Rational, Rational>>& slope_grid() {
    static const std::vector<std::pair<Rational, Rational>> v = {
        {Rational(0), Rational(0)},     {Rational(1), Rational(0)},  {Rational(0), Rational(1)},
        {Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(3)}, {Rational(-1, 2), Rational(1)},
        {Rational(3, 5), Rational(-1, 5)}, {Rational(-1), Rational(1, 2)}};
    return v;
}

CheckResult check_limit_vs_rf() {
    return run_check("limit-matches-rational-function", [](long& cases, std::string& fail) {
        std::vector<std::pair<Rational, Rational>> offsets = {
            {Rational(1), Rational(1)}, {Rational(3, 2), Rational(2, 5)}};
        for (const auto& [a1, b1] : slope_grid())
            for (const auto& [a0, b0] : offsets)
                for (long k = 1; k <= 8; ++k) {
                    ++cases;
                    ScalingParams p{a1, a0, b1, b0};
                    Rational via_rf = ik_rf(k, p).limit_at_infinity();
                    Rational direct = ik_limit(k, a1, b1);
                    if (via_rf != direct) {
                        fail = "k=" + std::to_string(k) + " a1=" + rstr(a1) + " b1=" + rstr(b1) +
                               ": formula " + rstr(direct) + " vs rf " + rstr(via_rf);
                        return false;
                    }
                }
        return true;
    });
}

CheckResult check_central_binomial() {
    return run_check("central-binomial-limit", [](long& cases, std::string& fail) {
        for (long k = 1; k <= 12; ++k) {
            ++cases;
            Rational want = binomial(2 * k, k) / Rational(4).pow(k);
            if (limit_central_binomial(k) != want ||
                ik_limit(k, Rational(0), Rational(0)) != want) {
                fail = "k=" + std::to_string(k);
                return false;
            }
        }
        if (limit_central_binomial(1) != Rational(1, 2) ||
            limit_central_binomial(2) != Rational(3, 8) ||
            limit_central_binomial(3) != Rational(5, 16)) {
            fail = "spot values";
            return false;
        }
        return true;
    });
}

CheckResult check_zero_one_branches() {
    return run_check("degenerate-slope-branches", [](long& cases, std::string& fail) {
        std::vector<Rational> b1s = {Rational(0), Rational(1), Rational(1, 2)};
        std::vector<Rational> a1s = {Rational(0), Rational(2), Rational(1, 3)};
        for (long k = 1; k <= 8; ++k) {
            for (const Rational& b1 : b1s) {
                ++cases;
                auto branch = limit_special_zero_one(k, Rational(-1), b1);
                if (ik_limit(k, Rational(-1), b1) != Rational(0) || !branch || *branch != Rational(0)) {
                    fail = "a1=-1 b1=" + rstr(b1) + " k=" + std::to_string(k);
                    return false;
                }
            }
            for (const Rational& a1 : a1s) {
                ++cases;
                auto branch = limit_special_zero_one(k, a1, Rational(-1));
                if (ik_limit(k, a1, Rational(-1)) != Rational(1) || !branch || *branch != Rational(1)) {
                    fail = "b1=-1 a1=" + rstr(a1) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    });
}

const std::vector<Rational>& ell_grid() {
    static const std::vector<Rational> v = {Rational(1), Rational(1, 2), Rational(2),
                                            Rational(3, 5), Rational(7)};
    return v;
}

CheckResult check_catalan_substitution() {
    return run_check("catalan-form-substitution", [](long& cases, std::string& fail) {
        for (long k = 1; k <= 8; ++k)
            for (const Rational& l : ell_grid()) {
                ++cases;
                if (limit_catalan(k, l) != ik_limit(k, Rational(0), l - Rational(1))) {
                    fail = "k=" + std::to_string(k) + " l=" + rstr(l);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_dyck_substitution() {
    return run_check("dyck-form-substitution", [](long& cases, std::string& fail) {
        for (long k = 1; k <= 8; ++k)
            for (const Rational& l : ell_grid()) {
                ++cases;
                if (limit_dyck(k, l) != ik_limit(k, l - Rational(1), Rational(0))) {
                    fail = "k=" + std::to_string(k) + " l=" + rstr(l);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_dyck_two_forms() {
    return run_check("dyck-peak-form-vs-alternating-form", [](long& cases, std::string& fail) {
        for (long k = 1; k <= 8; ++k)
            for (const Rational& l : ell_grid()) {
                ++cases;
                if (limit_dyck(k, l) != limit_dyck_alternating(k, l)) {
                    fail = "k=" + std::to_string(k) + " l=" + rstr(l);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_l1l2_form() {
    return run_check("reparametrized-limit-form", [](long& cases, std::string& fail) {
        for (const auto& [a1, b1] : slope_grid())
            for (long k = 1; k <= 8; ++k) {
                ++cases;
                Rational l1 = Rational(1) + a1;
                Rational l2 = Rational(1) / (Rational(2) + a1 + b1);
                if (ik_limit_l1l2(k, l1, l2) != ik_limit(k, a1, b1)) {
                    fail = "k=" + std::to_string(k) + " a1=" + rstr(a1) + " b1=" + rstr(b1);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_regrouped_form() {
    return run_check("regrouped-limit-form", [](long& cases, std::string& fail) {
        for (const auto& [a1, b1] : slope_grid())
            for (long k = 1; k <= 8; ++k) {
                ++cases;
                if (ik_limit_regrouped(k, a1, b1) != ik_limit(k, a1, b1)) {
                    fail = "k=" + std::to_string(k) + " a1=" + rstr(a1) + " b1=" + rstr(b1);
                    return false;
                }
            }
        return true;
    });
}

CheckResult check_numerator_degree() {
    return run_check("cleared-numerator-degree", [](long& cases, std::string& fail) {
        std::vector<std::pair<Rational, Rational>> slopes = {
            {Rational(0), Rational(0)}, {Rational(1), Rational(0)},
            {Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 3)}};
        std::vector<std::pair<Rational, Rational>> offsets = {
            {Rational(1), Rational(1)}, {Rational(5, 3), Rational(-1, 4)}};
        for (const auto& [a1, b1] : slopes)
            for (const auto& [a0, b0] : offsets)
                for (long k = 1; k <= 8; ++k) {
                    ++cases;
                    UniPoly nk = ik_numerator_unreduced(k, ScalingParams{a1, a0, b1, b0});
                    if (nk.degree() != static_cast<int>(2 * k)) {
                        fail = "k=" + std::to_string(k) + " a1=" + rstr(a1) + " b1=" + rstr(b1) +
                               ": degree " + std::to_string(nk.degree());
                        return false;
                    }
                }
        return true;
    });
}

// ---------------------------------------------------------------- conjecture

CheckResult check_factorization(const Partition& lambda) {
    return run_check("power-sum-limit-factorization-" + lambda.to_string(),
                     [&lambda](long& cases, std::string& fail) {
        std::vector<ScalingParams> grids = {
            {Rational(0), Rational(1), Rational(0), Rational(1)},
            {Rational(1), Rational(1), Rational(0), Rational(1)},
            {Rational(0), Rational(1), Rational(1), Rational(1)}};
        for (const auto& params : grids) {
            ++cases;
            Rational joint = plambda_limit(lambda, params);
            Rational product(1);
            for (long part : lambda.parts()) product *= ik_limit(part, params.a1, params.b1);
            if (joint != product) {
                std::ostringstream os;
                os << "lambda=" << lambda.to_string() << " a1=" << rstr(params.a1)
                   << " b1=" << rstr(params.b1) << ": joint " << rstr(joint)
                   << " vs product " << rstr(product);
                fail = os.str();
                return false;
            }
        }
        return true;
    });
}

CheckResult check_factorization_anchor() {
    return run_check("factorization-anchor-(1,1)", [](long& cases, std::string& fail) {
        ++cases;
        ScalingParams p{Rational(0), Rational(1), Rational(0), Rational(1)};
        Rational got = plambda_limit(Partition{1, 1}, p);
        if (got != Rational(1, 4)) {
            fail = "got " + rstr(got) + " expected 1/4";
            return false;
        }
        return true;
    });
}

} // namespace

std::vector<CheckResult> verify_identities() {
    return {check_stirling_transform(),
            check_newton_coefficients(),
            check_shifted_induction(),
            check_factor_reorganization(),
            check_leading_coefficient_product(),
            check_t_transform_leading(),
            check_beta_independence(),
            check_binomial_column_identity(),
            check_halved_binomial_identity(),
            check_reciprocal_transform(),
            check_paired_binomial_sum(),
            check_peak_recurrence()};
}

std::vector<CheckResult> verify_oracles() {
    return {check_oracle_triangle(), check_density_beta_slice(), check_density_normalization(),
            check_schur_brute_match(), check_selberg_normalization()};
}

std::vector<CheckResult> verify_limits() {
    return {check_limit_vs_rf(),       check_central_binomial(), check_zero_one_branches(),
            check_catalan_substitution(), check_dyck_substitution(), check_dyck_two_forms(),
            check_l1l2_form(),         check_regrouped_form(),   check_numerator_degree()};
}

std::vector<CheckResult> verify_conjecture() {
    std::vector<CheckResult> out;
    out.push_back(check_factorization_anchor());
    for (const Partition& lambda :
         {Partition{1, 1}, Partition{2, 1}, Partition{2, 2}, Partition{3, 1}})
        out.push_back(check_factorization(lambda));
    return out;
}

std::vector<CheckResult> verify_suite(const std::string& suite) {
    if (suite == "identities") return verify_identities();
    if (suite == "oracles") return verify_oracles();
    if (suite == "limits") return verify_limits();
    if (suite == "conjecture") return verify_conjecture();
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& part : {verify_identities(), verify_oracles(), verify_limits(),
                                 verify_conjecture()})
            out.insert(out.end(), part.begin(), part.end());
        return out;
    }
    throw DomainError("verify_suite: unknown suite '" + suite + "'");
}

} // namespace seljac
