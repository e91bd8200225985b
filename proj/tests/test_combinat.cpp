#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seljac/combinat.hpp"
#include "seljac/rational_function.hpp"
#include "test_util.hpp"

using namespace seljac;
using testutil::Rng;

static Rational stirling2_altsum(long p, long k) {
    // inclusion-exclusion form, kept here as an independent oracle
    Rational acc(0);
    for (long i = 0; i <= k; ++i) {
        Rational term = binomial(k, i) * Rational(i).pow(p);
        if ((k - i) % 2 != 0) term = -term;
        acc += term;
    }
    return acc / factorial(k);
}

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("5/1").to_fraction_string() == "5/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("a/2"), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));

    SUBCASE("fraction strings round-trip") {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            Rational r = rng.rational(1000, 997);
            CHECK(Rational::parse(r.to_fraction_string()) == r);
        }
    }

    SUBCASE("decimal rendering, 12 significant digits, half-even") {
        CHECK(Rational(3, 8).to_decimal_string() == "0.375000000000");
        CHECK(Rational(1).to_decimal_string() == "1.00000000000");
        CHECK(Rational(1, 3).to_decimal_string() == "0.333333333333");
        CHECK(Rational(2, 3).to_decimal_string() == "0.666666666667");
        CHECK(Rational(0).to_decimal_string() == "0.00000000000");
        CHECK(Rational(-1, 2).to_decimal_string() == "-0.500000000000");
        // exact half-ulp ties resolve to the even neighbor
        CHECK(Rational(1000000000005L, 1000000000000L).to_decimal_string() == "1.00000000000");
        CHECK(Rational(1000000000015L, 1000000000000L).to_decimal_string() == "1.00000000002");
        CHECK(Rational(1, 10000).to_decimal_string() == "0.000100000000000");
        CHECK(Rational(1, 1000000).to_decimal_string() == "1.00000000000e-6");
        CHECK(Rational(10000000000000000L).to_decimal_string() == "1.00000000000e16");
    }
}

TEST_CASE("unipoly arithmetic and gcd") {
    UniPoly x = UniPoly::x();
    UniPoly p = (x + UniPoly(1)) * (x - UniPoly(2));
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(Rational(2)) == Rational(0));
    CHECK(p.evaluate(Rational(-1)) == Rational(0));
    CHECK(p.coeff(1) == Rational(-1));

    SUBCASE("divrem round trips") {
        Rng rng(7);
        for (int it = 0; it < 50; ++it) {
            UniPoly a = rng.poly(rng.range(0, 6));
            UniPoly b = rng.poly(rng.range(0, 3));
            auto [q, r] = a.divrem(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }

    SUBCASE("gcd divides both and is monic") {
        Rng rng(8);
        for (int it = 0; it < 30; ++it) {
            UniPoly g = rng.poly(rng.range(0, 2));
            UniPoly a = g * rng.poly(rng.range(0, 3));
            UniPoly b = g * rng.poly(rng.range(0, 3));
            UniPoly d = poly_gcd(a, b);
            if (a.is_zero() && b.is_zero()) {
                CHECK(d.is_zero());
                continue;
            }
            CHECK(d.leading_coeff() == Rational(1));
            CHECK(a.divrem(d).second.is_zero());
            CHECK(b.divrem(d).second.is_zero());
            CHECK(d.degree() >= g.degree());
        }
    }
}

TEST_CASE("rational functions reduce to canonical form") {
    UniPoly x = UniPoly::x();
    RationalFunction half(x, x * UniPoly(Rational(2)));
    CHECK(half == RationalFunction(Rational(1, 2)));
    CHECK(half.num() == UniPoly(Rational(1, 2)));
    CHECK(half.den() == UniPoly(Rational(1)));
    CHECK_THROWS_AS(RationalFunction(x, UniPoly()), DomainError);
    CHECK_THROWS_AS(RationalFunction(UniPoly(1), x).evaluate(Rational(0)), DomainError);
    // a removable singularity reduces away before evaluation
    CHECK(RationalFunction((x + UniPoly(1)) * x, x).evaluate(Rational(0)) == Rational(1));

    SUBCASE("limits by degree comparison") {
        CHECK(RationalFunction(x, x * x + UniPoly(1)).limit_at_infinity() == Rational(0));
        CHECK(RationalFunction(x * UniPoly(Rational(3)) + UniPoly(7), x * UniPoly(Rational(4)))
                  .limit_at_infinity() == Rational(3, 4));
        CHECK_THROWS_AS(RationalFunction(x * x, x).limit_at_infinity(), DomainError);
    }

    SUBCASE("field axioms on random quotients") {
        Rng rng(41);
        for (int it = 0; it < 40; ++it) {
            RationalFunction f(rng.poly(rng.range(0, 3)), rng.poly(rng.range(0, 2)));
            RationalFunction g(rng.poly(rng.range(0, 3)), rng.poly(rng.range(0, 2)));
            CHECK(f + g - g == f);
            if (!g.is_zero()) CHECK(f * g / g == f);
            CHECK(f - f == RationalFunction());
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(5, 0) == Rational(1));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(3, -1) == Rational(0));
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("stirling2") {
    CHECK(stirling2(3, 2) == Rational(3));
    CHECK(stirling2(4, 2) == Rational(7));
    for (long p = 0; p <= 8; ++p) CHECK(stirling2(p, p) == Rational(1));
    CHECK(stirling2(5, 0) == Rational(0));
    CHECK(stirling2(0, 0) == Rational(1));
    CHECK_THROWS_AS(stirling2(-1, 2), DomainError);

    SUBCASE("matches the alternating-sum form") {
        for (long p = 0; p <= 8; ++p)
            for (long k = 0; k <= p; ++k)
                CHECK(stirling2(p, k) == stirling2_altsum(p, k));
    }
}

TEST_CASE("inverse binomial transform") {
    PolySequence halves{UniPoly(Rational(1, 2)), UniPoly(Rational(1, 6))};
    CHECK(inverse_binomial_transform(halves, 1) == UniPoly(Rational(-1, 3)));

    PolySequence cubes{UniPoly(0), UniPoly(1), UniPoly(8)};
    CHECK(inverse_binomial_transform(cubes, 2) == UniPoly(Rational(6)));
    CHECK(inverse_binomial_transform(cubes, 2) == UniPoly(factorial(2) * stirling2(3, 2)));

    PolySequence single{UniPoly::x() * UniPoly::x() + UniPoly(5)};
    CHECK(inverse_binomial_transform(single, 0) == single[0]);

    CHECK_THROWS_AS(inverse_binomial_transform(single, 1), DomainError);
    CHECK_THROWS_AS(inverse_binomial_transform(single, -1), DomainError);

    SUBCASE("power sequences give k! * S(p,k)") {
        for (long p = 0; p <= 8; ++p) {
            std::vector<UniPoly> seq;
            for (long i = 0; i <= p; ++i) seq.push_back(UniPoly(Rational(i).pow(p)));
            PolySequence s(seq);
            for (long k = 0; k <= p; ++k)
                CHECK(inverse_binomial_transform(s, k) == UniPoly(factorial(k) * stirling2(p, k)));
        }
    }
}

TEST_CASE("divided differences") {
    auto pts = [](std::vector<std::pair<long, Rational>> xs) {
        std::vector<std::pair<Rational, Rational>> out;
        for (auto& [x, y] : xs) out.emplace_back(Rational(x), y);
        return out;
    };

    auto sq = divided_difference_coeffs(pts({{0, 0}, {1, 1}, {2, 4}}));
    CHECK(sq == std::vector<Rational>{0, 1, 1});

    auto cube = divided_difference_coeffs(pts({{0, 0}, {1, 1}, {2, 8}, {3, 27}}));
    CHECK(cube == std::vector<Rational>{0, 1, 3, 1});
    CHECK(cube[2] == stirling2(3, 2));

    auto flat = divided_difference_coeffs(pts({{2, 7}, {5, 7}}));
    CHECK(flat == std::vector<Rational>{7, 0});

    CHECK_THROWS_AS(divided_difference_coeffs(pts({{1, 0}, {1, 2}})), DomainError);

    SUBCASE("Newton coefficients reproduce the interpolated polynomial") {
        Rng rng(21);
        for (int it = 0; it < 20; ++it) {
            int deg = static_cast<int>(rng.range(0, 6));
            UniPoly f = rng.poly(deg);
            std::vector<std::pair<Rational, Rational>> nodes;
            for (long i = 0; i <= deg; ++i) nodes.emplace_back(Rational(i), f.evaluate(Rational(i)));
            auto cs = divided_difference_coeffs(nodes);
            UniPoly rebuilt, basis(Rational(1));
            for (size_t j = 0; j < cs.size(); ++j) {
                rebuilt += basis * cs[j];
                basis *= UniPoly::linear(Rational(-static_cast<long>(j)), Rational(1));
            }
            CHECK(rebuilt == f);
        }
    }

    SUBCASE("order-k transform equals k! times the k-th Newton coefficient") {
        Rng rng(22);
        for (int it = 0; it < 20; ++it) {
            long p = rng.range(1, 6);
            UniPoly f = rng.poly(static_cast<int>(p));
            std::vector<UniPoly> vals;
            std::vector<std::pair<Rational, Rational>> nodes;
            for (long i = 0; i <= p; ++i) {
                vals.push_back(UniPoly(f.evaluate(Rational(i))));
                nodes.emplace_back(Rational(i), f.evaluate(Rational(i)));
            }
            auto cs = divided_difference_coeffs(nodes);
            PolySequence s(vals);
            for (long k = 0; k <= p; ++k)
                CHECK(inverse_binomial_transform(s, k) ==
                      UniPoly(factorial(k) * cs[static_cast<size_t>(k)]));
        }
    }

    SUBCASE("shifted induction on top coefficients") {
        // top Newton coefficient of y^p at 0..k+1 equals that of (y+1)^(p-1) at 0..k
        for (long p = 1; p <= 7; ++p) {
            for (long k = 0; k + 1 <= p; ++k) {
                std::vector<std::pair<Rational, Rational>> lhs, rhs;
                for (long i = 0; i <= k + 1; ++i) lhs.emplace_back(Rational(i), Rational(i).pow(p));
                for (long i = 0; i <= k; ++i) rhs.emplace_back(Rational(i), Rational(i + 1).pow(p - 1));
                CHECK(divided_difference_coeffs(lhs).back() == divided_difference_coeffs(rhs).back());
            }
        }
    }
}

TEST_CASE("p_poly") {
    Rational a(3, 2), b(-2, 5);
    UniPoly x = UniPoly::x();
    CHECK(p_poly(0, 1, a, b) == x + UniPoly(a));
    CHECK(p_poly(1, 1, a, b) == x + UniPoly(b));
    CHECK(p_poly(1, 2, a, b) == (x + UniPoly(a)) * (x + UniPoly(b)));
    CHECK(p_poly(0, 0, a, b) == UniPoly(1));
    CHECK_THROWS_AS(p_poly(2, 1, a, b), DomainError);
    CHECK_THROWS_AS(p_poly(-1, 1, a, b), DomainError);
}

TEST_CASE("t_transform") {
    Rational a(1, 3), b(4, 7);
    UniPoly x = UniPoly::x();

    PolySequence counting{UniPoly(0), UniPoly(1)};
    CHECK(t_transform(counting, 1, a, b) == -(x + UniPoly(b)));

    PolySequence ones{UniPoly(1), UniPoly(1)};
    CHECK(t_transform(ones, 1, a, b) == UniPoly(-(b - a)));

    PolySequence one{UniPoly(1)};
    CHECK(t_transform(one, 0, a, b) == UniPoly(1));

    CHECK_THROWS_AS(t_transform(one, 1, a, b), DomainError);

    SUBCASE("leading coefficient closed form") {
        Rng rng(31);
        for (int it = 0; it < 6; ++it) {
            Rational aa = rng.rational(), bb = rng.rational();
            for (long k = 0; k <= 6; ++k) {
                for (long p = 0; p <= 6; ++p) {
                    std::vector<UniPoly> seq;
                    for (long i = 0; i <= k; ++i) seq.push_back(UniPoly(Rational(i).pow(p)));
                    UniPoly t = t_transform(PolySequence(seq), k, aa, bb);
                    if (p <= k) {
                        Rational expect = factorial(k) / factorial(k - p);
                        if (k % 2 != 0) expect = -expect;
                        for (long i = 0; i <= k - p - 1; ++i)
                            expect *= bb - aa - Rational(p) - Rational(i);
                        CHECK(t.coeff(static_cast<int>(p)) == expect);
                        CHECK(t.degree() <= static_cast<int>(p));
                    } else {
                        CHECK(t.degree() < static_cast<int>(p));
                    }
                }
            }
        }
    }
}

TEST_CASE("catalan triangle") {
    CHECK(catalan_triangle(3, 0) == Rational(1));
    CHECK(catalan_triangle(3, 1) == Rational(4));
    CHECK(catalan_triangle(3, 2) == Rational(5));
    CHECK_THROWS_AS(catalan_triangle(3, 3), DomainError);
    CHECK_THROWS_AS(catalan_triangle(0, 0), DomainError);
    for (long k = 1; k <= 10; ++k)
        for (long i = 0; i <= k - 1; ++i)
            CHECK(catalan_triangle(k, i).is_integer());
}

TEST_CASE("gimel") {
    for (long k = 1; k <= 6; ++k) {
        CHECK(gimel(k, 0) == Rational(1));
        CHECK(gimel(k, 1) == Rational(k));
    }
    CHECK(gimel(2, 2) == Rational(4));
    CHECK_THROWS_AS(gimel(2, 5), DomainError);
    CHECK_THROWS_AS(gimel(2, -1), DomainError);

    SUBCASE("three-term recurrence") {
        for (long k = 1; k <= 10; ++k) {
            for (long i = 0; i + 2 <= 2 * k; ++i) {
                Rational lhs = Rational(-(2 * k + 1 - i) * (2 * k - i)) * gimel(k, i) +
                               Rational(2 + 2 * i - 2 * k) * gimel(k, i + 1) +
                               Rational((i + 3) * (i + 2)) * gimel(k, i + 2);
                CHECK(lhs == Rational(0));
            }
        }
    }
}

TEST_CASE("factor reorganization identity for telescoped products") {
    // prod_{i=a+1..N} (b+i)/(b+c+i) = prod_{i=1..c} (a+b+i)/(b+N+i)
    auto lhs_factor = [](const Rational& b, long c) {
        return [b, c](long i) { return (b + Rational(i)) / (b + Rational(c) + Rational(i)); };
    };
    std::vector<Rational> bs = {Rational(1), Rational(1, 2), Rational(3, 7), Rational(-1, 3)};
    for (const Rational& b : bs) {
        for (long a = 0; a <= 3; ++a) {
            for (long c = 0; c <= 3; ++c) {
                for (long N = a + c; N <= a + c + 3; ++N) {
                    Rational lhs(1), rhs(1);
                    for (long i = a + 1; i <= N; ++i) lhs *= lhs_factor(b, c)(i);
                    for (long i = 1; i <= c; ++i) rhs *= (Rational(a) + b + Rational(i)) / (b + Rational(N) + Rational(i));
                    CHECK(lhs == rhs);
                }
            }
        }
    }

    SUBCASE("holds below N = a+c with the reversed-range convention") {
        std::vector<Rational> bs2 = {Rational(1, 2), Rational(3, 7)};
        for (const Rational& b : bs2) {
            for (long a = 0; a <= 3; ++a) {
                for (long c = 0; c <= 3; ++c) {
                    for (long N = 0; N < a + c; ++N) {
                        Rational lhs = convention_product(a + 1, N, [&](long i) {
                            return (b + Rational(i)) / (b + Rational(c) + Rational(i));
                        });
                        Rational rhs(1);
                        for (long i = 1; i <= c; ++i)
                            rhs *= (Rational(a) + b + Rational(i)) / (b + Rational(N) + Rational(i));
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}
