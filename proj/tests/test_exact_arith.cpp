// Exact arithmetic: binomials, polynomials, and rational generating functions.
#include "hilb/arith.hpp"
#include "hilb/poly.hpp"
#include "hilb/series.hpp"

#include <catch_amalgamated.hpp>

using namespace hilb;

TEST_CASE("binomial follows the zero convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-3, -2) == 0);
    // symmetry and Pascal on a window
    for (long long a = 1; a <= 15; ++a)
        for (long long b = 0; b <= a; ++b) {
            CHECK(binomial(a, b) == binomial(a, a - b));
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
}

TEST_CASE("generalized binomial extends by falling factorials") {
    // agrees with the zero convention for a >= 0
    for (long long a = 0; a <= 10; ++a)
        for (long long b = -2; b <= 12; ++b) CHECK(binomial_gen(a, b) == binomial(a, b));
    // negative upper index: C(-1, r) = (-1)^r
    CHECK(binomial_gen(-1, 0) == 1);
    CHECK(binomial_gen(-1, 1) == -1);
    CHECK(binomial_gen(-1, 2) == 1);
    CHECK(binomial_gen(-1, 3) == -1);
    // C(-n, r) = (-1)^r C(n+r-1, r)
    for (long long n = 1; n <= 5; ++n)
        for (long long r = 0; r <= 6; ++r) {
            Int expect = binomial(n + r - 1, r);
            if (r % 2 == 1) expect = -expect;
            CHECK(binomial_gen(-n, r) == expect);
        }
}

TEST_CASE("factorial and compositions") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(compositions(0, 0) == 1);
    CHECK(compositions(1, 0) == 0);
    CHECK(compositions(-1, 3) == 0);
    CHECK(compositions(4, 2) == 5);   // C(5,1)
    CHECK(compositions(3, 3) == 10);  // C(5,2)
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Int(-42)) == "-42");
    CHECK(to_decimal(Rat(7)) == "7");
    CHECK(to_decimal(Rat(3, 6)) == "1/2");
    CHECK(to_decimal(Rat(-3, 6)) == "-1/2");
    CHECK(is_integer(Rat(8, 4)));
    CHECK_FALSE(is_integer(Rat(8, 3)));
}

TEST_CASE("polynomial basics") {
    Poly p({1, 2, 1});  // (x+1)^2
    CHECK(p.degree() == 2);
    CHECK(p(3) == 16);
    CHECK(p.leading_coefficient() == 1);
    CHECK(p.constant_term() == 1);
    Poly q = p * p;
    CHECK(q.degree() == 4);
    CHECK(q(2) == 81);
    CHECK((p - p).degree() == -1);
}

TEST_CASE("Newton interpolation recovers a cubic exactly") {
    Poly cubic({Rat(1), Rat(-3, 2), Rat(0), Rat(2, 7)});
    std::vector<std::pair<Rat, Rat>> pts;
    for (int x = 0; x <= 3; ++x) pts.push_back({Rat(x), cubic(Rat(x))});
    Poly rec = Poly::interpolate(pts);
    CHECK(rec.degree() == 3);
    for (int x = -5; x <= 5; ++x) CHECK(rec(Rat(x)) == cubic(Rat(x)));
}

TEST_CASE("truncated series arithmetic") {
    auto geom = Series::from_rule(10, [](long long) { return Int(1); });
    auto sq = geom * geom;
    for (long long k = 0; k <= 10; ++k) CHECK(sq.coeff(k) == k + 1);
    auto diff = sq - geom;
    for (long long k = 0; k <= 10; ++k) CHECK(diff.coeff(k) == k);
    CHECK(diff.divided_by_t().coeff(0) == 1);
    CHECK_THROWS_AS(geom.divided_by_t(), std::invalid_argument);
}

TEST_CASE("rational GF expansion, degree, and leading coefficient") {
    // (1 + t) / (1-t)^3 : coefficients (k+1)^2
    RationalGF g({1, 1}, 3);
    for (long long k = 0; k <= 12; ++k) CHECK(g.coefficient(k) == (k + 1) * (k + 1));
    auto res = g.to_polynomial();
    REQUIRE_FALSE(res.polynomial_part_only);
    CHECK(res.poly.degree() == 2);
    CHECK(res.poly.leading_coefficient() == 1);
    CHECK(g.value_at_one() == 2);
    CHECK(g.constant_term() == 1);
}

TEST_CASE("canonicalization strips (1-t) factors shared with the denominator") {
    // (1 - t^2) / (1-t)^2 = (1 + t) / (1-t)
    RationalGF g({1, 0, -1}, 2);
    auto c = g.canonicalized();
    CHECK(c.pole_order() == 1);
    CHECK(c.numerator() == std::vector<Int>{1, 1});
    for (long long k = 0; k <= 8; ++k) CHECK(c.coefficient(k) == g.coefficient(k));
}

TEST_CASE("GF addition over a common denominator") {
    RationalGF a({1}, 1);       // 1/(1-t)
    RationalGF b({1}, 2);       // 1/(1-t)^2
    RationalGF s = a + b;
    for (long long k = 0; k <= 10; ++k) CHECK(s.coefficient(k) == k + 2);
}
