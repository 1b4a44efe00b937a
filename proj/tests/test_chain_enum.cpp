// Chain predicates and brute-force grid-monomial counting.
#include "hilb/grid.hpp"

#include <catch_amalgamated.hpp>

using namespace hilb;

TEST_CASE("3-chain detection") {
    CHECK_FALSE(has_3chain({}));
    CHECK_FALSE(has_3chain({{1, 1}, {2, 2}}));
    CHECK(has_3chain({{1, 1}, {2, 2}, {3, 3}}));
    CHECK(has_3chain({{3, 3}, {1, 1}, {2, 2}}));           // order-insensitive
    CHECK_FALSE(has_3chain({{1, 1}, {1, 2}, {1, 3}}));     // equal rows
    CHECK_FALSE(has_3chain({{1, 3}, {2, 2}, {3, 1}}));     // antichain
    CHECK(has_3chain({{1, 1}, {2, 5}, {2, 2}, {3, 3}}));   // chain via subset
}

TEST_CASE("2-chain detection with a region filter") {
    auto all = [](const Cell&) { return true; };
    CHECK(has_2chain({{1, 1}, {2, 2}}, all));
    CHECK_FALSE(has_2chain({{1, 2}, {2, 1}}, all));
    CHECK_FALSE(has_2chain({{1, 1}, {1, 2}}, all));
    // filter removes one endpoint of the only chain
    CHECK_FALSE(has_2chain({{1, 1}, {2, 2}}, [](const Cell& c) { return c.row < 2; }));
}

TEST_CASE("extended-coordinate chain patterns") {
    int n = 3;
    // (row, col) = (j, i); pair needs i1 < i2, j1 < j2, j2 > n+1
    CHECK(has_omega_2chain({{2, 1}, {5, 2}}, n));
    CHECK_FALSE(has_omega_2chain({{2, 1}, {4, 2}}, n));   // j2 = n+1 not beyond
    CHECK_FALSE(has_omega_2chain({{5, 2}, {6, 1}}, n));   // columns decrease
    // triple: (j1,i1)=(2,1), (j2,i2)=(3,2), (j3,i3)=(5,1) needs
    // i3 <= i1 < i2, j1 < j2 <= n+1, and n+1 < j3 < n+n1+2-i2
    CHECK_FALSE(has_omega_3chain({{2, 1}, {3, 2}, {5, 1}}, n, 2));  // 5 < 5 fails
    CHECK(has_omega_3chain({{2, 1}, {3, 2}, {5, 1}}, n, 3));        // 5 < 6 holds
}

TEST_CASE("enumeration visits every monomial exactly once") {
    std::vector<Cell> cells = {{1, 1}, {1, 2}, {2, 1}};
    long long visits = 0;
    enumerate_grid_monomials(cells, 4, Int(1000), [&](const std::vector<int>& c) {
        ++visits;
        REQUIRE(c.size() == 3);
        REQUIRE(c[0] + c[1] + c[2] == 4);
    });
    CHECK(visits == 15);  // C(3+4-1, 4)
}

TEST_CASE("enumeration enforces the budget up front") {
    std::vector<Cell> cells;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) cells.push_back({i, j});
    CHECK_THROWS_AS(
        enumerate_grid_monomials(cells, 10, Int(5), [](const std::vector<int>&) {}),
        budget_exceeded);
}

TEST_CASE("2-chain-free counts on small grids") {
    // On a 2x2 grid, degree-1 monomials: all 4 are chain-free.
    CHECK(count_h2_brute(2, 2, 0) == 1);
    CHECK(count_h2_brute(2, 2, 1) == 4);
    // degree-2: forbidden supports are {(1,1),(2,2)} only
    CHECK(count_h2_brute(2, 2, 2) == 9);
    // single row or column: everything is chain-free
    for (long long r = 0; r <= 5; ++r) {
        CHECK(count_h2_brute(1, 4, r) == binomial(4 + r - 1, r));
        CHECK(count_h2_brute(3, 1, r) == binomial(3 + r - 1, r));
    }
}

TEST_CASE("3-chain-free counts on small grids") {
    CHECK(count_h3_brute(3, 3, 0) == 1);
    CHECK(count_h3_brute(3, 3, 1) == 9);
    CHECK(count_h3_brute(3, 3, 3) == 164);
    // grids with fewer than 3 rows never contain a 3-chain
    for (long long r = 0; r <= 4; ++r)
        CHECK(count_h3_brute(2, 3, r) == binomial(6 + r - 1, r));
}

TEST_CASE("mixed-constraint ladder counts") {
    // xi = 1 imposes nothing extra beyond the 3-chain ban
    for (long long r = 0; r <= 4; ++r)
        CHECK(count_P1_brute(3, 3, 1, r) == count_h3_brute(3, 3, r));
    // xi = n+1 bans 2-chains everywhere
    for (long long r = 0; r <= 4; ++r)
        CHECK(count_P1_brute(3, 3, 4, r) == count_h2_brute(3, 3, r));
    CHECK(count_P2_brute(2, 3, 1, 2, 1) == 5);
    // rho = m leaves only the P1 constraints
    for (long long r = 0; r <= 3; ++r)
        CHECK(count_P2_brute(2, 3, 2, 2, r) == count_P1_brute(2, 3, 2, r));
    CHECK_THROWS_AS(count_P1_brute(2, 2, 5, 1), invalid_parameters);
    CHECK_THROWS_AS(count_P2_brute(2, 2, 3, 1, 1), invalid_parameters);
}

TEST_CASE("ladder and staircase pattern counts") {
    CHECK(count_P3_brute(4, 1, 2) == 6);
    // q = 1: all readings coincide with C(p+r-2, r)
    for (int p = 2; p <= 6; ++p)
        for (long long r = 0; r <= 5; ++r)
            CHECK(count_P3_brute(p, 1, r) == binomial(p + r - 2, r));
    for (int s1 = 2; s1 <= 6; ++s1)
        for (long long r = 0; r <= 5; ++r)
            CHECK(count_P3_staircase(s1, 1, r) == binomial(s1 + r - 1 - 1, r));
    // the readings genuinely differ once the region is two columns deep
    CHECK(count_P3_brute(5, 2, 2) != count_P3_staircase(5, 2, 2));
    CHECK(count_P3_literal(4, 1, 2) == binomial(3 + 2 - 1, 2));
    CHECK_THROWS_AS(count_P3_staircase(2, 2, 1), invalid_parameters);
}
