/**
 * @file grid.hpp
 * @brief Grid monomials, chain predicates, and brute-force counting.
 *
 * A grid monomial is a finite multiset of integer lattice cells (row, col).
 * The counting routines here enumerate every monomial of a given total degree
 * over an explicit cell list and test chain predicates on the support; they
 * serve as the ground-truth oracles against which every closed formula in the
 * library is checked.
 */
#pragma once

#include "hilb/arith.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

namespace hilb {

/// One lattice cell.  Extended indices (0, -1, n+1, ...) are permitted.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Multiset of cells with positive multiplicities.
struct GridMonomial {
    std::map<Cell, int> mult;

    long long degree() const {
        long long d = 0;
        for (auto& [c, m] : mult) d += m;
        return d;
    }
    std::vector<Cell> support() const {
        std::vector<Cell> s;
        s.reserve(mult.size());
        for (auto& [c, m] : mult) s.push_back(c);
        return s;
    }
};

/// Ladder region O_{p,q} = { (s,t) : 1 <= t <= q, 1 <= s <= p - t }, p >= q >= 1.
struct LadderShape {
    int p = 1;
    int q = 1;
    /// Cells listed as (row = s, col = t).
    std::vector<Cell> cells() const {
        if (q < 1 || p < q) throw invalid_parameters("LadderShape: need p >= q >= 1");
        std::vector<Cell> out;
        for (int t = 1; t <= q; ++t)
            for (int s = 1; s <= p - t; ++s) out.push_back({s, t});
        return out;
    }
};

/**
 * True if some 3 distinct support cells are strictly increasing in both row
 * and column.  Multiplicities never matter for chain predicates: equal cells
 * cannot satisfy the strict inequalities.
 */
inline bool has_3chain(const std::vector<Cell>& support) {
    const size_t n = support.size();
    if (n < 3) return false;
    std::vector<Cell> s = support;
    std::sort(s.begin(), s.end());
    // len[i]: longest strictly-increasing (row and col) chain ending at s[i].
    std::vector<int> len(n, 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < i; ++j)
            if (s[j].row < s[i].row && s[j].col < s[i].col)
                len[i] = std::max(len[i], len[j] + 1);
        if (len[i] >= 3) return true;
    }
    return false;
}

/// True if two distinct support cells inside `region` strictly increase in
/// both coordinates.
inline bool has_2chain(const std::vector<Cell>& support,
                       const std::function<bool(const Cell&)>& region) {
    std::vector<Cell> s;
    for (const Cell& c : support)
        if (region(c)) s.push_back(c);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j)
            if (s[i].row < s[j].row && s[i].col < s[j].col) return true;
    return false;
}

/**
 * Extended-coordinate pair pattern: distinct support cells (j1,i1), (j2,i2)
 * (row = j, col = i) with i1 < i2, j1 < j2 and j2 > n + 1.
 */
inline bool has_omega_2chain(const std::vector<Cell>& support, int n) {
    for (const Cell& a : support)
        for (const Cell& b : support)
            if (a.col < b.col && a.row < b.row && b.row > n + 1) return true;
    return false;
}

/**
 * Extended-coordinate triple pattern: distinct support cells
 * (j1,i1), (j2,i2), (j3,i3) with i3 <= i1 < i2, j1 < j2 <= n+1 and
 * n+1 < j3 < n + n1 + 2 - i2.
 */
inline bool has_omega_3chain(const std::vector<Cell>& support, int n, int n1) {
    for (const Cell& a : support) {          // (j1, i1)
        for (const Cell& b : support) {      // (j2, i2)
            if (!(a.col < b.col && a.row < b.row && b.row <= n + 1)) continue;
            for (const Cell& c : support) {  // (j3, i3)
                if (c == a || c == b) continue;
                if (c.col <= a.col && c.row > n + 1 && c.row < n + n1 + 2 - b.col) return true;
            }
        }
    }
    return false;
}

/**
 * Enumerate all degree-r monomials over `cells` in lexicographic order of the
 * exponent vector (first cell's exponent most significant, descending).
 * Calls `visit(counts)` once per monomial; counts[i] is the multiplicity of
 * cells[i].  Throws budget_exceeded up front if the total stream length
 * C(#cells + r - 1, r) exceeds `budget`.
 */
inline void enumerate_grid_monomials(const std::vector<Cell>& cells, long long r, Int budget,
                                     const std::function<void(const std::vector<int>&)>& visit) {
    if (r < 0) return;
    if (cells.empty()) {
        if (r == 0) visit({});
        return;
    }
    Int total = binomial(static_cast<long long>(cells.size()) + r - 1, r);
    if (total > budget)
        throw budget_exceeded("enumeration budget exceeded: " + total.str() +
                              " monomials requested, budget " + budget.str());
    std::vector<int> counts(cells.size(), 0);
    // Recursive distribution of remaining degree, highest multiplicity first.
    std::function<void(size_t, long long)> rec = [&](size_t idx, long long rem) {
        if (idx + 1 == cells.size()) {
            counts[idx] = static_cast<int>(rem);
            visit(counts);
            counts[idx] = 0;
            return;
        }
        for (long long m = rem; m >= 0; --m) {
            counts[idx] = static_cast<int>(m);
            rec(idx + 1, rem - m);
        }
        counts[idx] = 0;
    };
    rec(0, r);
}

/// Work budget for brute-force enumerations; overridable via HILB_BUDGET.
inline Int default_budget() {
    if (const char* env = std::getenv("HILB_BUDGET")) {
        try {
            return Int(env);
        } catch (...) {
            // fall through to the default
        }
    }
    return Int(10000000);
}

namespace detail {
/// Support cells (multiplicity > 0) of an exponent vector over `cells`.
inline std::vector<Cell> support_of(const std::vector<Cell>& cells, const std::vector<int>& counts) {
    std::vector<Cell> s;
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) s.push_back(cells[i]);
    return s;
}

/// Full m x n grid, rows 1..m, cols 1..n.
inline std::vector<Cell> full_grid(int m, int n) {
    std::vector<Cell> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) cells.push_back({i, j});
    return cells;
}
}  // namespace detail

/// Count degree-r monomials on the m x n grid with no 2-chain at all.
inline Int count_h2_brute(int m, int n, long long r, Int budget = default_budget()) {
    if (m <= 0 || n <= 0) return 0;
    Int count = 0;
    auto cells = detail::full_grid(m, n);
    enumerate_grid_monomials(cells, r, budget, [&](const std::vector<int>& counts) {
        auto s = detail::support_of(cells, counts);
        if (!has_2chain(s, [](const Cell&) { return true; })) ++count;
    });
    return count;
}

/// Count degree-r monomials on the m x n grid with no 3-chain.
inline Int count_h3_brute(int m, int n, long long r, Int budget = default_budget()) {
    if (m <= 0 || n <= 0) return 0;
    Int count = 0;
    auto cells = detail::full_grid(m, n);
    enumerate_grid_monomials(cells, r, budget, [&](const std::vector<int>& counts) {
        if (!has_3chain(detail::support_of(cells, counts))) ++count;
    });
    return count;
}

/**
 * Count degree-r monomials on the m x n grid with no 3-chain anywhere and no
 * 2-chain among cells with column < xi.  Valid for 1 <= xi <= n + 1.
 */
inline Int count_P1_brute(int m, int n, int xi, long long r, Int budget = default_budget()) {
    if (m <= 0 || n <= 0) return 0;
    if (xi < 1 || xi > n + 1) throw invalid_parameters("count_P1_brute: xi out of range");
    Int count = 0;
    auto cells = detail::full_grid(m, n);
    enumerate_grid_monomials(cells, r, budget, [&](const std::vector<int>& counts) {
        auto s = detail::support_of(cells, counts);
        if (has_3chain(s)) return;
        if (has_2chain(s, [&](const Cell& c) { return c.col < xi; })) return;
        ++count;
    });
    return count;
}

/**
 * Count degree-r monomials supported on { (i,j) : i <= rho or j >= xi } inside
 * the m x n grid, with no 3-chain, no 2-chain among columns < xi, and no
 * 2-chain among rows > rho.  Valid for 1 <= rho <= m, 1 <= xi <= n.
 */
inline Int count_P2_brute(int m, int n, int rho, int xi, long long r,
                          Int budget = default_budget()) {
    if (m <= 0 || n <= 0) return 0;
    if (rho < 1 || rho > m || xi < 1 || xi > n)
        throw invalid_parameters("count_P2_brute: rho or xi out of range");
    std::vector<Cell> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (i <= rho || j >= xi) cells.push_back({i, j});
    Int count = 0;
    enumerate_grid_monomials(cells, r, budget, [&](const std::vector<int>& counts) {
        auto s = detail::support_of(cells, counts);
        if (has_3chain(s)) return;
        if (has_2chain(s, [&](const Cell& c) { return c.col < xi; })) return;
        if (has_2chain(s, [&](const Cell& c) { return c.row > rho; })) return;
        ++count;
    });
    return count;
}

/**
 * Ladder count P3(p, q, r): degree-r monomials over O_{p,q} whose support is
 * free of the pair pattern t < t' with s > s' (cells written (s,t)); i.e. the
 * support cells form a chain in the componentwise order, up to equal rows or
 * columns.  This is the pattern the extended-coordinate 2-chain predicate
 * induces on ladder cells.
 */
inline Int count_P3_brute(int p, int q, long long r, Int budget = default_budget()) {
    LadderShape shape{p, q};
    auto ladder = shape.cells();
    Int count = 0;
    enumerate_grid_monomials(ladder, r, budget, [&](const std::vector<int>& counts) {
        auto s = detail::support_of(ladder, counts);
        // Forbidden pair: t < t' and s > s'; realize as a 2-chain on
        // (row = t, col = -s).
        std::vector<Cell> mapped;
        mapped.reserve(s.size());
        for (const Cell& c : s) mapped.push_back({c.col, -c.row});
        if (!has_2chain(mapped, [](const Cell&) { return true; })) ++count;
    });
    return count;
}

/**
 * Chain-free count over the staircase region
 *   B(s1, t1) = { (s, t) : 1 <= t <= t1, t < s <= s1 },
 * forbidding pairs with t < t' and s > s'.  This is the count of
 * skew-generator monomials with prescribed coordinate maxima (s1, t1) that
 * the omega-chain oracle validates; it coincides with count_P3_brute for
 * t1 = 1 but differs from both the ladder and the literal readings once
 * s1 >= 4 and t1 >= 2 (the ladder change of coordinates does not preserve
 * the chain order).
 */
inline Int count_P3_staircase(int s1, int t1, long long r, Int budget = default_budget()) {
    if (t1 < 1 || s1 <= t1) throw invalid_parameters("count_P3_staircase: need s1 > t1 >= 1");
    std::vector<Cell> cells;
    for (int t = 1; t <= t1; ++t)
        for (int s = t + 1; s <= s1; ++s) cells.push_back({s, t});
    Int count = 0;
    enumerate_grid_monomials(cells, r, budget, [&](const std::vector<int>& counts) {
        auto sup = detail::support_of(cells, counts);
        std::vector<Cell> mapped;
        mapped.reserve(sup.size());
        for (const Cell& c : sup) mapped.push_back({c.col, -c.row});
        if (!has_2chain(mapped, [](const Cell&) { return true; })) ++count;
    });
    return count;
}

/// Alternative literal reading: all degree-r monomials over the ladder.
inline Int count_P3_literal(int p, int q, long long r) {
    LadderShape shape{p, q};
    long long cells = static_cast<long long>(shape.cells().size());
    return binomial(cells + r - 1, r);
}

}  // namespace hilb
