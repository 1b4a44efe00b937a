/**
 * @file closed_form.hpp
 * @brief Closed formulas, memoized recursions, and generating functions for
 *        the chain-restricted grid-monomial counts.
 *
 * Families:
 *   h2(m,n,r)          monomials on the m x n grid with no 2-chain,
 *   h3(m,n,r)          monomials with no 3-chain,
 *   P1(m,n,xi,r)       no 3-chain, no 2-chain among columns < xi,
 *   P2(m,n,rho,xi,r)   additionally supported on rows <= rho or columns >= xi,
 *                      with no 2-chain among rows > rho.
 * Every family has (a) a brute-force oracle in grid.hpp, (b) a memoized
 * recursion, and (c) a rational generating function; the test suite insists
 * the three agree coefficient by coefficient.
 */
#pragma once

#include "hilb/arith.hpp"
#include "hilb/grid.hpp"
#include "hilb/poly.hpp"
#include "hilb/series.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace hilb {

/// Closed form: h2(m,n,r) = C(m-1+r, m-1) * C(n-1+r, n-1).
inline Int h2_closed(int m, int n, long long r) {
    if (m <= 0 || n <= 0 || r < 0) return 0;
    return binomial(m - 1 + r, m - 1) * binomial(n - 1 + r, n - 1);
}

/**
 * Generating function of h2: numerator sum_r C(m-1,r) C(n-1,r) t^r over
 * (1-t)^(m+n-1).  Zero GF for m <= 0 or n <= 0.
 */
inline RationalGF s2_series(int m, int n) {
    if (m <= 0 || n <= 0) return RationalGF::zero();
    std::vector<Int> num;
    for (long long r = 0; r <= std::min(m, n) - 1; ++r)
        num.push_back(binomial(m - 1, r) * binomial(n - 1, r));
    return RationalGF(std::move(num), m + n - 1);
}

/**
 * Generating function of h3: the 2x2 determinant with (i,j) entry
 * sum_r C(m-i, r) C(n-j, r) t^r, divided exactly by t, over (1-t)^(2(m+n-2)).
 * Entries use the falling-factorial binomial so the one-row/one-column cases
 * (m = 1 or n = 1) stay valid; zero GF for m <= 0 or n <= 0.
 * Throws invalid_parameters if the determinant is not divisible by t.
 */
inline RationalGF s3_series(int m, int n) {
    if (m <= 0 || n <= 0) return RationalGF::zero();
    // The single-cell grid has every monomial chain-free: exactly 1/(1-t).
    // The determinant display degenerates here (its denominator exponent
    // 2(m+n-2) vanishes), so return the exact series directly.
    if (m == 1 && n == 1) return RationalGF({1}, 1);
    const long long T = 2LL * (m + n) + 6;
    auto entry = [&](int i, int j) {
        return Series::from_rule(
            T, [&](long long r) { return binomial_gen(m - i, r) * binomial_gen(n - j, r); });
    };
    Series det = det2x2_series(entry(1, 1), entry(1, 2), entry(2, 1), entry(2, 2));
    if (det.coeff(0) != 0)
        throw invalid_parameters("s3_series: determinant not divisible by t");
    return gf_from_series_numerator(det.divided_by_t(), 2 * (m + n - 2));
}

namespace detail {
/// Memoized s3 generating functions (the recursion layer hits them often).
inline const RationalGF& s3_cached(int m, int n) {
    static std::map<std::pair<int, int>, RationalGF> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, s3_series(m, n)).first;
    return it->second;
}
}  // namespace detail

/// h3(m,n,r) read off the s3 generating function.
inline Int h3_closed(int m, int n, long long r) {
    if (m <= 0 || n <= 0 || r < 0) return 0;
    return detail::s3_cached(m, n).coefficient(r);
}

/**
 * P1(m,n,xi,r) by the two-boundary reduction plus the memoized recursion
 *
 *   P1(m,n,xi,r) = sum_{r1=1}^{r} sum_{xi'=1}^{m}
 *                    C(m-xi'-1+r1, r1-1) C(xi-2+r1, r1)
 *                    P1(n-xi+1, m, m-xi'+1, r-r1)
 *                  + h3(m, n-xi+1, r)
 *
 * valid for 3 <= xi <= n, r > 1; xi <= 2 gives h3, xi > n gives h2.
 */
inline Int p1_recursive(int m, int n, int xi, long long r) {
    if (r < 0) return 0;
    if (m <= 0 || n <= 0) return 0;
    if (xi < 1 || xi > n + 1) throw invalid_parameters("p1_recursive: xi out of range");
    if (xi <= 2) return h3_closed(m, n, r);
    if (xi > n) return h2_closed(m, n, r);
    if (r == 0) return 1;
    if (r == 1) return Int(m) * n;

    static std::map<std::tuple<int, int, int, long long>, Int> cache;
    static std::mutex mu;
    auto key = std::make_tuple(m, n, xi, r);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Int acc = h3_closed(m, n - xi + 1, r);
    for (long long r1 = 1; r1 <= r; ++r1)
        for (int xip = 1; xip <= m; ++xip) {
            Int w = binomial(m - xip - 1 + r1, r1 - 1) * binomial(xi - 2 + r1, r1);
            if (w == 0) continue;
            acc += w * p1_recursive(n - xi + 1, m, m - xip + 1, r - r1);
        }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, acc).first->second;
}

/**
 * P2(m,n,rho,xi,r) via the boundary identities
 *   P2(m,n,m,xi,r)  = P1(m,n,xi,r),
 *   P2(m,n,rho,1,r) = P1(n,m,m-rho+1,r)
 * and the memoized two-corner recursion (rho <= m-1, xi >= 2, r > 1):
 *
 *   P2(m,n,rho,xi,r) = sum_{rho'=1}^{rho} sum_{xi'=xi}^{n}
 *       sum_{r1,r2>0, r1+r2<=r}
 *         C(rho-rho'-1+r2, r2-1) C(xi-2+r2, r2)
 *         C(m-rho-1+r1, r1)      C(xi'-xi-1+r1, r1-1)
 *         P2(rho, n-xi+1, rho', xi'-xi+1, r-r1-r2)
 *     + P1(rho, n, xi, r) + P1(n-xi+1, m, m-rho+1, r) - h3(rho, n-xi+1, r).
 */
inline Int p2_recursive(int m, int n, int rho, int xi, long long r) {
    if (r < 0) return 0;
    if (m <= 0 || n <= 0) return 0;
    if (rho < 1 || rho > m || xi < 1 || xi > n)
        throw invalid_parameters("p2_recursive: rho or xi out of range");
    if (rho == m) return p1_recursive(m, n, xi, r);
    if (xi == 1) return p1_recursive(n, m, m - rho + 1, r);
    if (r == 0) return 1;
    if (r == 1) return Int(m) * n - Int(m - rho) * (xi - 1);

    static std::map<std::tuple<int, int, int, int, long long>, Int> cache;
    static std::mutex mu;
    auto key = std::make_tuple(m, n, rho, xi, r);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Int acc = p1_recursive(rho, n, xi, r) + p1_recursive(n - xi + 1, m, m - rho + 1, r) -
              h3_closed(rho, n - xi + 1, r);
    for (int rhop = 1; rhop <= rho; ++rhop)
        for (int xip = xi; xip <= n; ++xip)
            for (long long r1 = 1; r1 < r; ++r1)
                for (long long r2 = 1; r1 + r2 <= r; ++r2) {
                    Int w = binomial(rho - rhop - 1 + r2, r2 - 1) * binomial(xi - 2 + r2, r2) *
                            binomial(m - rho - 1 + r1, r1) * binomial(xip - xi - 1 + r1, r1 - 1);
                    if (w == 0) continue;
                    acc += w * p2_recursive(rho, n - xi + 1, rhop, xip - xi + 1, r - r1 - r2);
                }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, acc).first->second;
}

/**
 * Closed-form generating function of P2(m,n,rho,xi,-): numerator is the 2x2
 * determinant
 *
 *   | sum C(m-2,r)   C(n-xi,r)   t^r     sum C(m-2,r-1) C(n-xi+1,r) t^r |
 *   | sum C(rho-1,r+1) C(n-2,r) t^r     sum C(rho-1,r) C(n-1,r)    t^r |
 *
 * over (1-t)^(m+2n+rho-xi-2).  Entries use the falling-factorial binomial so
 * the degenerate rows (m = 1, n = 1) keep the identity valid; e.g. the
 * (1,1,1,1) instance is 1/(1-t).
 */
inline RationalGF p2_series_closed(int m, int n, int rho, int xi) {
    if (m <= 0 || n <= 0) return RationalGF::zero();
    if (rho < 1 || rho > m || xi < 1 || xi > n)
        throw invalid_parameters("p2_series_closed: rho or xi out of range");
    const long long T = 2LL * (m + 2 * n + rho) + 8;
    Series a = Series::from_rule(
        T, [&](long long r) { return binomial_gen(m - 2, r) * binomial_gen(n - xi, r); });
    Series b = Series::from_rule(
        T, [&](long long r) { return binomial_gen(m - 2, r - 1) * binomial_gen(n - xi + 1, r); });
    Series c = Series::from_rule(
        T, [&](long long r) { return binomial_gen(rho - 1, r + 1) * binomial_gen(n - 2, r); });
    Series d = Series::from_rule(
        T, [&](long long r) { return binomial_gen(rho - 1, r) * binomial_gen(n - 1, r); });
    return gf_from_series_numerator(det2x2_series(a, b, c, d), m + 2LL * n + rho - xi - 2);
}

/// Generating function of P1(m,n,xi,-) = P2(m,n,m,xi,-); pole 2m+2n-xi-2.
inline RationalGF p1_series_closed(int m, int n, int xi) {
    if (m <= 0 || n <= 0) return RationalGF::zero();
    if (xi < 1 || xi > n + 1) throw invalid_parameters("p1_series_closed: xi out of range");
    if (xi > n) {
        // P1 degenerates to h2: numerator of s2 over (1-t)^(m+n-1).
        return s2_series(m, n);
    }
    return p2_series_closed(m, n, m, xi);
}

/// Degree in r and integer lc * degree! of a counting polynomial.
struct DegLcReport {
    long long degree_in_r = 0;
    Int lc_times_factorial = 0;
};

namespace detail {
inline Int rat_to_int(const Rat& v, const char* what) {
    if (!is_integer(v)) throw invalid_parameters(std::string(what) + ": non-integer value");
    return boost::multiprecision::numerator(v);
}
}  // namespace detail

/**
 * Degree and leading coefficient of r -> P1(m,n,xi,r):
 *   degree 2m+2n-5 for xi = 1, 2m+2n-xi-3 for 2 <= xi <= n (m,n >= 2),
 *   lc * degree! = 1                                        if m=1 or n<3,
 *                  C(m+n-4,m-2) C(m+n-3,n-2) / (n-1)        if xi = 1,
 *                  (xi-1) C(m+n-xi-2,m-2) C(m+n-3,n-2)/(n-1) otherwise.
 * xi = n+1 reports the h2 data (degree m+n-2, lc * degree! = C(m+n-2,m-1)).
 */
inline DegLcReport p1_deg_lc(int m, int n, int xi) {
    if (m <= 0 || n <= 0) throw invalid_parameters("p1_deg_lc: need m,n >= 1");
    if (xi < 1 || xi > n + 1) throw invalid_parameters("p1_deg_lc: xi out of range");
    if (xi > n) return {m + n - 2LL, binomial(m + n - 2, m - 1)};
    if (m == 1) return {n - 1LL, 1};
    if (n == 1) return {m - 1LL, 1};
    if (n == 2) return {2LL * m - 1, 1};
    if (xi == 1) {
        Rat lcf = Rat(binomial(m + n - 4, m - 2) * binomial(m + n - 3, n - 2)) / Rat(n - 1);
        return {2LL * m + 2 * n - 5, detail::rat_to_int(lcf, "p1_deg_lc")};
    }
    Rat lcf = Rat(xi - 1) * Rat(binomial(m + n - xi - 2, m - 2) * binomial(m + n - 3, n - 2)) /
              Rat(n - 1);
    return {2LL * m + 2 * n - xi - 3, detail::rat_to_int(lcf, "p1_deg_lc")};
}

/**
 * Degree and leading coefficient of r -> P2(m,n,rho,xi,r):
 *   degree 2m+2n-5 for (rho,xi) = (m,1), else m+2n+rho-xi-3 (m,n >= 2);
 *   lc * degree! = 1 for m = 1 or n = 1, the P1 value on the boundary rows,
 *   and otherwise
 *     ((m-rho)(n-1) + (rho-1)(xi-1)) / ((m-1)(n-1))
 *       * C(m+n-xi-2, m-2) * C(rho+n-3, n-2).
 */
inline DegLcReport p2_deg_lc(int m, int n, int rho, int xi) {
    if (m <= 0 || n <= 0) throw invalid_parameters("p2_deg_lc: need m,n >= 1");
    if (rho < 1 || rho > m || xi < 1 || xi > n)
        throw invalid_parameters("p2_deg_lc: rho or xi out of range");
    if (m == 1) return {n - 1LL, 1};
    if (n == 1) return {m - 1LL, 1};
    if (rho == m) return p1_deg_lc(m, n, xi);
    if (xi == 1) return p1_deg_lc(n, m, m - rho + 1);
    Rat lcf = Rat(Int(m - rho) * (n - 1) + Int(rho - 1) * (xi - 1)) /
              Rat(Int(m - 1) * (n - 1)) *
              Rat(binomial(m + n - xi - 2, m - 2) * binomial(rho + n - 3, n - 2));
    return {m + 2LL * n + rho - xi - 3, detail::rat_to_int(lcf, "p2_deg_lc")};
}

/**
 * Vandermonde-type binomial identities used by the degree/lc derivations:
 *   (1) sum_{r=0..n} C(p,r) C(q,n-r)         = C(p+q, n)
 *   (2) sum_{r=0..n} C(r,p) C(n-r,q)         = C(n+1, p+q+1)
 *   (3) sum_{r>=0}   C(p,r+n) C(q,r)         = C(p+q, q+n)
 *   (4) sum_{r=0..n} C(p+r,p) C(n-r,q)       = C(p+n+1, p+q+1)
 *   (5) sum_{r=0..n} C(p+r,p) C(n-r+q,q)     = C(p+q+n+1, p+q+1)
 * Checks all 0 <= p, q, n <= limit; returns descriptions of any failures.
 */
inline std::vector<std::string> lemma_identities_failures(int limit) {
    std::vector<std::string> bad;
    auto note = [&](int id, int p, int q, int n) {
        bad.push_back("identity " + std::to_string(id) + " fails at p=" + std::to_string(p) +
                      " q=" + std::to_string(q) + " n=" + std::to_string(n));
    };
    for (int p = 0; p <= limit; ++p)
        for (int q = 0; q <= limit; ++q)
            for (int n = 0; n <= limit; ++n) {
                Int s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
                for (int r = 0; r <= n; ++r) {
                    s1 += binomial(p, r) * binomial(q, n - r);
                    s2 += binomial(r, p) * binomial(n - r, q);
                    s4 += binomial(p + r, p) * binomial(n - r, q);
                    s5 += binomial(p + r, p) * binomial(n - r + q, q);
                }
                for (int r = 0; r <= p; ++r)  // C(p, r+n) vanishes past r = p
                    s3 += binomial(p, r + n) * binomial(q, r);
                if (s1 != binomial(p + q, n)) note(1, p, q, n);
                if (s2 != binomial(n + 1, p + q + 1)) note(2, p, q, n);
                if (s3 != binomial(p + q, q + n)) note(3, p, q, n);
                if (s4 != binomial(p + n + 1, p + q + 1)) note(4, p, q, n);
                if (s5 != binomial(p + q + n + 1, p + q + 1)) note(5, p, q, n);
            }
    return bad;
}

}  // namespace hilb
