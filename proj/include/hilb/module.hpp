/**
 * @file module.hpp
 * @brief Associated-variety and generator-filtration analysis for the
 *        two-parameter family of bigraded modules indexed by
 *        (n, n1, n2, l1, l2) with 1 <= n1 <= n2 <= n.
 *
 * The index blocks are J1 = [1, n1], J2 = [n1+1, n2], J3 = [n2+1, n].
 * A monomial x^alpha y^beta is admissible when
 *   sum_{J2 u J3} alpha - sum_{J1} alpha = l1,
 *   sum_{J1 u J2} beta  - sum_{J3} beta  = l2,
 * and alpha_{n1+1} * beta_{n1+1} = 0 (when index n1+1 exists).
 *
 * Provided here:
 *   - parameter validation (the admissibility clauses),
 *   - the associated-variety Hilbert series / polynomial / degree / genus,
 *   - generator-filtration value tables, closed forms where they exist,
 *   - brute-force oracles for every closed form,
 *   - the leading-coefficient ratio table and the equality-case table.
 */
#pragma once

#include "hilb/arith.hpp"
#include "hilb/closed_form.hpp"
#include "hilb/grid.hpp"
#include "hilb/poly.hpp"
#include "hilb/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

struct ModuleParams {
    int n = 2;
    int n1 = 1;
    int n2 = 1;
    long long l1 = 0;
    long long l2 = 0;
};

/// Parameter reflection (n, n1, n2, l1, l2) -> (n, n-n2, n-n1, l2, l1).
/// Involutive; the reflected module has identical filtered dimension tables.
inline ModuleParams reflect_params(const ModuleParams& p) {
    return {p.n, p.n - p.n2, p.n - p.n1, p.l2, p.l1};
}

struct ValidationResult {
    bool accepted = false;
    std::string clause;  // which admissibility clause matched
    std::string reason;  // rejection explanation when not accepted
};

/**
 * Admissibility of (n, n1, n2, l1, l2).  Structural requirements (n >= 2,
 * 1 <= n1 <= n2 <= n) throw; the weight clauses return accept/reject:
 *
 *  n1+1 < n2:  (1a) l1+l2 <= n1-n2+1, or n2 = n with
 *              (1b) l1 >= 0 = l2 or (1c) l2 >= 0, l1 >= n1-n+2.
 *  n1+1 = n2:  (2)  l1+l2 <= 0, or (2n) n2 = n with 0 <= l2 <= l1.
 *
 *  When n2 = n the grading forces the total y-degree to equal l2, so the
 *  module is zero for l2 < 0; clauses (1a) and (2) therefore additionally
 *  require l2 >= 0 in that boundary regime.
 *  n1 = n2:    l1+l2 <= 0 and one of
 *              (3a) l2 <= 0, n1 < n-1, n >= 3,
 *              (3b) l1 <= 0, 1 < n1 < n, n >= 3,
 *              (3c) l1, l2 <= 0, n1 = 1, n = 2.
 */
inline ValidationResult validate_params(const ModuleParams& p) {
    if (p.n < 2) throw invalid_parameters("validate_params: need n >= 2");
    if (p.n1 < 1 || p.n1 > p.n2 || p.n2 > p.n)
        throw invalid_parameters("validate_params: need 1 <= n1 <= n2 <= n");
    const long long l1 = p.l1, l2 = p.l2;
    ValidationResult res;
    if (p.n1 + 1 < p.n2) {
        if (l1 + l2 <= p.n1 - p.n2 + 1 && (p.n2 < p.n || l2 >= 0)) {
            res = {true, "1a", ""};
        } else if (p.n2 == p.n && l1 >= 0 && l2 == 0) {
            res = {true, "1b", ""};
        } else if (p.n2 == p.n && l2 >= 0 && l1 >= p.n1 - p.n + 2) {
            res = {true, "1c", ""};
        } else {
            res.reason = "n1+1 < n2 requires l1+l2 <= n1-n2+1 (with l2 >= 0 when "
                         "n2 = n), or n2 = n with (l1 >= 0 = l2) or (l2 >= 0 and "
                         "l1 >= n1-n+2)";
        }
    } else if (p.n1 + 1 == p.n2) {
        if (l1 + l2 <= 0 && (p.n2 < p.n || l2 >= 0)) {
            res = {true, "2", ""};
        } else if (p.n2 == p.n && 0 <= l2 && l2 <= l1) {
            res = {true, "2n", ""};
        } else {
            res.reason = "n1+1 = n2 requires l1+l2 <= 0 (with l2 >= 0 when n2 = n), "
                         "or n2 = n with 0 <= l2 <= l1";
        }
    } else {  // n1 == n2 (forces n2 < n is NOT implied; n1 = n2 = n is structural)
        if (p.n1 == p.n) {
            res.reason = "n1 = n2 = n admits no weights";
        } else if (l1 + l2 > 0) {
            res.reason = "n1 = n2 requires l1+l2 <= 0";
        } else if (l2 <= 0 && p.n1 < p.n - 1 && p.n >= 3) {
            res = {true, "3a", ""};
        } else if (l1 <= 0 && 1 < p.n1 && p.n1 < p.n && p.n >= 3) {
            res = {true, "3b", ""};
        } else if (l1 <= 0 && l2 <= 0 && p.n1 == 1 && p.n == 2) {
            res = {true, "3c", ""};
        } else {
            res.reason = "n1 = n2 requires l1+l2 <= 0 and one of: "
                         "(l2 <= 0, n1 < n-1, n >= 3); (l1 <= 0, 1 < n1 < n, n >= 3); "
                         "(l1,l2 <= 0, n1 = 1, n = 2)";
        }
    }
    return res;
}

/// Krull dimension of the associated variety.
inline long long krull_dimension(const ModuleParams& p) {
    if (p.n1 != p.n2 && p.n2 != p.n) return 2LL * p.n - 3;
    if (p.n2 == p.n) return p.n - 1;  // n1 < n2 = n
    // n1 == n2 < n
    if (1 < p.n1 && p.n1 < p.n - 1) return 2LL * p.n - 4;
    return p.n - 1;  // n1 = n2 = 1 or n1 = n2 = n-1
}

/**
 * Degree of the associated variety (value of the canonical GF numerator at 1).
 * The n1 != n2 != n value is the 2x2 binomial determinant
 *   C(n-3,n2-2) C(n-2,n1-1) - C(n-2,n2-1) C(n-3,n1-2),
 * which the factored form ((n-2)/(n1-1) - (n-2)/(n2-1)) C(n-3,n1-2) C(n-3,n2-2)
 * expands to wherever the latter is defined (it has a removable singularity
 * at n1 = 1).
 */
inline Int variety_degree(const ModuleParams& p) {
    if (p.n2 == p.n) return binomial(p.n - 2, p.n1 - 1);
    if (p.n1 != p.n2)
        return binomial(p.n - 3, p.n2 - 2) * binomial(p.n - 2, p.n1 - 1) -
               binomial(p.n - 2, p.n2 - 1) * binomial(p.n - 3, p.n1 - 2);
    // n1 == n2 < n
    if (1 < p.n1 && p.n1 < p.n - 1) {
        Rat deg = Rat(binomial(p.n - 4, p.n1 - 2) * binomial(p.n - 3, p.n1 - 2)) / Rat(p.n1 - 1);
        return detail::rat_to_int(deg, "variety_degree");
    }
    return 1;
}

/// Arithmetic genus: the constant term of the Hilbert series, always 1 here.
inline Int variety_genus(const ModuleParams&) { return 1; }

/**
 * Hilbert series of the associated variety as a rational GF.
 *
 * For n1 <= n2 < n this is the 2x2 determinant numerator over (1-t)^(2n-3),
 * which coincides with the closed P2-series at (n2, n-n1, n1, n2-n1+1).
 * For n2 = n the printed general form degenerates (a structural binomial row
 * vanishes identically); the series is instead the no-2-chain series of the
 * (n-n1) x n1 grid with pole order n-1, consistent with the Krull dimension
 * and degree above.  Callers should surface `uses_two_row_form` as a note.
 */
struct VarietySeries {
    RationalGF gf;              // as constructed (not canonicalized)
    bool uses_two_row_form = false;  // true on the n2 = n branch
};
inline VarietySeries variety_series(const ModuleParams& p) {
    if (p.n2 == p.n) return {s2_series(p.n - p.n1, p.n1), true};
    return {p2_series_closed(p.n2, p.n - p.n1, p.n1, p.n2 - p.n1 + 1), false};
}

/// Hilbert polynomial of the associated variety.
inline Poly variety_polynomial(const ModuleParams& p) {
    return variety_series(p).gf.to_polynomial().poly;
}

/// Value of the variety Hilbert function at k (exact count, all k >= 0):
/// P2(n2, n-n1, n1, n2-n1+1, k) for n2 < n, the no-2-chain count for n2 = n.
inline Int variety_value(const ModuleParams& p, long long k) {
    if (p.n2 == p.n) return h2_closed(p.n - p.n1, p.n1, k);
    return p2_recursive(p.n2, p.n - p.n1, p.n1, p.n2 - p.n1 + 1, k);
}

/**
 * The d-weight of an admissible monomial x^alpha y^beta:
 *   2 sum_{J3} alpha + sum_{J2} alpha + 2 sum_{J1} beta + sum_{J2} beta
 *     - (l1 + |l1| + l2 + |l2|) / 2.
 * alpha and beta are exponent vectors indexed 1..n (position 0 unused is not
 * allowed: vectors must have size n).  Throws if the grading constraints are
 * violated.
 */
inline Int d_weight(const std::vector<long long>& alpha, const std::vector<long long>& beta,
                    const ModuleParams& p) {
    if (alpha.size() != static_cast<size_t>(p.n) || beta.size() != static_cast<size_t>(p.n))
        throw invalid_parameters("d_weight: exponent vectors must have length n");
    long long a1 = 0, a2 = 0, a3 = 0, b1 = 0, b2 = 0, b3 = 0;
    for (int i = 1; i <= p.n; ++i) {
        long long a = alpha[i - 1], b = beta[i - 1];
        if (a < 0 || b < 0) throw invalid_parameters("d_weight: negative exponent");
        if (i <= p.n1) {
            a1 += a;
            b1 += b;
        } else if (i <= p.n2) {
            a2 += a;
            b2 += b;
        } else {
            a3 += a;
            b3 += b;
        }
    }
    if (a2 + a3 - a1 != p.l1 || b1 + b2 - b3 != p.l2)
        throw invalid_parameters("d_weight: monomial violates the grading constraints");
    long long corr = (p.l1 + std::llabs(p.l1) + p.l2 + std::llabs(p.l2)) / 2;
    return Int(2 * a3 + a2 + 2 * b1 + b2 - corr);
}

/**
 * Count of admissible monomials with prescribed block sums
 * (k11,k12,k13) for alpha and (k21,k22,k23) for beta, using stars-and-bars
 * per block and one inclusion-exclusion for alpha_{n1+1} beta_{n1+1} = 0.
 */
inline Int count_block_monomials(const ModuleParams& p, long long k11, long long k12,
                                 long long k13, long long k21, long long k22, long long k23) {
    long long b1 = p.n1, b2 = p.n2 - p.n1, b3 = p.n - p.n2;
    auto pairs = [&](long long sa, long long sb, long long b) {
        // Joint count with the product constraint on the block's first index.
        Int v = compositions(sa, b) * compositions(sb, b);
        if (b >= 1) v -= compositions(sa - 1, b) * compositions(sb - 1, b);
        return v;
    };
    Int total;
    if (b2 > 0) {  // index n1+1 lies in J2
        total = compositions(k11, b1) * compositions(k21, b1) * pairs(k12, k22, b2) *
                compositions(k13, b3) * compositions(k23, b3);
    } else if (b3 > 0) {  // n1 = n2 < n: index n1+1 lies in J3
        total = compositions(k11, b1) * compositions(k21, b1) * pairs(k13, k23, b3);
    } else {  // n1 = n2 = n: no index n1+1
        total = compositions(k11, b1) * compositions(k21, b1);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Generator-filtration case split
// ---------------------------------------------------------------------------

enum class GeneratorCase {
    TopBlockFull,   // (i)   n1 < n2 = n: closed block-sum counts
    EqualBlocks,    // (ii)  n1 = n2 < n, l1 <= 0, l2 <= 0: weighted chain sums
    Mixed,          // (iii) n1 < n2 < n: values-only oracle counts
    SkewPositive,   // (iv)  1 < n1 = n2 < n, l1 <= 0 < l2: ladder-weighted sums
    SkewReflected,  // (v)   n1 = n2 < n-1, l1 > 0 >= l2: reflection of (iv)
};

inline GeneratorCase generator_case(const ModuleParams& p) {
    if (p.n2 == p.n) return GeneratorCase::TopBlockFull;
    if (p.n1 < p.n2) return GeneratorCase::Mixed;
    if (p.l1 <= 0 && p.l2 <= 0) return GeneratorCase::EqualBlocks;
    if (p.l2 > 0) return GeneratorCase::SkewPositive;
    return GeneratorCase::SkewReflected;
}

inline std::string generator_case_name(GeneratorCase c) {
    switch (c) {
        case GeneratorCase::TopBlockFull: return "top-block-full";
        case GeneratorCase::EqualBlocks: return "equal-blocks";
        case GeneratorCase::Mixed: return "mixed";
        case GeneratorCase::SkewPositive: return "skew-positive";
        case GeneratorCase::SkewReflected: return "skew-reflected";
    }
    return "?";
}

// --- case (i): n1 < n2 = n ------------------------------------------------

/**
 * Generator-layer value for n1 < n2 = n: the level-k slice of the generating
 * space decomposes by the beta split (k21, k22) with k21 + k22 = l2, and the
 * alpha block sums are (k, l1+k) for l1 >= 0 and (-l1+k, k) for l1 < 0.
 */
inline Int top_block_value(const ModuleParams& p, long long k) {
    if (k < 0) return 0;
    long long k11 = p.l1 >= 0 ? k : -p.l1 + k;
    long long k12 = p.l1 >= 0 ? p.l1 + k : k;
    Int acc = 0;
    for (long long k21 = 0; k21 <= p.l2; ++k21)
        acc += count_block_monomials(p, k11, k12, 0, k21, p.l2 - k21, 0);
    return acc;
}

/**
 * Closed three-binomial form for n1 + 1 < n2 = n with l1, l2 >= 0:
 *   C(n+l2-1,l2) X C(a-1,j) + C(n+l2-2,l2) X C(a,j) - C(n+l2-2,l2) X C(a-1,j)
 * with X = C(n1+k-1,k), a = n-n1+l1+k-1, j = l1+k.  (The source's factored
 * single product misprints the first summand's numerator; this expanded form
 * is the one the derivation yields and the enumeration oracle confirms.)
 */
inline Int top_block_closed_form(const ModuleParams& p, long long k) {
    if (!(p.n1 + 1 < p.n2 && p.n2 == p.n && p.l1 >= 0 && p.l2 >= 0))
        throw invalid_parameters("top_block_closed_form: needs n1+1 < n2 = n, l1,l2 >= 0");
    Int X = binomial(p.n1 + k - 1, k);
    long long a = p.n - p.n1 + p.l1 + k - 1, j = p.l1 + k;
    return binomial(p.n + p.l2 - 1, p.l2) * X * binomial(a - 1, j) +
           binomial(p.n + p.l2 - 2, p.l2) * X * (binomial(a, j) - binomial(a - 1, j));
}

/// Closed product form for n1 + 1 = n2 = n with l1, l2 >= 0.
inline Int top_block_adjacent_closed_form(const ModuleParams& p, long long k) {
    if (!(p.n1 + 1 == p.n2 && p.n2 == p.n && p.l1 >= 0 && p.l2 >= 0))
        throw invalid_parameters("top_block_adjacent_closed_form: needs n1+1 = n2 = n, l1,l2 >= 0");
    return binomial(p.n + k - 2, k) * binomial(p.n + p.l2 - 2, p.l2);
}

/// Brute-force oracle for case (i): enumerate exponent vectors directly.
inline Int oracle_top_block_count(const ModuleParams& p, long long k,
                                  Int budget = default_budget()) {
    long long k11 = p.l1 >= 0 ? k : -p.l1 + k;
    long long k12 = p.l1 >= 0 ? p.l1 + k : k;
    long long w1 = p.n1, w2 = p.n2 - p.n1;  // n2 = n so J3 empty
    Int work = 0;
    Int acc = 0;
    // Enumerate alpha over J1 and J2, beta over J1 and J2 with all splits of l2.
    std::vector<long long> a2(static_cast<size_t>(w2), 0);
    std::function<void(size_t, long long, const std::function<void()>&)> comp_rec =
        [&](size_t, long long, const std::function<void()>&) {};
    auto for_each_composition = [&](std::vector<long long>& vec, long long total,
                                    const std::function<void()>& body) {
        std::function<void(size_t, long long)> rec = [&](size_t idx, long long rem) {
            if (idx + 1 == vec.size()) {
                vec[idx] = rem;
                body();
                vec[idx] = 0;
                return;
            }
            for (long long v = 0; v <= rem; ++v) {
                vec[idx] = v;
                rec(idx + 1, rem - v);
            }
            vec[idx] = 0;
        };
        if (vec.empty()) {
            if (total == 0) body();
            return;
        }
        rec(0, total);
    };
    std::vector<long long> alpha1(static_cast<size_t>(w1), 0), alpha2(static_cast<size_t>(w2), 0);
    std::vector<long long> beta1(static_cast<size_t>(w1), 0), beta2(static_cast<size_t>(w2), 0);
    for (long long k21 = 0; k21 <= p.l2; ++k21) {
        long long k22 = p.l2 - k21;
        for_each_composition(alpha1, k11, [&] {
            for_each_composition(alpha2, k12, [&] {
                for_each_composition(beta1, k21, [&] {
                    for_each_composition(beta2, k22, [&] {
                        if (++work > budget)
                            throw budget_exceeded("oracle_top_block_count: budget exceeded");
                        // alpha_{n1+1} is alpha2[0]; beta likewise.
                        if (!alpha2.empty() && alpha2[0] > 0 && beta2[0] > 0) return;
                        ++acc;
                    });
                });
            });
        });
    }
    return acc;
}

// --- case (ii): n1 = n2 < n, l1 <= 0, l2 <= 0 -----------------------------

/// Multiplicity weight of a lowest/highest support pair (e4-style G0 factor).
inline Int equal_blocks_weight(int d, int i1, long long l1, long long l2) {
    if (l1 < 0 && l2 < 0)
        return binomial(d - l2 - 2, -l2 - 1) * binomial(i1 - l1 - 2, -l1 - 1);
    if (l1 == 0 && l2 < 0) return binomial(d - l2 - 2, -l2 - 1);
    if (l1 < 0 && l2 == 0) return binomial(i1 - l1 - 2, -l1 - 1);
    return 1;
}

/**
 * Generator-layer value for n1 = n2 < n with l1, l2 <= 0, as a weighted sum of
 * chain counts over the extreme support indices (i1 = top alpha index in J1,
 * j1 = bottom beta index in J3):
 *   sum_{i1, j1} G0(n-j1+1, i1) P2(n-n1, n1, j1-n1, i1, k)     (l1, l2 < 0)
 * with the one-sided and trivial specializations for l1 = 0 or l2 = 0, and
 * closed product forms when n1 = 1 or n1 = n-1.
 */
inline Int equal_blocks_value(const ModuleParams& p, long long k) {
    if (k < 0) return 0;
    const int n = p.n, n1 = p.n1;
    if (n1 == 1) return binomial(n + k - 2, k) * binomial(n - p.l2 - 2, -p.l2);
    if (n1 == n - 1) return binomial(n + k - 2, k) * binomial(n - p.l1 - 2, -p.l1);
    if (p.l1 < 0 && p.l2 < 0) {
        Int acc = 0;
        for (int i1 = 1; i1 <= n1; ++i1)
            for (int j1 = n1 + 1; j1 <= n; ++j1)
                acc += equal_blocks_weight(n - j1 + 1, i1, p.l1, p.l2) *
                       p2_recursive(n - n1, n1, j1 - n1, i1, k);
        return acc;
    }
    if (p.l1 == 0 && p.l2 < 0) {
        Int acc = 0;
        for (int j1 = n1 + 1; j1 <= n; ++j1)
            acc += equal_blocks_weight(n - j1 + 1, 1, p.l1, p.l2) *
                   p1_recursive(n1, n - n1, n - j1 + 1, k);
        return acc;
    }
    if (p.l1 < 0 && p.l2 == 0) {
        Int acc = 0;
        for (int i1 = 1; i1 <= n1; ++i1)
            acc += equal_blocks_weight(n, i1, p.l1, p.l2) * p1_recursive(n - n1, n1, i1, k);
        return acc;
    }
    return h3_closed(n - n1, n1, k);
}

/// Generating function matching equal_blocks_value.
inline RationalGF equal_blocks_gf(const ModuleParams& p) {
    const int n = p.n, n1 = p.n1;
    if (n1 == 1 || n1 == n - 1) {
        Int c = n1 == 1 ? binomial(n - p.l2 - 2, -p.l2) : binomial(n - p.l1 - 2, -p.l1);
        return RationalGF({c}, n - 1);
    }
    RationalGF acc = RationalGF::zero();
    if (p.l1 < 0 && p.l2 < 0) {
        for (int i1 = 1; i1 <= n1; ++i1)
            for (int j1 = n1 + 1; j1 <= n; ++j1)
                acc = acc + p2_series_closed(n - n1, n1, j1 - n1, i1) *
                                equal_blocks_weight(n - j1 + 1, i1, p.l1, p.l2);
        return acc;
    }
    if (p.l1 == 0 && p.l2 < 0) {
        for (int j1 = n1 + 1; j1 <= n; ++j1)
            acc = acc + p1_series_closed(n1, n - n1, n - j1 + 1) *
                            equal_blocks_weight(n - j1 + 1, 1, p.l1, p.l2);
        return acc;
    }
    if (p.l1 < 0 && p.l2 == 0) {
        for (int i1 = 1; i1 <= n1; ++i1)
            acc = acc + p1_series_closed(n - n1, n1, i1) *
                            equal_blocks_weight(n, i1, p.l1, p.l2);
        return acc;
    }
    return s3_series(n - n1, n1);
}

/**
 * Brute-force oracle for case (ii): monomials x^alpha (on J1, sum -l1)
 * y^beta (on J3, sum -l2) times a degree-k monomial in the z-variables
 * (J3 x J1), with no 3-chain among the cells
 *   x_i -> (n+1, i),  y_j -> (j, 0),  z_{j,i} -> (j, i).
 */
inline Int oracle_equal_blocks_count(const ModuleParams& p, long long k,
                                     Int budget = default_budget()) {
    const int n = p.n, n1 = p.n1;
    std::vector<Cell> zcells;
    for (int j = n1 + 1; j <= n; ++j)
        for (int i = 1; i <= n1; ++i) zcells.push_back({j, i});
    Int acc = 0;
    Int work = 0;
    std::vector<Cell> xcells, ycells;
    // alpha over J1 summing to -l1.
    std::vector<long long> alpha(static_cast<size_t>(n1), 0);
    std::vector<long long> beta(static_cast<size_t>(n - n1), 0);
    std::function<void(std::vector<long long>&, size_t, long long, const std::function<void()>&)>
        comps = [&](std::vector<long long>& vec, size_t idx, long long rem,
                    const std::function<void()>& body) {
            if (idx + 1 == vec.size()) {
                vec[idx] = rem;
                body();
                vec[idx] = 0;
                return;
            }
            for (long long v = 0; v <= rem; ++v) {
                vec[idx] = v;
                comps(vec, idx + 1, rem - v, body);
            }
            vec[idx] = 0;
        };
    auto run_beta = [&] {
        std::vector<Cell> fixed;
        for (int i = 0; i < n1; ++i)
            if (alpha[static_cast<size_t>(i)] > 0) fixed.push_back({n + 1, i + 1});
        for (int j = 0; j < n - n1; ++j)
            if (beta[static_cast<size_t>(j)] > 0) fixed.push_back({n1 + 1 + j, 0});
        enumerate_grid_monomials(zcells, k, budget, [&](const std::vector<int>& counts) {
            if (++work > budget) throw budget_exceeded("oracle_equal_blocks_count: budget");
            std::vector<Cell> support = fixed;
            for (size_t i = 0; i < counts.size(); ++i)
                if (counts[i] > 0) support.push_back(zcells[i]);
            if (!has_3chain(support)) ++acc;
        });
    };
    comps(alpha, 0, -p.l1, [&] { comps(beta, 0, -p.l2, run_beta); });
    return acc;
}

// --- case (iii): n1 < n2 < n ----------------------------------------------

/**
 * Brute-force oracle for the mixed case n1 < n2 < n (and, with J3 empty,
 * n2 = n): counts pairs (g, h) where h is a degree-r z-monomial and g is an
 * admissible monomial of d-weight k - r with beta supported on [n1+1, n],
 * subject to no 3-chain among the cells
 *   x_i (i in J1) -> (n+1, i),  y_j (j in J3) -> (j, 0),
 *   x_j (j in J3) -> (j, -1),   z_{j,i} -> (j, i).
 * The J2 exponents carry no cells; they are counted by stars-and-bars with
 * one inclusion-exclusion for alpha_{n1+1} beta_{n1+1} = 0.
 * Requires l2 <= 0 (apply reflect_params first otherwise).
 */
inline Int oracle_mixed_count(const ModuleParams& p, long long k, Int budget = default_budget()) {
    if (p.l2 > 0) throw invalid_parameters("oracle_mixed_count: requires l2 <= 0");
    const int n = p.n, n1 = p.n1, n2 = p.n2;
    const long long w2 = n2 - n1;
    const long long corr = std::max(p.l1, 0LL);
    std::vector<Cell> zcells;
    for (int j = n2 + 1; j <= n; ++j)
        for (int i = 1; i <= n1; ++i) zcells.push_back({j, i});
    Int acc = 0;
    Int work = 0;
    std::vector<long long> alpha1(static_cast<size_t>(n1), 0);
    std::vector<long long> alpha3(static_cast<size_t>(n - n2), 0);
    std::vector<long long> beta3(static_cast<size_t>(n - n2), 0);
    std::function<void(std::vector<long long>&, size_t, long long, const std::function<void()>&)>
        comps = [&](std::vector<long long>& vec, size_t idx, long long rem,
                    const std::function<void()>& body) {
            if (vec.empty()) {
                if (rem == 0) body();
                return;
            }
            if (idx + 1 == vec.size()) {
                vec[idx] = rem;
                body();
                vec[idx] = 0;
                return;
            }
            for (long long v = 0; v <= rem; ++v) {
                vec[idx] = v;
                comps(vec, idx + 1, rem - v, body);
            }
            vec[idx] = 0;
        };
    for (long long r = 0; r <= k; ++r) {
        const long long d_target = k - r;
        enumerate_grid_monomials(zcells, r, budget, [&](const std::vector<int>& hcounts) {
            std::vector<Cell> hsupport;
            for (size_t i = 0; i < hcounts.size(); ++i)
                if (hcounts[i] > 0) hsupport.push_back(zcells[i]);
            for (long long A3 = 0; 2 * A3 <= d_target + corr; ++A3) {
                comps(alpha3, 0, A3, [&] {
                    for (long long B3 = std::max(0LL, -p.l2);; ++B3) {
                        long long b2 = p.l2 + B3;
                        if (b2 < 0) continue;
                        if (2 * A3 + b2 > d_target + corr) break;
                        long long a2 = d_target + corr - 2 * A3 - b2;
                        long long A1 = a2 + A3 - p.l1;
                        if (A1 < 0) continue;
                        comps(beta3, 0, B3, [&] {
                            comps(alpha1, 0, A1, [&] {
                                if (++work > budget)
                                    throw budget_exceeded("oracle_mixed_count: budget exceeded");
                                std::vector<Cell> support = hsupport;
                                for (int i = 0; i < n1; ++i)
                                    if (alpha1[static_cast<size_t>(i)] > 0)
                                        support.push_back({n + 1, i + 1});
                                for (int j = 0; j < n - n2; ++j) {
                                    if (beta3[static_cast<size_t>(j)] > 0)
                                        support.push_back({n2 + 1 + j, 0});
                                    if (alpha3[static_cast<size_t>(j)] > 0)
                                        support.push_back({n2 + 1 + j, -1});
                                }
                                if (has_3chain(support)) return;
                                Int ways = compositions(a2, w2) * compositions(b2, w2);
                                if (w2 >= 1)
                                    ways -= compositions(a2 - 1, w2) * compositions(b2 - 1, w2);
                                acc += ways;
                            });
                        });
                    }
                });
            }
        });
    }
    return acc;
}

// --- cases (iv)/(v): n1 = n2, one positive weight -------------------------

namespace detail {
inline Int p3_cached(int s1, int t1, long long r) {
    static std::map<std::tuple<int, int, long long>, Int> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(s1, t1, r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, count_P3_staircase(s1, t1, r)).first;
    return it->second;
}

/// Support-pair weight for the skew generator factor (number of admissible
/// x-parts with given extreme indices).
inline Int skew_L(int i1, int i2, int s1, int t1, long long m1) {
    if (i1 >= s1 && t1 <= i2) return binomial(i1 + i2 - s1 - t1 + m1 - 1, m1 - 2);
    if (i1 >= s1 && i2 == t1 - 1) return binomial(i1 - s1 + m1 - 1, m1 - 1);
    if (i1 == i2 && t1 <= i2) return binomial(i2 - t1 + m1 - 1, m1 - 1);
    return 0;
}
}  // namespace detail

/**
 * Generator-layer value for 1 < n1 = n2 < n with l1 <= 0 < l2
 * (m2 = l2, m1 = -l1 - l2 >= 0): sums over the ladder maxima (s1, t1) of
 * P3-weighted chain counts; for m1 > 0 an extra L-weighted sum over the
 * extreme x-support indices (i1, i2).
 */
inline Int skew_value(const ModuleParams& p, long long k) {
    if (k < 0) return 0;
    const int n = p.n, n1 = p.n1;
    const long long m2 = p.l2, m1 = -p.l1 - p.l2;
    if (!(n1 > 1 && n1 < n && m2 > 0 && m1 >= 0))
        throw invalid_parameters("skew_value: needs 1 < n1 = n2 < n, l1 <= 0 < l2");
    Int acc = 0;
    for (int t1 = 1; t1 <= n1; ++t1)
        for (int s1 = t1 + 1; s1 <= n1; ++s1) {
            Int w3 = detail::p3_cached(s1, t1, m2 - 1);
            if (w3 == 0) continue;
            if (m1 == 0) {
                acc += w3 * p1_recursive(n - n1, n1 - t1 + 1, s1 - t1 + 1, k);
                continue;
            }
            for (int i1 = t1; i1 <= n1; ++i1)
                for (int i2 = t1 - 1; i2 <= std::min(i1, s1 - 1); ++i2) {
                    Int L = detail::skew_L(i1, i2, s1, t1, m1);
                    if (L == 0) continue;
                    int p0 = std::max(i2, t1), q0 = std::max(i1, s1);
                    acc += L * w3 * p1_recursive(n - n1, n1 - p0 + 1, q0 - p0 + 1, k);
                }
        }
    return acc;
}

/// Generating function matching skew_value.
inline RationalGF skew_gf(const ModuleParams& p) {
    const int n = p.n, n1 = p.n1;
    const long long m2 = p.l2, m1 = -p.l1 - p.l2;
    RationalGF acc = RationalGF::zero();
    for (int t1 = 1; t1 <= n1; ++t1)
        for (int s1 = t1 + 1; s1 <= n1; ++s1) {
            Int w3 = detail::p3_cached(s1, t1, m2 - 1);
            if (w3 == 0) continue;
            if (m1 == 0) {
                acc = acc + p1_series_closed(n - n1, n1 - t1 + 1, s1 - t1 + 1) * w3;
                continue;
            }
            for (int i1 = t1; i1 <= n1; ++i1)
                for (int i2 = t1 - 1; i2 <= std::min(i1, s1 - 1); ++i2) {
                    Int L = detail::skew_L(i1, i2, s1, t1, m1);
                    if (L == 0) continue;
                    int p0 = std::max(i2, t1), q0 = std::max(i1, s1);
                    acc = acc + p1_series_closed(n - n1, n1 - p0 + 1, q0 - p0 + 1) * (L * w3);
                }
        }
    return acc;
}

/**
 * Brute-force oracle for case (iv): triples (g, h, f') where g is a degree-m2
 * monomial in the skew generators omega_{j,i} (1 <= i < j <= n1, cell
 * (n+n1+2-j, i)), h a degree-k z-monomial (cells (j, i), j in [n1+1, n]),
 * f' a degree-m1 monomial in x_{J1} (cells (n+1, i)); subject to
 *   - no 3-chain among the cells of h and f',
 *   - no extended 2-chain and no extended 3-chain among all cells.
 */
inline Int oracle_skew_count(const ModuleParams& p, long long k, Int budget = default_budget()) {
    const int n = p.n, n1 = p.n1;
    const long long m2 = p.l2, m1 = -p.l1 - p.l2;
    if (!(n1 > 1 && n1 < n && m2 > 0 && m1 >= 0))
        throw invalid_parameters("oracle_skew_count: needs 1 < n1 = n2 < n, l1 <= 0 < l2");
    std::vector<Cell> wcells;  // omega_{j,i} -> (n + n1 + 2 - j, i)
    for (int j = 2; j <= n1; ++j)
        for (int i = 1; i < j; ++i) wcells.push_back({n + n1 + 2 - j, i});
    std::vector<Cell> zcells;
    for (int j = n1 + 1; j <= n; ++j)
        for (int i = 1; i <= n1; ++i) zcells.push_back({j, i});
    std::vector<Cell> xcells;
    for (int i = 1; i <= n1; ++i) xcells.push_back({n + 1, i});
    Int acc = 0;
    Int work = 0;
    enumerate_grid_monomials(wcells, m2, budget, [&](const std::vector<int>& gcounts) {
        std::vector<Cell> gsupport;
        for (size_t i = 0; i < gcounts.size(); ++i)
            if (gcounts[i] > 0) gsupport.push_back(wcells[i]);
        enumerate_grid_monomials(xcells, m1, budget, [&](const std::vector<int>& fcounts) {
            std::vector<Cell> hfsupport;
            for (size_t i = 0; i < fcounts.size(); ++i)
                if (fcounts[i] > 0) hfsupport.push_back(xcells[i]);
            size_t fixed = hfsupport.size();
            enumerate_grid_monomials(zcells, k, budget, [&](const std::vector<int>& hcounts) {
                if (++work > budget) throw budget_exceeded("oracle_skew_count: budget exceeded");
                hfsupport.resize(fixed);
                for (size_t i = 0; i < hcounts.size(); ++i)
                    if (hcounts[i] > 0) hfsupport.push_back(zcells[i]);
                if (has_3chain(hfsupport)) return;
                std::vector<Cell> all = hfsupport;
                all.insert(all.end(), gsupport.begin(), gsupport.end());
                if (has_omega_2chain(all, n)) return;
                if (has_omega_3chain(all, n, n1)) return;
                ++acc;
            });
        });
    });
    return acc;
}

// ---------------------------------------------------------------------------
// Leading-coefficient ratio (final ratio table) and equality cases
// ---------------------------------------------------------------------------

/**
 * Ratio lc(generator polynomial) / lc(variety polynomial) per the final
 * ratio table.  Returns std::nullopt for parameter corners not covered by
 * the table (none are known among accepted parameters; kept defensive).
 */
inline std::optional<Rat> lc_ratio_table(const ModuleParams& p) {
    const long long l1 = p.l1, l2 = p.l2;
    if ((p.n1 < p.n2 && p.n2 < p.n) || (l1 == 0 && l2 == 0)) return Rat(1);
    if (1 < p.n1 && p.n1 == p.n2 && p.n1 < p.n - 1) return Rat(1 - l1 - l2);
    if (p.n1 < p.n2 && p.n2 == p.n) return Rat(binomial(p.n + l2 - 2, l2));
    // In the two single-column corners below, when the other weight is
    // positive the skew layer only admits staircase cells with top index
    // at most n - 1; the unrestricted Vandermonde total therefore
    // overcounts by one boundary term, which the second binomial removes
    // (it vanishes under the zero convention when that weight is <= 0).
    if (p.n1 == 1 && p.n2 == 1 && p.n1 < p.n && l2 <= 0 && l1 + l2 < 0)
        return Rat(binomial(p.n - l2 - 2, -l2) - binomial(p.n + l1 - 3, l1 - 1));
    if (1 < p.n1 && p.n1 == p.n2 && p.n1 == p.n - 1 && l1 <= 0 && l1 + l2 < 0)
        return Rat(binomial(p.n - l1 - 2, -l1) - binomial(p.n + l2 - 3, l2 - 1));
    if (p.n1 == 1 && p.n2 == 1 && p.n1 < p.n - 1 && l2 == -l1 && l2 < 0)
        return Rat(binomial(p.n + l1 - 3, l1));
    if (1 < p.n1 && p.n1 == p.n2 && p.n1 == p.n - 1 && l1 == -l2 && l1 < 0)
        return Rat(binomial(p.n + l2 - 3, l2));
    return std::nullopt;
}

/// One row of the equality-case table: a parameter predicate plus the
/// canonical one-dimensional generator it corresponds to.
struct EqualityCase {
    int id;
    std::string generator;
    std::function<bool(const ModuleParams&)> applies;
};

inline const std::vector<EqualityCase>& equality_cases() {
    static const std::vector<EqualityCase> table = {
        {1, "constants", [](const ModuleParams& p) { return p.l1 == 0 && p.l2 == 0; }},
        {2, "x1^(-l1)",
         [](const ModuleParams& p) { return p.n1 == 1 && p.l1 <= 0 && p.l2 == 0; }},
        {3, "yn^(-l2)",
         [](const ModuleParams& p) { return p.n2 == p.n - 1 && p.l1 == 0 && p.l2 <= 0; }},
        {4, "x1^(-l1) yn^(-l2)",
         [](const ModuleParams& p) {
             return p.n1 == 1 && p.n2 == p.n - 1 && p.l1 <= 0 && p.l2 <= 0;
         }},
        {5, "yn^l2",
         [](const ModuleParams& p) { return p.n2 == p.n && p.l1 == 0 && p.l2 >= 0; }},
        {6, "x_{n2}^l1",
         [](const ModuleParams& p) { return p.n1 + 1 == p.n2 && p.l1 >= 0 && p.l2 == 0; }},
        {7, "y_{n2}^l2",
         [](const ModuleParams& p) { return p.n1 + 1 == p.n2 && p.l1 == 0 && p.l2 >= 0; }},
        {8, "x1^(-l1) y_{n2}^l2",
         [](const ModuleParams& p) {
             return p.n1 + 1 == p.n2 && p.n2 == 2 && p.l1 <= 0 && p.l2 >= 0;
         }},
        {9, "x_{n2}^l1 yn^(-l2)",
         [](const ModuleParams& p) {
             return p.n1 + 1 == p.n2 && p.n2 == p.n - 1 && p.l1 >= 0 && p.l2 <= 0;
         }},
        {10, "(x1 y2 - x2 y1)^l2",
         [](const ModuleParams& p) {
             return p.n1 == 2 && p.n2 == 2 && p.n > 2 && p.l2 == -p.l1 && p.l2 > 0;
         }},
        {11, "(xn y_{n-1} - x_{n-1} yn)^l1",
         [](const ModuleParams& p) {
             return p.n1 == p.n2 && p.n1 == p.n - 2 && p.l1 == -p.l2 && p.l1 > 0;
         }},
        {12, "T(x2^l1 y1^l2)",
         [](const ModuleParams& p) {
             return p.n1 == 1 && p.n2 == 2 && p.n == 2 && p.l1 > 0 && p.l2 > 0;
         }},
    };
    return table;
}

/// Ids of all equality cases the parameters fall under (empty = strict
/// inequality for all large k).
inline std::vector<int> matching_equality_cases(const ModuleParams& p) {
    std::vector<int> ids;
    for (const auto& c : equality_cases())
        if (c.applies(p)) ids.push_back(c.id);
    return ids;
}

// ---------------------------------------------------------------------------
// Assembled reports
// ---------------------------------------------------------------------------

struct VarietyReport {
    RationalGF series;            // canonical form
    RationalGF series_raw;        // as constructed
    Poly polynomial;
    long long krull_dim = 0;
    Int degree = 0;
    Int genus = 1;
    bool uses_two_row_form = false;
};

inline VarietyReport analyze_variety(const ModuleParams& p) {
    VarietyReport rep;
    auto vs = variety_series(p);
    rep.series_raw = vs.gf;
    rep.series = vs.gf.canonicalized();
    rep.uses_two_row_form = vs.uses_two_row_form;
    rep.polynomial = variety_polynomial(p);
    rep.krull_dim = krull_dimension(p);
    rep.degree = variety_degree(p);
    rep.genus = variety_genus(p);
    return rep;
}

struct GeneratorReport {
    GeneratorCase gcase = GeneratorCase::Mixed;
    std::vector<Int> values;       // k = 0 .. k_max
    bool values_only = false;      // true when no closed polynomial exists
    Poly polynomial;               // meaningful unless values_only
    bool has_gf = false;
    RationalGF gf;                 // set for the GF-backed cases
    Rat lc = 0;                    // leading coefficient of the generator polynomial
    Rat lc_ratio = 0;              // lc / lc(variety polynomial)
    bool lc_from_table = false;    // true when lc is inferred, not computed
    std::vector<int> equality_case_ids;  // cases attainable by a 1-dim generator
    bool equality_with_default = false;  // default generator space achieves equality
    long long stabilization_index = 0;
};

/**
 * Generator-filtration report.  k_max bounds the value table; the mixed case
 * (iii) computes values by oracle under `budget` and reports values-only.
 */
inline GeneratorReport analyze_generator(const ModuleParams& p, long long k_max = 8,
                                         Int budget = default_budget()) {
    auto val = validate_params(p);
    if (!val.accepted) throw invalid_parameters("analyze_generator: " + val.reason);
    GeneratorReport rep;
    rep.gcase = generator_case(p);
    rep.equality_case_ids = matching_equality_cases(p);
    Poly vpoly = variety_polynomial(p);
    Rat vlc = vpoly.leading_coefficient();

    ModuleParams q = p;  // effective parameters (case (v) reflects)
    GeneratorCase effective = rep.gcase;
    long long stab_override = -1;  // set by cases with a delayed polynomial onset
    if (rep.gcase == GeneratorCase::SkewReflected) {
        q = reflect_params(p);
        effective = GeneratorCase::SkewPositive;
    } else if (rep.gcase == GeneratorCase::Mixed && p.l2 > 0) {
        q = reflect_params(p);
    }

    switch (effective) {
        case GeneratorCase::TopBlockFull: {
            for (long long k = 0; k <= k_max; ++k) rep.values.push_back(top_block_value(q, k));
            // For l1 < 0 the function only becomes polynomial once k clears
            // -l1; fit past that point and verify on three further values.
            long long s0 = std::max<long long>(0, -q.l1);
            long long D = q.n - 2;
            std::vector<std::pair<Rat, Rat>> pts;
            for (long long k = s0; k <= s0 + D; ++k)
                pts.push_back({Rat(k), Rat(top_block_value(q, k))});
            rep.polynomial = Poly::interpolate(pts);
            for (long long k = s0 + D + 1; k <= s0 + D + 3; ++k)
                if (rep.polynomial(k) != Rat(top_block_value(q, k)))
                    throw invalid_parameters("analyze_generator: degree overflow in case (i)");
            // Tighten the stabilization point back down as far as the values
            // actually agree with the fitted polynomial.
            long long stab = s0;
            while (stab > 0 && rep.polynomial(stab - 1) == Rat(top_block_value(q, stab - 1)))
                --stab;
            stab_override = stab;
            break;
        }
        case GeneratorCase::EqualBlocks: {
            for (long long k = 0; k <= k_max; ++k) rep.values.push_back(equal_blocks_value(q, k));
            rep.gf = equal_blocks_gf(q).canonicalized();
            rep.has_gf = true;
            rep.polynomial = rep.gf.to_polynomial().poly;
            break;
        }
        case GeneratorCase::SkewPositive: {
            for (long long k = 0; k <= k_max; ++k) rep.values.push_back(skew_value(q, k));
            rep.gf = skew_gf(q).canonicalized();
            rep.has_gf = true;
            rep.polynomial = rep.gf.to_polynomial().poly;
            break;
        }
        case GeneratorCase::Mixed: {
            rep.values_only = true;
            for (long long k = 0; k <= k_max; ++k)
                rep.values.push_back(oracle_mixed_count(q, k, budget));
            break;
        }
        default: break;
    }

    if (rep.values_only) {
        // No closed polynomial; the leading term matches the variety's.
        rep.lc = vlc;
        rep.lc_ratio = 1;
        rep.lc_from_table = true;
        rep.stabilization_index = variety_series(p).gf.canonicalized().numerator_degree();
    } else {
        rep.lc = rep.polynomial.leading_coefficient();
        rep.lc_ratio = vlc == 0 ? Rat(0) : rep.lc / vlc;
        if (stab_override >= 0)
            rep.stabilization_index = stab_override;
        else
            rep.stabilization_index =
                rep.has_gf ? rep.gf.numerator_degree() : rep.polynomial.degree();
        if (rep.stabilization_index < 0) rep.stabilization_index = 0;
    }
    // Equality with the default generator space needs a tabulated case and a
    // one-dimensional space (values[0] = dim of the generator space); n = 2
    // is the constant-polynomial degeneration where any matching case works.
    rep.equality_with_default =
        !rep.equality_case_ids.empty() &&
        (p.n == 2 || (!rep.values.empty() && rep.values[0] == 1));
    return rep;
}

/// Generator-layer value at one k (closed form where available, else oracle).
inline Int generator_value(const ModuleParams& p, long long k, Int budget = default_budget()) {
    ModuleParams q = p;
    GeneratorCase c = generator_case(p);
    if (c == GeneratorCase::SkewReflected) {
        q = reflect_params(p);
        c = GeneratorCase::SkewPositive;
    } else if (c == GeneratorCase::Mixed && p.l2 > 0) {
        q = reflect_params(p);
    }
    switch (c) {
        case GeneratorCase::TopBlockFull: return top_block_value(q, k);
        case GeneratorCase::EqualBlocks: return equal_blocks_value(q, k);
        case GeneratorCase::SkewPositive: return skew_value(q, k);
        case GeneratorCase::Mixed: return oracle_mixed_count(q, k, budget);
        default: return 0;
    }
}

/**
 * Whether the default generator space realizes p_M = p_{M,V0} for large k.
 * Equality needs a matching tabulated case AND a one-dimensional generator
 * space (the tabulated generators are exactly those); for n = 2 both Hilbert
 * polynomials are the constant 1 once stabilized, so any matching case gives
 * equality there regardless of the generator dimension.
 */
inline bool equality_with_default_generator(const ModuleParams& p,
                                            Int budget = default_budget()) {
    if (matching_equality_cases(p).empty()) return false;
    return p.n == 2 || generator_value(p, 0, budget) == 1;
}

/// Result of checking the variety-vs-generator inequality on a k window.
struct InequalityCheck {
    bool holds = true;          // variety value <= generator value on the window
    bool equality_everywhere = true;
    long long first_violation = -1;
};

/**
 * Check variety_value(k) <= generator value(k) for k in [k0, k0+span].
 * Equality across the whole window is reported separately.
 */
inline InequalityCheck theorem_inequality_check(const ModuleParams& p, long long k0,
                                                long long span,
                                                Int budget = default_budget()) {
    InequalityCheck res;
    for (long long k = k0; k <= k0 + span; ++k) {
        Int lhs = variety_value(p, k);
        Int rhs = generator_value(p, k, budget);
        if (lhs > rhs) {
            res.holds = false;
            res.first_violation = k;
            return res;
        }
        if (lhs != rhs) res.equality_everywhere = false;
    }
    return res;
}

}  // namespace hilb
