/**
 * @file series.hpp
 * @brief Truncated integer power series and rational generating functions
 *        of the form Q(t) / (1 - t)^d.
 */
#pragma once

#include "hilb/arith.hpp"
#include "hilb/poly.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace hilb {

/**
 * Integer power series truncated at t^T (coefficients of t^0 .. t^T kept).
 * Multiplication truncates at the smaller of the two bounds.
 */
class Series {
  public:
    Series() = default;
    explicit Series(long long trunc) : c_(static_cast<size_t>(trunc) + 1, Int(0)) {
        if (trunc < 0) throw invalid_parameters("Series: negative truncation");
    }
    Series(std::vector<Int> coeffs, long long trunc) : Series(trunc) {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
    }

    /// Build from a coefficient rule r -> coeff of t^r.
    static Series from_rule(long long trunc, const std::function<Int(long long)>& rule) {
        Series s(trunc);
        for (long long r = 0; r <= trunc; ++r) s.c_[static_cast<size_t>(r)] = rule(r);
        return s;
    }

    long long trunc() const { return static_cast<long long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(long long k) const {
        if (k < 0 || k > trunc()) return 0;
        return c_[static_cast<size_t>(k)];
    }

    Series operator+(const Series& o) const {
        Series r(std::min(trunc(), o.trunc()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Series operator-(const Series& o) const {
        Series r(std::min(trunc(), o.trunc()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r(std::min(trunc(), o.trunc()));
        for (size_t i = 0; i < r.c_.size(); ++i)
            for (size_t j = 0; i + j < r.c_.size() && j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }

    /// Exact division by t; the constant term must vanish.
    Series divided_by_t() const {
        if (!c_.empty() && c_[0] != 0)
            throw invalid_parameters("Series::divided_by_t: nonzero constant term");
        Series r(std::max<long long>(trunc() - 1, 0));
        for (size_t i = 0; i < r.c_.size() && i + 1 < c_.size(); ++i) r.c_[i] = c_[i + 1];
        return r;
    }

    bool operator==(const Series& o) const {
        long long t = std::min(trunc(), o.trunc());
        for (long long k = 0; k <= t; ++k)
            if (coeff(k) != o.coeff(k)) return false;
        return true;
    }

  private:
    std::vector<Int> c_;
};

/// 2x2 determinant a*d - b*c of truncated series.
inline Series det2x2_series(const Series& a, const Series& b, const Series& c, const Series& d) {
    return a * d - b * c;
}

/**
 * Rational generating function Q(t) / (1 - t)^d with integer numerator Q
 * (stored ascending, trailing zeros stripped) and pole order d >= 0.
 */
class RationalGF {
  public:
    RationalGF() = default;
    RationalGF(std::vector<Int> numerator, long long pole_order)
        : num_(std::move(numerator)), d_(pole_order) {
        if (pole_order < 0) throw invalid_parameters("RationalGF: negative pole order");
        trim();
    }

    static RationalGF zero() { return RationalGF({}, 0); }

    const std::vector<Int>& numerator() const { return num_; }
    long long pole_order() const { return d_; }
    bool is_zero() const { return num_.empty(); }
    long long numerator_degree() const { return static_cast<long long>(num_.size()) - 1; }

    /**
     * Canonical form: repeatedly divide numerator and denominator by (1 - t)
     * while the numerator vanishes at t = 1 and the pole order is positive.
     * A zero numerator forces pole order 0.
     */
    RationalGF canonicalized() const {
        RationalGF g = *this;
        if (g.num_.empty()) {
            g.d_ = 0;
            return g;
        }
        while (g.d_ > 0) {
            Int at_one = 0;
            for (const Int& v : g.num_) at_one += v;
            if (at_one != 0) break;
            // Q = (1 - t) * S  =>  S_i = sum_{j<=i} Q_j, with zero tail.
            std::vector<Int> s(g.num_.size() - 1);
            Int run = 0;
            for (size_t i = 0; i + 1 < g.num_.size(); ++i) {
                run += g.num_[i];
                s[i] = run;
            }
            g.num_ = std::move(s);
            --g.d_;
            g.trim();
            if (g.num_.empty()) {
                g.d_ = 0;
                break;
            }
        }
        return g;
    }

    /// Coefficient of t^k in the expansion Q(t) * sum_j C(j+d-1, d-1) t^j.
    Int coefficient(long long k) const {
        if (k < 0) return 0;
        if (d_ == 0) return k <= numerator_degree() ? num_[static_cast<size_t>(k)] : Int(0);
        Int acc = 0;
        for (size_t j = 0; j < num_.size(); ++j) {
            long long jj = static_cast<long long>(j);
            if (jj > k) break;
            acc += num_[j] * binomial(k - jj + d_ - 1, d_ - 1);
        }
        return acc;
    }

    /// First trunc+1 coefficients as a truncated series.
    Series expand(long long trunc) const {
        return Series::from_rule(trunc, [this](long long k) { return coefficient(k); });
    }

    /**
     * The Hilbert polynomial p with p(k) = coefficient(k) for all
     * k > numerator_degree() - 1 (and in fact for all k >= deg Q).
     * For pole order 0 the result is the zero polynomial and
     * polynomial_part_only is set: the expansion is a polynomial in t, so the
     * eventual coefficient polynomial in k is zero.
     */
    struct PolynomialResult {
        Poly poly;
        bool polynomial_part_only = false;
    };
    PolynomialResult to_polynomial() const {
        PolynomialResult res;
        if (d_ == 0) {
            res.polynomial_part_only = true;
            return res;
        }
        // p(k) = sum_j Q_j * C(k - j + d - 1, d - 1); the binomial is the
        // polynomial prod_{i=1}^{d-1} (k - j + i) / (d-1)!.
        Rat inv_fact = Rat(1) / Rat(factorial(d_ - 1));
        Poly total;
        for (size_t j = 0; j < num_.size(); ++j) {
            if (num_[j] == 0) continue;
            Poly term = Poly::constant(Rat(num_[j]) * inv_fact);
            for (long long i = 1; i <= d_ - 1; ++i)
                term = term * Poly({Rat(i) - Rat(static_cast<long long>(j)), Rat(1)});
            total = total + term;
        }
        res.poly = total;
        return res;
    }

    /// Q(1); meaningful (equals the variety degree) once canonicalized.
    Int value_at_one() const {
        Int acc = 0;
        for (const Int& v : num_) acc += v;
        return acc;
    }

    /// Constant term of the expansion.
    Int constant_term() const { return coefficient(0); }

    /// Leading coefficient of the Hilbert polynomial (0 if pole order 0).
    Rat leading_coefficient() const {
        if (d_ == 0) return 0;
        return to_polynomial().poly.leading_coefficient();
    }

    RationalGF operator+(const RationalGF& o) const {
        // Common denominator (1 - t)^max(d, d').
        long long d = std::max(d_, o.d_);
        std::vector<Int> a = scaled_numerator(*this, d - d_);
        std::vector<Int> b = scaled_numerator(o, d - o.d_);
        std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return RationalGF(std::move(r), d);
    }

    /// Numerator scaled by an integer constant.
    RationalGF operator*(const Int& s) const {
        std::vector<Int> r = num_;
        for (auto& v : r) v *= s;
        return RationalGF(std::move(r), d_);
    }

    bool operator==(const RationalGF& o) const { return num_ == o.num_ && d_ == o.d_; }

  private:
    static std::vector<Int> scaled_numerator(const RationalGF& g, long long extra) {
        // Multiply numerator by (1 - t)^extra.
        std::vector<Int> r = g.num_;
        for (long long e = 0; e < extra; ++e) {
            std::vector<Int> s(r.size() + 1, Int(0));
            for (size_t i = 0; i < r.size(); ++i) {
                s[i] += r[i];
                s[i + 1] -= r[i];
            }
            r = std::move(s);
        }
        return r;
    }
    void trim() {
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
    }
    std::vector<Int> num_;
    long long d_ = 0;
};

/**
 * Build a RationalGF from a truncated-series numerator: coefficients beyond
 * the truncation are taken to be zero.  The caller is responsible for the
 * truncation being generous enough to contain the whole numerator; the module
 * tests cross-check expansions against independent counts.
 */
inline RationalGF gf_from_series_numerator(const Series& numerator, long long pole_order) {
    return RationalGF(numerator.coeffs(), pole_order);
}

}  // namespace hilb
