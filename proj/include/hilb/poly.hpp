/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over the exact rationals.
 *
 * Coefficients are stored ascending; trailing zeros are stripped so the zero
 * polynomial is the empty coefficient list.  All operations are pure.
 */
#pragma once

#include "hilb/arith.hpp"

#include <utility>
#include <vector>

namespace hilb {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// Constant polynomial.
    static Poly constant(const Rat& v) { return Poly({v}); }
    /// The monomial X.
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    Rat leading_coefficient() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat constant_term() const { return c_.empty() ? Rat(0) : c_.front(); }

    Rat operator()(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rat operator()(const Int& x) const { return (*this)(Rat(x)); }
    Rat operator()(long long x) const { return (*this)(Rat(x)); }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const Rat& s) const {
        std::vector<Rat> r = c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /**
     * Unique interpolating polynomial through the given (x, y) points
     * (Newton divided differences, exact).  The x values must be distinct.
     */
    static Poly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
        const size_t n = pts.size();
        if (n == 0) return Poly();
        // Divided-difference table, updated in place.
        std::vector<Rat> dd;
        dd.reserve(n);
        for (auto& p : pts) dd.push_back(p.second);
        for (size_t level = 1; level < n; ++level)
            for (size_t i = n - 1; i >= level; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - level].first);
        // Horner expansion of the Newton form.
        Poly result = Poly::constant(dd[n - 1]);
        for (size_t i = n - 1; i-- > 0;) {
            Poly shift({-pts[i].first, Rat(1)});  // (X - x_i)
            result = result * shift + Poly::constant(dd[i]);
        }
        return result;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace hilb
