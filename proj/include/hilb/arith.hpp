/**
 * @file arith.hpp
 * @brief Exact integer/rational scalars and binomial coefficients.
 *
 * All arithmetic in this library is exact.  Integers are arbitrary-precision
 * (boost::multiprecision::cpp_int) and rationals are kept in lowest terms
 * with a positive denominator (boost::multiprecision::cpp_rational does both
 * canonicalizations internally).
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hilb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a brute-force enumeration would exceed its work budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a routine is called outside its documented parameter range.
struct invalid_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Combinatorial binomial coefficient C(a, b).
 *
 * Convention used throughout the counting layer: the value is 0 whenever
 * b < 0, a < 0, or b > a >= 0.  With this convention every sum in the closed
 * counting formulas may be taken over all integers without explicit range
 * guards.
 */
inline Int binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Int num = 1;
    for (long long i = 0; i < b; ++i) {
        num *= a - i;
        num /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return num;
}

/**
 * Generalized (falling-factorial) binomial coefficient:
 *   C(a, b) = a(a-1)...(a-b+1) / b!   for b >= 0, any integer a,
 *   C(a, b) = 0                       for b < 0.
 *
 * Agrees with binomial() for a >= 0.  Needed only when assembling the 2x2
 * determinant numerators of rational generating functions, where a structural
 * parameter can drive an upper index negative (e.g. a one-row grid); there the
 * determinant identities require C(-1, r) = (-1)^r rather than 0.
 */
inline Int binomial_gen(long long a, long long b) {
    if (b < 0) return 0;
    Int num = 1;
    for (long long i = 0; i < b; ++i) {
        num *= a - i;
        // Divide at the end to stay exact for negative a as well.
    }
    Int fact = 1;
    for (long long i = 2; i <= b; ++i) fact *= i;
    return num / fact;
}

/// n! as an exact integer (n >= 0).
inline Int factorial(long long n) {
    if (n < 0) throw invalid_parameters("factorial: negative argument");
    Int f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Number of compositions of s into b nonnegative parts (stars and bars).
/// c(s, 0) = 1 iff s = 0; c(s, b) = C(s + b - 1, b - 1) for b >= 1; 0 for s < 0.
inline Int compositions(long long s, long long b) {
    if (s < 0) return 0;
    if (b == 0) return s == 0 ? Int(1) : Int(0);
    return binomial(s + b - 1, b - 1);
}

/// Decimal-string rendering used by all serialization paths (never floats).
inline std::string to_decimal(const Int& v) { return v.str(); }

inline std::string to_decimal(const Rat& v) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// True if the rational is an integer.
inline bool is_integer(const Rat& v) {
    return boost::multiprecision::denominator(v) == 1;
}

}  // namespace hilb
