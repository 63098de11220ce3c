#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "vwq/errors.hpp"

namespace vwq {

// Arbitrary-precision integers and rationals.  cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the coefficient
// contract every series in this library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Rational make_rational(const Int& n, const Int& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    return Rational(n, d);
}

// Floor integer square root, plus exactness flag.
inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

// Exact square root of a rational, if it exists (value must be >= 0 and both
// numerator and denominator perfect squares).
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Int n = num(x), d = den(x);
    Int sn = isqrt(n), sd = isqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rational_pow(const Rational& base, long long e) {
    if (e >= 0)
        return Rational(int_pow(num(base), static_cast<unsigned long>(e)),
                        int_pow(den(base), static_cast<unsigned long>(e)));
    if (base == 0) throw DomainError("negative power of zero");
    Int n = int_pow(den(base), static_cast<unsigned long>(-e));
    Int d = int_pow(num(base), static_cast<unsigned long>(-e));
    // cpp_rational's component constructor rejects negative denominators
    // instead of normalizing the sign, so move it to the numerator here.
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient C(n, k) for nonnegative k (0 when k > n >= 0).
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline std::string to_string(const Int& n) { return n.str(); }

// "p/q" in lowest terms, or just "p" for integers.
inline std::string to_string(const Rational& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

} // namespace vwq
