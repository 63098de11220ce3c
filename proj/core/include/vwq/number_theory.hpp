#pragma once

#include <optional>
#include <vector>

#include "vwq/series.hpp"

namespace vwq {

// Hurwitz class number H(D): automorphism-weighted count of reduced positive
// definite integer binary quadratic forms AX^2 + BXY + CY^2 with
// B^2 - 4AC = -D.  H(D) = 0 for D = 1, 2 mod 4, and H(0) = -1/12 (the
// constant term the modular completion forces).
Rational hurwitz(long long D);

// sigma_0(n): number of positive divisors.
long long divisor_count(long long n);

// eta(q)^k = q^{k/24} prod_{j>=1} (1 - q^j)^k truncated at exponent N.
// The window must contain the leading term: N > k/24.
FracExpSeries eta_power(long long k, const Rational& N);

// An element of Q(zeta_m) in the power basis 1, x, ..., x^{phi(m)-1} modulo
// the m-th cyclotomic polynomial.
struct CycNumber {
    long long order;               // m
    std::vector<Rational> coeffs;  // length phi(m)
};

CycNumber cyc_zero(long long m);
CycNumber cyc_one(long long m);

// zeta_m^a reduced to the power basis (a taken mod m; m = 0 is an error).
CycNumber cyc_root(long long m, long long a);

CycNumber cyc_add(const CycNumber& x, const CycNumber& y);
CycNumber cyc_mul(const CycNumber& x, const CycNumber& y);
CycNumber cyc_scale(const CycNumber& x, const Rational& c);
bool cyc_equal(const CycNumber& x, const CycNumber& y);

// The rational value of x if all non-constant basis coefficients vanish;
// nullopt (a value, not an error) otherwise.
std::optional<Rational> cyc_to_rational(const CycNumber& x);

// Coefficients of the m-th cyclotomic polynomial (ascending), computed by
// Moebius factorization of x^m - 1.
std::vector<Int> cyclotomic_polynomial(long long m);

// Theta block: sum over k in Z^n with Q(k) = sum_{i<=j} k_i k_j <= N of
// zeta_{n+2}^{k_1 + 2 k_2 + ... + n k_n} q^{Q(k)}, truncated at N + 1.
// Every coefficient is pushed through cyc_to_rational; a failure raises
// IrrationalityError carrying (n, exponent).
FracExpSeries theta_block(int n, int N);

} // namespace vwq
