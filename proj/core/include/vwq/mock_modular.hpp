#pragma once

#include <array>
#include <complex>

#include "vwq/errors.hpp"

namespace vwq {

// A point tau = re + i*im in the upper half plane.
struct UpperHalfPoint {
    double re;
    double im;
};

// Residuals and metadata from a numerical transformation check.
struct TransformReport {
    std::array<std::complex<double>, 2> lhs{};
    std::array<std::complex<double>, 2> rhs{};
    double residual = 0.0;        // max componentwise |lhs - rhs|
    double tol = 0.0;
    bool pass = false;
    int sign = 0;                 // measured sign of the duality constant (0: n/a)
    int cutoff_series = 0;        // largest holomorphic-sum index used
    int cutoff_completion = 0;    // largest completion-sum index used
};

// beta(t) = (1/(16 pi)) int_1^inf u^{-3/2} e^{-ut} du, via the closed form
// (1/(8 pi)) (e^{-t} - sqrt(pi t) erfc(sqrt t)); beta(0) = 1/(8 pi).
// t < 0 raises DomainError.
double beta(double t);

// Zagier's completed pair.  Holomorphic parts:
//   f0: sum_{n>=0} 3 H(4n) q^n           (H(0) = -1/12)
//   f1: sum_{n>=1} 3 H(4n-1) q^{n-1/4}
// each plus 6 tau2^{-1/2} sum beta(4 pi mu^2 tau2) q^{-mu^2} over integer
// (f0) or half-integer (f1) frequencies mu.  Both sums stop adaptively once
// the next term drops below 1e-18 in magnitude; q^e is evaluated as
// exp(2 pi i tau e) throughout.  Im(tau) below 0.1 raises AccuracyError.
std::complex<double> f0(const UpperHalfPoint& tau);
std::complex<double> f1(const UpperHalfPoint& tau);

// (f0, f1)(-1/tau) against (tau/i)^{3/2} (-1/sqrt 2) [[1,1],[1,-1]]
// (f0, f1)(tau), principal branch.
TransformReport check_S_matrix(const UpperHalfPoint& tau, double tol);

// Completed S-duality for the plane: f0(-1/tau) against
// sign * 2^{-3/2} (tau/i)^{3/2} * 2 (f0 + f1)(tau), with the sign measured
// per evaluation and recorded in the report.
TransformReport check_sduality_p2(const UpperHalfPoint& tau, double tol);

namespace detail {

// Fixed-cutoff evaluation (exposed for convergence tests): sums the
// holomorphic part to n <= n_series and the completion to |mu| <= n_completion.
std::complex<double> eval_f(int which, const UpperHalfPoint& tau, int n_series,
                            int n_completion);

// Cutoffs the adaptive rule settled on at this point.
struct Cutoffs {
    int series;
    int completion;
};
Cutoffs adaptive_cutoffs(const UpperHalfPoint& tau);

} // namespace detail

} // namespace vwq
