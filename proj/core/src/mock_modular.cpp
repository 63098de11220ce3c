#include "vwq/mock_modular.hpp"

#include <cmath>
#include <numbers>

#include "vwq/number_theory.hpp"

namespace vwq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTermTol = 1e-18;
constexpr double kTau2Floor = 0.1;

void validate(const UpperHalfPoint& tau) {
    if (!(tau.im > 0)) throw DomainError("tau must lie in the upper half plane");
    if (tau.im < kTau2Floor)
        throw AccuracyError("Im(tau) = " + std::to_string(tau.im) +
                            " is below the accuracy floor " + std::to_string(kTau2Floor));
}

// q^e = exp(2 pi i tau e), computed from tau directly so large |Re(tau)|
// never wraps through a principal-branch power.
std::complex<double> q_pow(const UpperHalfPoint& tau, double e) {
    double mag = std::exp(-2.0 * kPi * tau.im * e);
    double arg = 2.0 * kPi * tau.re * e;
    return {mag * std::cos(arg), mag * std::sin(arg)};
}

double three_h(long long delta) {
    return (Rational(3) * hurwitz(delta)).convert_to<double>();
}

// Magnitude of the holomorphic term with index n.
double series_term_mag(int which, const UpperHalfPoint& tau, int n) {
    if (which == 0) return std::abs(three_h(4LL * n)) * std::exp(-2.0 * kPi * tau.im * n);
    return three_h(4LL * n - 1) * std::exp(-2.0 * kPi * tau.im * (n - 0.25));
}

// Magnitude of the completion term with frequency mu (integer n -> mu = n or
// n + 1/2); beta decays like e^{-4 pi mu^2 tau2}, beating the growing
// |q^{-mu^2}| = e^{2 pi mu^2 tau2}.
double completion_term_mag(int which, const UpperHalfPoint& tau, int n) {
    double mu = (which == 0) ? n : n + 0.5;
    double weight = (which == 0 && n == 0) ? 1.0 : 2.0;
    return weight * 6.0 / std::sqrt(tau.im) * beta(4.0 * kPi * mu * mu * tau.im) *
           std::exp(2.0 * kPi * tau.im * mu * mu);
}

detail::Cutoffs cutoffs_for(int which, const UpperHalfPoint& tau) {
    detail::Cutoffs c{0, 0};
    int below = 0;
    for (int n = (which == 0) ? 0 : 1; n < 100000; ++n) {
        if (series_term_mag(which, tau, n) < kTermTol) {
            if (++below == 2) break;
        } else {
            below = 0;
        }
        c.series = n;
    }
    below = 0;
    for (int n = 0; n < 100000; ++n) {
        if (completion_term_mag(which, tau, n) < kTermTol) {
            if (++below == 2) break;
        } else {
            below = 0;
        }
        c.completion = n;
    }
    return c;
}

} // namespace

double beta(double t) {
    if (t < 0) throw DomainError("beta needs a nonnegative argument");
    if (t == 0) return 1.0 / (8.0 * kPi);
    double rt = std::sqrt(t);
    return (std::exp(-t) - std::sqrt(kPi * t) * std::erfc(rt)) / (8.0 * kPi);
}

namespace detail {

std::complex<double> eval_f(int which, const UpperHalfPoint& tau, int n_series,
                            int n_completion) {
    std::complex<double> s = 0.0;
    if (which == 0) {
        for (int n = 0; n <= n_series; ++n) s += three_h(4LL * n) * q_pow(tau, n);
    } else {
        for (int n = 1; n <= n_series; ++n)
            s += three_h(4LL * n - 1) * q_pow(tau, n - 0.25);
    }
    double w = 6.0 / std::sqrt(tau.im);
    if (which == 0) {
        s += w * beta(0.0);
        for (int n = 1; n <= n_completion; ++n)
            s += 2.0 * w * beta(4.0 * kPi * n * n * tau.im) *
                 q_pow(tau, -static_cast<double>(n) * n);
    } else {
        for (int n = 0; n <= n_completion; ++n) {
            double mu = n + 0.5;
            s += 2.0 * w * beta(4.0 * kPi * mu * mu * tau.im) * q_pow(tau, -mu * mu);
        }
    }
    return s;
}

Cutoffs adaptive_cutoffs(const UpperHalfPoint& tau) {
    Cutoffs a = cutoffs_for(0, tau), b = cutoffs_for(1, tau);
    return Cutoffs{std::max(a.series, b.series), std::max(a.completion, b.completion)};
}

} // namespace detail

std::complex<double> f0(const UpperHalfPoint& tau) {
    validate(tau);
    auto c = cutoffs_for(0, tau);
    return detail::eval_f(0, tau, c.series, c.completion);
}

std::complex<double> f1(const UpperHalfPoint& tau) {
    validate(tau);
    auto c = cutoffs_for(1, tau);
    return detail::eval_f(1, tau, c.series, c.completion);
}

namespace {

UpperHalfPoint neg_inverse(const UpperHalfPoint& tau) {
    double n2 = tau.re * tau.re + tau.im * tau.im;
    return UpperHalfPoint{-tau.re / n2, tau.im / n2};
}

// (tau/i)^{3/2}, principal branch; tau/i = tau2 - i tau1 has positive real
// part on the upper half plane, safely away from the cut.
std::complex<double> automorphy(const UpperHalfPoint& tau) {
    return std::pow(std::complex<double>(tau.im, -tau.re), 1.5);
}

} // namespace

TransformReport check_S_matrix(const UpperHalfPoint& tau, double tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    UpperHalfPoint stau = neg_inverse(tau);
    TransformReport r;
    r.tol = tol;
    r.lhs = {f0(stau), f1(stau)};
    std::complex<double> a = f0(tau), b = f1(tau);
    std::complex<double> fac = automorphy(tau) * (-1.0 / std::sqrt(2.0));
    r.rhs = {fac * (a + b), fac * (a - b)};
    r.residual = std::max(std::abs(r.lhs[0] - r.rhs[0]), std::abs(r.lhs[1] - r.rhs[1]));
    r.pass = r.residual < tol;
    auto c1 = detail::adaptive_cutoffs(tau), c2 = detail::adaptive_cutoffs(stau);
    r.cutoff_series = std::max(c1.series, c2.series);
    r.cutoff_completion = std::max(c1.completion, c2.completion);
    return r;
}

TransformReport check_sduality_p2(const UpperHalfPoint& tau, double tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    UpperHalfPoint stau = neg_inverse(tau);
    TransformReport r;
    r.tol = tol;
    std::complex<double> lhs = f0(stau);
    // SO(3)-side combination normalized so the duality constant is exactly
    // 2^{-3/2}; the sign is measured, never assumed.
    std::complex<double> so3 = 2.0 * (f0(tau) + f1(tau));
    std::complex<double> base = std::pow(2.0, -1.5) * automorphy(tau) * so3;
    double plus = std::abs(lhs - base), minus = std::abs(lhs + base);
    r.sign = (minus < plus) ? -1 : 1;
    r.lhs = {lhs, 0.0};
    r.rhs = {static_cast<double>(r.sign) * base, 0.0};
    r.residual = std::min(plus, minus);
    r.pass = r.residual < tol;
    auto c1 = detail::adaptive_cutoffs(tau), c2 = detail::adaptive_cutoffs(stau);
    r.cutoff_series = std::max(c1.series, c2.series);
    r.cutoff_completion = std::max(c1.completion, c2.completion);
    return r;
}

} // namespace vwq
