#include "vwq/tautological.hpp"

namespace vwq {

TautPolynomial::TautPolynomial(long maxdeg) : maxdeg_(maxdeg) {
    if (maxdeg < 1) throw DomainError("tautological polynomial needs maxdeg >= 1");
}

Rational TautPolynomial::coefficient(long i, long j) const {
    if (i < 0 || j < 0 || i + j >= maxdeg_)
        throw OutsideWindowError("tautological coefficient (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is outside total degree < " +
                                 std::to_string(maxdeg_));
    auto it = c_.find({i, j});
    return it == c_.end() ? Rational(0) : it->second;
}

void TautPolynomial::set(long i, long j, const Rational& v) {
    if (i < 0 || j < 0 || i + j >= maxdeg_) {
        if (v == 0) return;
        throw OutsideWindowError("tautological term (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is outside total degree < " +
                                 std::to_string(maxdeg_));
    }
    if (v == 0)
        c_.erase({i, j});
    else
        c_[{i, j}] = v;
}

TautPolynomial TautPolynomial::constant(const Rational& v, long maxdeg) {
    TautPolynomial p(maxdeg);
    p.set(0, 0, v);
    return p;
}

TautPolynomial tp_add(const TautPolynomial& a, const TautPolynomial& b) {
    TautPolynomial r(std::min(a.maxdeg(), b.maxdeg()));
    for (const auto& [ij, v] : a.coeffs())
        if (ij.first + ij.second < r.maxdeg()) r.set(ij.first, ij.second, v);
    for (const auto& [ij, v] : b.coeffs())
        if (ij.first + ij.second < r.maxdeg())
            r.set(ij.first, ij.second, r.coefficient(ij.first, ij.second) + v);
    return r;
}

TautPolynomial tp_scale(const TautPolynomial& a, const Rational& c) {
    TautPolynomial r(a.maxdeg());
    if (c != 0)
        for (const auto& [ij, v] : a.coeffs()) r.set(ij.first, ij.second, c * v);
    return r;
}

TautPolynomial tp_mul(const TautPolynomial& a, const TautPolynomial& b) {
    TautPolynomial r(std::min(a.maxdeg(), b.maxdeg()));
    for (const auto& [ij, u] : a.coeffs())
        for (const auto& [kl, v] : b.coeffs()) {
            long i = ij.first + kl.first, j = ij.second + kl.second;
            if (i + j < r.maxdeg()) r.set(i, j, r.coefficient(i, j) + u * v);
        }
    return r;
}

TautPolynomial tp_invert(const TautPolynomial& a) {
    Rational c0 = a.coefficient(0, 0);
    if (c0 == 0) throw NotInvertibleError("tautological polynomial has zero constant term");
    // a = c0 (1 - m) with m of positive total degree; 1/a = (1/c0) sum m^j.
    TautPolynomial m = tp_scale(a, Rational(-1) / c0);
    m.set(0, 0, m.coefficient(0, 0) + 1); // m = 1 - a/c0
    TautPolynomial r = TautPolynomial::constant(1, a.maxdeg());
    TautPolynomial p = TautPolynomial::constant(1, a.maxdeg());
    for (long j = 1; j < a.maxdeg(); ++j) {
        p = tp_mul(p, m);
        if (p.coeffs().empty()) break;
        r = tp_add(r, p);
    }
    return tp_scale(r, Rational(1) / c0);
}

TautPolynomial tp_pow(const TautPolynomial& a, long k) {
    if (k < 0) return tp_pow(tp_invert(a), -k);
    TautPolynomial r = TautPolynomial::constant(1, a.maxdeg());
    TautPolynomial base = a;
    while (k > 0) {
        if (k & 1) r = tp_mul(r, base);
        k >>= 1;
        if (k > 0) base = tp_mul(base, base);
    }
    return r;
}

Rational integrate(const TautPolynomial& P, long n, long g) {
    if (n < 0) throw DomainError("integration degree must be nonnegative");
    if (P.maxdeg() <= n)
        throw InsufficientWindowError("polynomial truncated at total degree " +
                                      std::to_string(P.maxdeg()) +
                                      " cannot be integrated in degree " + std::to_string(n));
    Rational total = 0;
    for (long i = 0; i <= n; ++i) {
        auto it = P.coeffs().find({i, n - i});
        if (it == P.coeffs().end()) continue;
        total += it->second * Rational(factorial(i) * binomial(g, i));
    }
    return total;
}

TautPolynomial chern_series(ChernKind kind, const CurveModel& cm, long n, long degL,
                            const Rational& s) {
    if (n < 0) throw DomainError("Hilbert scheme index must be nonnegative");
    long maxdeg = n + 1;
    Rational rn = Rational(int_pow(Int(cm.r), static_cast<unsigned long>(n)));
    Rational scaled = rn * s;
    Rational omega_coeff = (kind == ChernKind::bundle) ? Rational(-scaled) : scaled;
    long exponent = (kind == ChernKind::bundle) ? n + cm.g - 1 - degL : n + 1 - cm.g;
    Rational theta_coeff = (kind == ChernKind::bundle) ? scaled : Rational(-scaled);

    // u = 1 + omega_coeff * omega (the linear term is cut for n = 0, where
    // only total degree 0 survives)
    TautPolynomial u = TautPolynomial::constant(1, maxdeg);
    if (maxdeg > 1) u.set(0, 1, omega_coeff);

    TautPolynomial result = tp_pow(u, exponent);

    // exp(theta_coeff * theta / u), with theta powers cut by total degree.
    if (theta_coeff != 0) {
        TautPolynomial v = tp_invert(u);
        TautPolynomial expo = TautPolynomial::constant(1, maxdeg);
        TautPolynomial theta_over_u(maxdeg);
        for (const auto& [ij, c] : v.coeffs())
            if (ij.first + ij.second + 1 < maxdeg)
                theta_over_u.set(ij.first + 1, ij.second, theta_coeff * c);
        TautPolynomial p = TautPolynomial::constant(1, maxdeg);
        Rational inv_fact = 1;
        for (long i = 1; i < maxdeg; ++i) {
            p = tp_mul(p, theta_over_u);
            if (p.coeffs().empty()) break;
            inv_fact /= i;
            expo = tp_add(expo, tp_scale(p, inv_fact));
        }
        result = tp_mul(result, expo);
    }
    return result;
}

Rational monopole_direct(const CurveModel& cm, long n) {
    if (n < 0) throw DomainError("Hilbert scheme index must be nonnegative");
    TautPolynomial num = chern_series(ChernKind::bundle, cm, n, cm.degK2, Rational(1, 2));
    num = tp_mul(num, chern_series(ChernKind::tangent, cm, n, 0, Rational(-1)));
    num = tp_mul(num, chern_series(ChernKind::bundle, cm, n, cm.degK, Rational(-1)));
    TautPolynomial den = tp_mul(chern_series(ChernKind::bundle, cm, n, cm.degK, Rational(1)),
                                chern_series(ChernKind::bundle, cm, n, cm.degK2, Rational(1)));
    TautPolynomial ratio = tp_mul(num, tp_invert(den));
    // Gerby integration divides the plain integral by r^{n^2}; the degree-n
    // part of the ratio carries the uniform factor (r^n)^n, so the result is
    // r-free — verified, not assumed.
    Rational plain = integrate(ratio, n, cm.g);
    Rational gerby = plain / Rational(int_pow(Int(cm.r), static_cast<unsigned long>(n * n)));
    Rational prefactor = rational_pow(Rational(-2), n + 1 - 2 * cm.g);
    return prefactor * gerby;
}

Rational monopole_reduced(const CurveModel& cm, long n) {
    if (n < 0) throw DomainError("Hilbert scheme index must be nonnegative");
    // One-variable Laurent path: the reduced integrand is a series in the
    // scaled class r^n omega.  Expanding in omega multiplies its degree-n
    // coefficient by (r^n)^n; the gerby integral of omega^n contributes
    // 1/r^{n^2}.  Both factors are carried exactly and must cancel.
    Rational T(n + 1);
    Rational rn = Rational(int_pow(Int(cm.r), static_cast<unsigned long>(n)));
    auto linear = [&](const Rational& c0, const Rational& c1) {
        FracExpSeries s = FracExpSeries::monomial(c0, 0, T);
        // n = 0 only needs the constant term; the omega term sits at the
        // window edge and may not be stored there.
        if (T > 1) s = add(s, FracExpSeries::monomial(c1 * rn, 1, T));
        return s;
    };
    FracExpSeries f = pow_int(linear(-2, 1), n + 1 - 2 * cm.g);
    f = mul(f, pow_int(linear(1, 1), n - cm.g));
    f = mul(f, pow_int(linear(1, -1), -(n + cm.g)));
    f = mul(f, pow_int(linear(1, -2), cm.g));
    Rational omega_n = f.coefficient(Rational(n));
    return omega_n / Rational(int_pow(Int(cm.r), static_cast<unsigned long>(n * n)));
}

FracExpSeries monopole_series(const CurveModel& cm, long N) {
    if (N < 1) throw DomainError("monopole series needs at least one term");
    std::vector<std::pair<Rational, Rational>> terms;
    Rational norm = rational_pow(Rational(2), cm.g);
    for (long n = 0; n < N; ++n) {
        Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
        terms.emplace_back(Rational(n), norm * sign * monopole_reduced(cm, n));
    }
    return FracExpSeries::from_terms(terms, Rational(N));
}

FracExpSeries closed_form(long g, long N) {
    if (g < 0) throw DomainError("genus must be nonnegative");
    if (N < 1) throw DomainError("closed form needs at least one term");
    Rational T(N);
    auto linear = [&](const Rational& c1) {
        return add(FracExpSeries::monomial(1, 0, T), FracExpSeries::monomial(c1, 1, T));
    };
    FracExpSeries root = sqrt_series(mul(linear(-1), linear(-9)));
    FracExpSeries bracket = add(FracExpSeries::monomial(1, 0, T),
                                mul(linear(-3), invert(root)));
    return mul(pow_int(linear(-1), g - 1), pow_int(bracket, 1 - g));
}

} // namespace vwq
