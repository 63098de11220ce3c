#pragma once

#include <map>
#include <utility>

#include "vwq/series.hpp"

namespace vwq {

// The curve the Hilbert-scheme integrals live on: genus g, gerbe order r,
// and the degrees of the two line bundles restricted to it.  The surface
// geometry pins degK = g - 1 and degK2 = 2(g - 1).
struct CurveModel {
    long g;
    long r;
    long degK;
    long degK2;

    CurveModel(long genus, long gerbe)
        : g(genus), r(gerbe), degK(genus - 1), degK2(2 * genus - 2) {
        if (genus < 0) throw DomainError("curve genus must be nonnegative");
        if (gerbe < 1) throw DomainError("gerbe order must be positive");
    }
};

// Polynomial in the degree-2 tautological classes theta and omega, truncated
// at total degree maxdeg (monomials theta^i omega^j with i + j < maxdeg).
class TautPolynomial {
public:
    explicit TautPolynomial(long maxdeg);

    long maxdeg() const { return maxdeg_; }
    const std::map<std::pair<long, long>, Rational>& coeffs() const { return c_; }

    Rational coefficient(long i, long j) const;
    void set(long i, long j, const Rational& v);

    static TautPolynomial constant(const Rational& v, long maxdeg);

private:
    long maxdeg_;
    std::map<std::pair<long, long>, Rational> c_; // (i, j) -> coeff of theta^i omega^j
};

TautPolynomial tp_add(const TautPolynomial& a, const TautPolynomial& b);
TautPolynomial tp_scale(const TautPolynomial& a, const Rational& c);
TautPolynomial tp_mul(const TautPolynomial& a, const TautPolynomial& b);

// Inverse of a polynomial with nonzero constant term (Neumann series up to
// the truncation bound).
TautPolynomial tp_invert(const TautPolynomial& a);

TautPolynomial tp_pow(const TautPolynomial& a, long k);

// integrate theta^i/i! * omega^{n-i} = C(g, i): evaluates
// sum_i coeff(i, n-i) * i! * C(g, i).  Monomials of total degree != n
// contribute nothing.  Requires maxdeg > n.
Rational integrate(const TautPolynomial& P, long n, long g);

enum class ChernKind { tangent, bundle };

// Chern-class series of the tautological bundles on the n-th Hilbert scheme
// of the order-r gerby curve, as polynomials in theta and omega truncated
// beyond total degree n:
//   bundle:  (1 - r^n omega s)^{n+g-1-degL} * exp( s r^n theta / (1 - r^n omega s))
//   tangent: (1 + r^n omega s)^{n+1-g}      * exp(-s r^n theta / (1 + r^n omega s))
// (degL is ignored for the tangent kind.)
TautPolynomial chern_series(ChernKind kind, const CurveModel& cm, long n, long degL,
                            const Rational& s);

// Monopole-branch integral over the n-th Hilbert scheme, assembled from the
// five Chern-class series and integrated with the gerby normalization; the
// scalar (-2)^{n+1-2g} converts the half-weight factor to the common
// (omega - 2) form so the two evaluation paths share one value.
Rational monopole_direct(const CurveModel& cm, long n);

// The same integral from the reduced one-variable integrand
//   (omega-2)^{n+1-2g} (1+omega)^{n-g} (1-omega)^{-(n+g)} (1-2omega)^g,
// evaluated through a Laurent-series path with the r^n scaling carried
// explicitly and cancelled by the gerby integral.
Rational monopole_reduced(const CurveModel& cm, long n);

// sum_{n<N} 2^g (-1)^{n+1} monopole_reduced(cm, n) q^n, truncated at N.
FracExpSeries monopole_series(const CurveModel& cm, long N);

// (1-q)^{g-1} (1 + (1-3q)/sqrt((1-q)(1-9q)))^{1-g} to order N.
FracExpSeries closed_form(long g, long N);

} // namespace vwq
