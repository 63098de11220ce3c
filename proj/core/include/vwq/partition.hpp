#pragma once

#include <tuple>
#include <vector>

#include "vwq/number_theory.hpp"
#include "vwq/series.hpp"

namespace vwq {

// Monopole-branch partition function for the plane: the prefactor exponent
// is E = c1^2/4 + 3 c1/2 + 2 and the sum runs over n = 1..N with
//   c1 odd:  3 H(4n-1) q^{E + 1/4 - n}   (window E + 1/4)
//   c1 even: 3 (H(4n) - sigma_0(n)/2) q^{E - n}   (window E)
// drop_divisor_term removes the sigma_0 subtraction (the strictly-semistable
// correction experiment); the default implements the sums as stated.
FracExpSeries z_vb_p2(long c1, long N, bool drop_divisor_term = false);

// q^{1/8} eta(q)^{-3} * z_vb_p2.
FracExpSeries z_hat_p2(long c1, long N);

// The weighted plane with weights (1,2,2); branch selected by c1 mod 4:
//   c1 odd:       q^{c1^2/8 + 3c1/2 + 17/4} sum H(8n-1) q^{1/8 - n}
//   c1 = 0 mod 4: q^P (q^{1/2} sum 3 H(4n-1) q^{1/2-2n}
//                      + sum 3 (H(4n) - sigma_0(n)/2) q^{-2n})
//   c1 = 2 mod 4: q^P (sum 3 H(4n-1) q^{1/2-2n}
//                      + q^{1/2} sum 3 (H(4n) - sigma_0(n)/2) q^{-2n})
// with P = c1^2/8 + 3 c1/2 + 4.
FracExpSeries z_vb_p122(long c1, long N);

// The (2,2,2) gerbe: equal to the plane series with shifted first Chern
// class, z_vb_p2(c1/2 + lambda).  c1 must be even.
FracExpSeries z_vb_p222(long c1, int lambda, long N);

// (1/2) (q^{-2} z_vb_p222(0,0) + q^{-15/4} z_vb_p222(0,1)).
FracExpSeries z_so3_p2(long N);

// Checks rescale(z_vb_p122(c1), 1/2) ==
//   q^{-3c1^2/16 - 3c1/4 + 1/4} * (odd-type plane sum at c1)
// + q^{-3c1^2/16 - 3c1/4}       * (even-type plane sum at c1)
// coefficient by coefficient on the common window.  c1 must be 0 mod 4.
struct IdentityReport {
    bool pass;
    Rational window; // exponents below this were compared
    std::vector<std::pair<Rational, Rational>> mismatches; // (exponent, lhs - rhs)
};

IdentityReport verify_p122_identity(long c1, long N);

// Orbifold surface with ADE (type A) singularities: resolved Euler number
// and the list of A_{n_i} indices.
struct AdeSurface {
    long chi_resolved;
    std::vector<int> singularities;
};

// eta(q)^{-chi} * prod_i Theta_{n_i}(q): generating function of the Euler
// numbers of the Hilbert schemes of points, carrying the q^{-chi/24}
// prefactor.  Coefficient of q^{n - chi/24} is the degree-n value for n <= N.
FracExpSeries toda_series(const AdeSurface& s, long N);

// c~_2 + 14 c~_1.c_1 + 4 c~_1^2 from the crepant-resolution Chern numbers.
Rational ade_chern_integral(const Rational& ct2, const Rational& ct1_c1,
                            const Rational& ct1_sq);

// The degree-1 Hilbert scheme of a point contributes exactly 1.
inline constexpr int ade_degree1_contribution = 1;

// (g_C, p_g, h0(K^2)) for the quintic: g = 1 + c1^2, p_g = (c1^2 + c2)/12 - 1,
// h0(K^2) = p_g + g with c1^2 = 5, c2 = 55.
struct QuinticInvariants {
    long g_C;
    long p_g;
    long h0K2;
};

QuinticInvariants quintic_invariants();

} // namespace vwq
