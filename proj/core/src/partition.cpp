#include "vwq/partition.hpp"

namespace vwq {

namespace {

// Sum over n = 1..N of 3 H(4n-1) q^{base + 1/4 - n}.
std::vector<std::pair<Rational, Rational>> odd_type_terms(const Rational& base, long N) {
    std::vector<std::pair<Rational, Rational>> t;
    for (long n = 1; n <= N; ++n)
        t.emplace_back(base + Rational(1, 4) - Rational(n),
                       Rational(3) * hurwitz(4 * n - 1));
    return t;
}

// Sum over n = 1..N of 3 (H(4n) - sigma_0(n)/2) q^{base - n}.
std::vector<std::pair<Rational, Rational>> even_type_terms(const Rational& base, long N,
                                                           bool drop_divisor) {
    std::vector<std::pair<Rational, Rational>> t;
    for (long n = 1; n <= N; ++n) {
        Rational c = Rational(3) * hurwitz(4 * n);
        if (!drop_divisor) c -= Rational(3 * divisor_count(n), 2);
        t.emplace_back(base - Rational(n), c);
    }
    return t;
}

} // namespace

FracExpSeries z_vb_p2(long c1, long N, bool drop_divisor_term) {
    if (N < 1) throw DomainError("partition function needs at least one term");
    Rational E = Rational(c1 * c1, 4) + Rational(3 * c1, 2) + 2;
    if (((c1 % 2) + 2) % 2 == 1)
        return FracExpSeries::from_terms(odd_type_terms(E, N), E + Rational(1, 4));
    return FracExpSeries::from_terms(even_type_terms(E, N, drop_divisor_term), E);
}

FracExpSeries z_hat_p2(long c1, long N) {
    FracExpSeries z = z_vb_p2(c1, N);
    // eta^{-3} window N + 1 keeps the full z window through the product.
    FracExpSeries eta3 = eta_power(-3, Rational(N + 1));
    return shift(mul(z, eta3), Rational(1, 8));
}

FracExpSeries z_vb_p122(long c1, long N) {
    if (N < 1) throw DomainError("partition function needs at least one term");
    long m = ((c1 % 4) + 4) % 4;
    if (m % 2 == 1) {
        Rational P = Rational(c1 * c1, 8) + Rational(3 * c1, 2) + Rational(17, 4);
        std::vector<std::pair<Rational, Rational>> t;
        for (long n = 1; n <= N; ++n)
            t.emplace_back(P + Rational(1, 8) - Rational(n), hurwitz(8 * n - 1));
        return FracExpSeries::from_terms(t, P + Rational(1, 8));
    }
    Rational P = Rational(c1 * c1, 8) + Rational(3 * c1, 2) + 4;
    // Both even branches interleave the two sums with a relative q^{1/2};
    // which sum carries the extra shift swaps between c1 = 0 and c1 = 2
    // mod 4 (for c1 = 2 the two exponent families coincide and stack).
    Rational odd_shift = (m == 0) ? Rational(1, 2) : Rational(0);
    Rational even_shift = (m == 0) ? Rational(0) : Rational(1, 2);
    std::vector<std::pair<Rational, Rational>> t;
    for (long n = 1; n <= N; ++n) {
        t.emplace_back(P + odd_shift + Rational(1, 2) - Rational(2 * n),
                       Rational(3) * hurwitz(4 * n - 1));
        Rational c = Rational(3) * hurwitz(4 * n) - Rational(3 * divisor_count(n), 2);
        t.emplace_back(P + even_shift - Rational(2 * n), c);
    }
    return FracExpSeries::from_terms(t, P);
}

FracExpSeries z_vb_p222(long c1, int lambda, long N) {
    if (((c1 % 2) + 2) % 2 != 0)
        throw DomainError("the (2,2,2) partition function needs an even first Chern class");
    if (lambda != 0 && lambda != 1)
        throw DomainError("inertia index lambda must be 0 or 1");
    return z_vb_p2(c1 / 2 + lambda, N);
}

FracExpSeries z_so3_p2(long N) {
    FracExpSeries even_part = shift(z_vb_p222(0, 0, N), Rational(-2));
    FracExpSeries odd_part = shift(z_vb_p222(0, 1, N), Rational(-15, 4));
    return scale(add(even_part, odd_part), Rational(1, 2));
}

IdentityReport verify_p122_identity(long c1, long N) {
    if (((c1 % 4) + 4) % 4 != 0)
        throw DomainError("the weight-(1,2,2) identity needs c1 = 0 mod 4");
    FracExpSeries lhs = rescale(z_vb_p122(c1, N), Rational(1, 2));

    Rational E = Rational(c1 * c1, 4) + Rational(3 * c1, 2) + 2;
    Rational delta = Rational(-3 * c1 * c1, 16) - Rational(3 * c1, 4);
    FracExpSeries odd_sum =
        FracExpSeries::from_terms(odd_type_terms(E, N), E + Rational(1, 4));
    FracExpSeries even_sum =
        FracExpSeries::from_terms(even_type_terms(E, N, false), E);
    FracExpSeries rhs = add(shift(odd_sum, delta + Rational(1, 4)), shift(even_sum, delta));

    IdentityReport report;
    report.window = std::min(lhs.trunc(), rhs.trunc());
    report.mismatches = diff_on_common_window(lhs, rhs);
    report.pass = report.mismatches.empty();
    return report;
}

FracExpSeries toda_series(const AdeSurface& s, long N) {
    if (N < 1) throw DomainError("generating function needs at least one term");
    long chi = s.chi_resolved;
    FracExpSeries result = eta_power(-chi, Rational(N + 1) - Rational(chi, 24));
    for (int ni : s.singularities) result = mul(result, theta_block(ni, static_cast<int>(N)));
    return result;
}

Rational ade_chern_integral(const Rational& ct2, const Rational& ct1_c1,
                            const Rational& ct1_sq) {
    return ct2 + Rational(14) * ct1_c1 + Rational(4) * ct1_sq;
}

QuinticInvariants quintic_invariants() {
    const long c1sq = 5, c2 = 55;
    long g = 1 + c1sq;
    long pg = (c1sq + c2) / 12 - 1;
    return QuinticInvariants{g, pg, pg + g};
}

} // namespace vwq
