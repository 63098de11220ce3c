#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vwq/rational.hpp"

namespace vwq {

// Truncated Laurent series in q with rational exponents.  Exponents live on
// the lattice (1/denom)Z: the stored map sends k to the coefficient of
// q^{k/denom}.  Coefficients at exponents >= trunc are unknown, not zero;
// every operation propagates the tightest window it can actually certify.
//
// Invariants: denom > 0, no stored coefficient is zero, every stored
// exponent k/denom < trunc.  denom is minimal only on demand (normalized()),
// never assumed.
class FracExpSeries {
public:
    // The zero series (empty term map) with the given window.
    static FracExpSeries zero(const Rational& trunc, const Int& denom = 1);

    // c * q^e, truncated at T.  Throws EmptyWindowError when e >= T.
    static FracExpSeries monomial(const Rational& c, const Rational& e, const Rational& T);

    // Assemble from (exponent, coefficient) pairs; zero coefficients and
    // exponents >= trunc are rejected rather than silently dropped.
    static FracExpSeries from_terms(const std::vector<std::pair<Rational, Rational>>& terms,
                                    const Rational& trunc);

    const Int& denom() const { return denom_; }
    const Rational& trunc() const { return trunc_; }
    const std::map<Int, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Least stored exponent; falls back to trunc for the zero series (the
    // convention the truncation rule for products needs).
    Rational valuation_or_trunc() const;

    // Stored coefficient or 0 for any e < trunc; OutsideWindowError otherwise.
    Rational coefficient(const Rational& e) const;

    // Same series on the minimal exponent lattice.
    FracExpSeries normalized() const;

    // Same series viewed on the (1/new_denom)Z lattice; new_denom must be a
    // positive multiple of denom().
    FracExpSeries rebased(const Int& new_denom) const;

    // Mathematical equality: identical window and identical coefficients
    // (compared on the minimal lattice).
    friend bool operator==(const FracExpSeries& a, const FracExpSeries& b);

private:
    FracExpSeries(Int denom, std::map<Int, Rational> terms, Rational trunc);

    Int denom_;                    // exponent lattice: exponents are k/denom_
    std::map<Int, Rational> terms_; // k -> coefficient of q^{k/denom_}
    Rational trunc_;               // exponents >= trunc_ are unknown

    friend FracExpSeries add(const FracExpSeries&, const FracExpSeries&);
    friend FracExpSeries mul(const FracExpSeries&, const FracExpSeries&);
    friend FracExpSeries invert(const FracExpSeries&);
    friend FracExpSeries sqrt_series(const FracExpSeries&);
    friend FracExpSeries rescale(const FracExpSeries&, const Rational&);
    friend FracExpSeries shift(const FracExpSeries&, const Rational&);
    friend FracExpSeries scale(const FracExpSeries&, const Rational&);
};

// Termwise sum; window = min of the two windows, lattices rebased to lcm.
FracExpSeries add(const FracExpSeries& a, const FracExpSeries& b);

FracExpSeries sub(const FracExpSeries& a, const FracExpSeries& b);

// Cauchy product.  The certified window is
//   min(a.trunc + val(b), b.trunc + val(a)),
// val being the least stored exponent (trunc for the zero series): a term of
// a at its valuation multiplied by the unknown tail of b is the first thing
// the product cannot know.
FracExpSeries mul(const FracExpSeries& a, const FracExpSeries& b);

// Multiplicative inverse.  With a = c q^v (1 + u), the result is known on
// [-v, trunc - 2v).  Throws NotInvertibleError when a is zero in its window.
FracExpSeries invert(const FracExpSeries& a);

// Square root with positive leading coefficient.  The leading exponent must
// be even on the current lattice (k/D with k odd has no root on that
// lattice) and the leading coefficient must be the square of a rational;
// otherwise NoRootError.  Result window: trunc - v/2 for leading exponent v,
// so that mul(sqrt(a), sqrt(a)) == a on a's full window.
FracExpSeries sqrt_series(const FracExpSeries& a);

// Repeated-squaring integer power; k = 0 yields the constant 1 on the window
// trunc - val(a); negative k goes through invert().
FracExpSeries pow_int(const FracExpSeries& a, long long k);

// q -> q^s for s > 0: exponents and window scale by s.
FracExpSeries rescale(const FracExpSeries& a, const Rational& s);

// q^e * a, performed exactly (exponents and window shift by e).
FracExpSeries shift(const FracExpSeries& a, const Rational& e);

// c * a on the unchanged window.
FracExpSeries scale(const FracExpSeries& a, const Rational& c);

// Do a and b have identical coefficients below min(a.trunc, b.trunc)?
bool agree_on_common_window(const FracExpSeries& a, const FracExpSeries& b);

// All (exponent, a-coeff - b-coeff) with nonzero difference below the common
// window, ascending.
std::vector<std::pair<Rational, Rational>> diff_on_common_window(const FracExpSeries& a,
                                                                 const FracExpSeries& b);

// Canonical interchange form:
// {"denominator": D, "truncation": {"num": ..., "den": ...},
//  "terms": [{"exp_num": k, "exp_den": D, "num": ..., "den": ...}, ...]}
// terms ascending by exponent, D minimal.  Byte-stable: emitting a parsed
// emission reproduces the bytes.  Integers are arbitrary precision.
std::string to_canonical_json(const FracExpSeries& s);
FracExpSeries from_canonical_json(const std::string& text);

// One "exp_num,exp_den,num,den" row per term, ascending, minimal lattice.
std::string to_csv(const FracExpSeries& s);

// Aligned human-readable listing with the window stated up front.
std::string to_text(const FracExpSeries& s);

} // namespace vwq
