#include "vwq/number_theory.hpp"

#include <cmath>
#include <map>

namespace vwq {

Rational hurwitz(long long D) {
    if (D < 0) throw DomainError("Hurwitz class number needs a nonnegative discriminant");
    if (D == 0) return Rational(-1, 12);
    long long r = D % 4;
    if (r == 1 || r == 2) return 0;
    // Reduced forms: |B| <= A <= C, with B >= 0 whenever |B| = A or A = C.
    // Weights: 1/3 for (A,A,A), 1/2 for (A,0,A), 1 otherwise.
    Rational h = 0;
    for (long long A = 1; 3 * A * A <= D; ++A) {
        for (long long B = -A + 1; B <= A; ++B) {
            long long num = B * B + D;
            if (num % (4 * A) != 0) continue;
            long long C = num / (4 * A);
            if (C < A) continue;
            if (A == C && B < 0) continue;
            if (A == B && B == C)
                h += Rational(1, 3);
            else if (B == 0 && A == C)
                h += Rational(1, 2);
            else
                h += 1;
        }
    }
    return h;
}

long long divisor_count(long long n) {
    if (n < 1) throw DomainError("divisor count needs a positive integer");
    long long count = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += (d * d == n) ? 1 : 2;
    }
    return count;
}

FracExpSeries eta_power(long long k, const Rational& N) {
    Rational lead = Rational(k, 24);
    if (N <= lead)
        throw EmptyWindowError("eta power window " + to_string(N) +
                               " does not reach the leading exponent " + to_string(lead));
    // Unit part prod (1 - q^j)^k on integer exponents, window N - k/24.
    Rational Tu = N - lead;
    FracExpSeries u = FracExpSeries::monomial(1, 0, Tu);
    for (long long j = 1; Rational(j) < Tu; ++j) {
        FracExpSeries factor = add(FracExpSeries::monomial(1, 0, Tu),
                                   FracExpSeries::monomial(-1, Rational(j), Tu));
        u = mul(u, factor);
    }
    return shift(pow_int(u, k), lead);
}

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic.

namespace {

long long moebius(long long n) {
    long long mu = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Multiply poly by (x^k - 1) in place (ascending coefficients).
void mul_xk_minus_1(std::vector<Int>& p, long long k) {
    std::vector<Int> r(p.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        r[i + static_cast<size_t>(k)] += p[i];
        r[i] -= p[i];
    }
    p = std::move(r);
}

// Exact division by (x^k - 1) in place.
void div_xk_minus_1(std::vector<Int>& p, long long k) {
    std::vector<Int> q(p.size() - static_cast<size_t>(k), 0);
    for (size_t i = p.size(); i-- > static_cast<size_t>(k);) {
        Int c = p[i];
        if (c == 0) continue;
        q[i - static_cast<size_t>(k)] = c;
        p[i] = 0;
        p[i - static_cast<size_t>(k)] += c;
    }
    for (size_t i = 0; i < static_cast<size_t>(k); ++i)
        if (p[i] != 0) throw Error("cyclotomic factorization: inexact division");
    p = std::move(q);
}

// Reduce an arbitrary-degree coefficient vector modulo the monic Phi_m.
void reduce_mod(std::vector<Rational>& c, const std::vector<Int>& phi) {
    size_t deg = phi.size() - 1; // phi(m)
    while (c.size() > deg) {
        Rational lead = c.back();
        c.pop_back();
        if (lead == 0) continue;
        size_t base = c.size() - deg;
        for (size_t j = 0; j < deg; ++j) c[base + j] -= lead * Rational(phi[j]);
    }
    c.resize(deg, Rational(0));
}

const std::vector<Int>& cached_cyclotomic(long long m) {
    static std::map<long long, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, cyclotomic_polynomial(m)).first;
    return it->second;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(long long m) {
    if (m <= 0) throw DomainError("cyclotomic polynomial needs a positive order");
    std::vector<Int> p{1};
    std::vector<long long> negative;
    for (long long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        long long mu = moebius(m / d);
        if (mu == 1) mul_xk_minus_1(p, d);
        else if (mu == -1) negative.push_back(d);
    }
    for (long long d : negative) div_xk_minus_1(p, d);
    return p;
}

CycNumber cyc_zero(long long m) {
    const auto& phi = cached_cyclotomic(m);
    return CycNumber{m, std::vector<Rational>(phi.size() - 1, Rational(0))};
}

CycNumber cyc_one(long long m) {
    CycNumber x = cyc_zero(m);
    x.coeffs[0] = 1;
    return x;
}

CycNumber cyc_root(long long m, long long a) {
    if (m == 0) throw DomainError("cyclotomic root of order zero");
    if (m < 0) throw DomainError("cyclotomic root needs a positive order");
    const auto& phi = cached_cyclotomic(m);
    long long e = ((a % m) + m) % m;
    std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
    c.back() = 1;
    reduce_mod(c, phi);
    return CycNumber{m, std::move(c)};
}

CycNumber cyc_add(const CycNumber& x, const CycNumber& y) {
    if (x.order != y.order) throw DomainError("cyclotomic orders differ");
    CycNumber r = x;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
    return r;
}

CycNumber cyc_mul(const CycNumber& x, const CycNumber& y) {
    if (x.order != y.order) throw DomainError("cyclotomic orders differ");
    const auto& phi = cached_cyclotomic(x.order);
    std::vector<Rational> c(x.coeffs.size() + y.coeffs.size() - 1, Rational(0));
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        for (size_t j = 0; j < y.coeffs.size(); ++j)
            if (y.coeffs[j] != 0) c[i + j] += x.coeffs[i] * y.coeffs[j];
    }
    reduce_mod(c, phi);
    return CycNumber{x.order, std::move(c)};
}

CycNumber cyc_scale(const CycNumber& x, const Rational& c) {
    CycNumber r = x;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

bool cyc_equal(const CycNumber& x, const CycNumber& y) {
    return x.order == y.order && x.coeffs == y.coeffs;
}

std::optional<Rational> cyc_to_rational(const CycNumber& x) {
    for (size_t i = 1; i < x.coeffs.size(); ++i)
        if (x.coeffs[i] != 0) return std::nullopt;
    return x.coeffs.empty() ? Rational(0) : x.coeffs[0];
}

FracExpSeries theta_block(int n, int N) {
    if (n < 1) throw DomainError("theta block needs n >= 1");
    if (N < 0) throw DomainError("theta block needs a nonnegative order");
    const long long m = n + 2;
    // Q(k) = (|k|^2 + (sum k_i)^2)/2 >= |k|^2/2, so |k_i| <= ceil(sqrt(2N))
    // encloses every vector with Q(k) <= N.
    const long long B = static_cast<long long>(std::ceil(std::sqrt(2.0 * N))) + 1;
    // counts[Q][a]: lattice vectors with Q(k) = Q and phase k_1 + 2k_2 + ...
    // congruent to a mod m.
    std::vector<std::vector<Int>> counts(static_cast<size_t>(N) + 1,
                                         std::vector<Int>(static_cast<size_t>(m), Int(0)));
    std::vector<long long> k(static_cast<size_t>(n), -B);
    while (true) {
        long long sum = 0, norm2 = 0, phase = 0;
        for (int i = 0; i < n; ++i) {
            sum += k[static_cast<size_t>(i)];
            norm2 += k[static_cast<size_t>(i)] * k[static_cast<size_t>(i)];
            phase += (i + 1) * k[static_cast<size_t>(i)];
        }
        long long twoQ = norm2 + sum * sum;
        if (twoQ % 2 == 0 && twoQ / 2 <= N) {
            long long a = ((phase % m) + m) % m;
            counts[static_cast<size_t>(twoQ / 2)][static_cast<size_t>(a)] += 1;
        }
        int pos = 0;
        while (pos < n && k[static_cast<size_t>(pos)] == B) {
            k[static_cast<size_t>(pos)] = -B;
            ++pos;
        }
        if (pos == n) break;
        ++k[static_cast<size_t>(pos)];
    }

    std::vector<CycNumber> roots;
    roots.reserve(static_cast<size_t>(m));
    for (long long a = 0; a < m; ++a) roots.push_back(cyc_root(m, a));

    std::vector<std::pair<Rational, Rational>> terms;
    for (long long Q = 0; Q <= N; ++Q) {
        CycNumber acc = cyc_zero(m);
        for (long long a = 0; a < m; ++a) {
            const Int& cnt = counts[static_cast<size_t>(Q)][static_cast<size_t>(a)];
            if (cnt != 0) acc = cyc_add(acc, cyc_scale(roots[static_cast<size_t>(a)], Rational(cnt)));
        }
        auto val = cyc_to_rational(acc);
        if (!val) throw IrrationalityError(n, Q);
        if (*val != 0) terms.emplace_back(Rational(Q), *val);
    }
    return FracExpSeries::from_terms(terms, Rational(N + 1));
}

} // namespace vwq
