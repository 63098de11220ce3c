#include "vwq/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vwq {

namespace {

Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// floor(a / b) for b > 0 (cpp_int division truncates toward zero).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// k/D < T ?
bool exp_below(const Int& k, const Int& D, const Rational& T) {
    return k * den(T) < num(T) * D;
}

// Largest integer k with k/D < T, i.e. the top lattice index inside the window.
Int top_lattice_index(const Int& D, const Rational& T) {
    // k < T*D  <=>  k <= floor((num(T)*D - 1) / den(T))
    return floor_div(num(T) * D - 1, den(T));
}

} // namespace

FracExpSeries::FracExpSeries(Int denom, std::map<Int, Rational> terms, Rational trunc)
    : denom_(std::move(denom)), terms_(std::move(terms)), trunc_(std::move(trunc)) {
    if (denom_ <= 0) throw DomainError("series denominator must be positive");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || !exp_below(it->first, denom_, trunc_))
            it = terms_.erase(it);
        else
            ++it;
    }
}

FracExpSeries FracExpSeries::zero(const Rational& trunc, const Int& denom) {
    return FracExpSeries(denom, {}, trunc);
}

FracExpSeries FracExpSeries::monomial(const Rational& c, const Rational& e, const Rational& T) {
    if (e >= T)
        throw EmptyWindowError("monomial exponent " + to_string(e) +
                               " is not below the truncation " + to_string(T));
    Int D = den(e);
    std::map<Int, Rational> t;
    if (c != 0) t[num(e)] = c;
    return FracExpSeries(D, std::move(t), T);
}

FracExpSeries FracExpSeries::from_terms(const std::vector<std::pair<Rational, Rational>>& terms,
                                        const Rational& trunc) {
    Int D = 1;
    for (const auto& [e, c] : terms) {
        if (e >= trunc)
            throw EmptyWindowError("term exponent " + to_string(e) +
                                   " is not below the truncation " + to_string(trunc));
        D = lcm_int(D, den(e));
    }
    std::map<Int, Rational> t;
    for (const auto& [e, c] : terms) {
        if (c == 0) continue;
        t[num(e) * (D / den(e))] += c;
    }
    return FracExpSeries(D, std::move(t), trunc);
}

Rational FracExpSeries::valuation_or_trunc() const {
    if (terms_.empty()) return trunc_;
    return Rational(terms_.begin()->first, denom_);
}

Rational FracExpSeries::coefficient(const Rational& e) const {
    if (e >= trunc_)
        throw OutsideWindowError("coefficient of q^" + to_string(e) +
                                 " lies at or past the truncation " + to_string(trunc_));
    if (denom_ % den(e) != 0) return 0; // off the lattice: certainly absent
    auto it = terms_.find(num(e) * (denom_ / den(e)));
    return it == terms_.end() ? Rational(0) : it->second;
}

FracExpSeries FracExpSeries::normalized() const {
    if (terms_.empty()) return FracExpSeries(Int(1), {}, trunc_);
    Int g = denom_;
    for (const auto& [k, c] : terms_) g = gcd_int(g, k);
    if (g == 1) return *this;
    std::map<Int, Rational> t;
    for (const auto& [k, c] : terms_) t[k / g] = c;
    return FracExpSeries(denom_ / g, std::move(t), trunc_);
}

FracExpSeries FracExpSeries::rebased(const Int& new_denom) const {
    if (new_denom <= 0 || new_denom % denom_ != 0)
        throw DomainError("rebase target must be a positive multiple of the current denominator");
    Int f = new_denom / denom_;
    std::map<Int, Rational> t;
    for (const auto& [k, c] : terms_) t[k * f] = c;
    return FracExpSeries(new_denom, std::move(t), trunc_);
}

bool operator==(const FracExpSeries& a, const FracExpSeries& b) {
    FracExpSeries na = a.normalized(), nb = b.normalized();
    return na.denom_ == nb.denom_ && na.trunc_ == nb.trunc_ && na.terms_ == nb.terms_;
}

FracExpSeries add(const FracExpSeries& a, const FracExpSeries& b) {
    Int D = boost::multiprecision::lcm(a.denom_, b.denom_);
    FracExpSeries ra = a.rebased(D), rb = b.rebased(D);
    Rational T = std::min(a.trunc_, b.trunc_);
    std::map<Int, Rational> t = std::move(ra.terms_);
    for (const auto& [k, c] : rb.terms_) t[k] += c;
    return FracExpSeries(D, std::move(t), T);
}

FracExpSeries sub(const FracExpSeries& a, const FracExpSeries& b) {
    return add(a, scale(b, Rational(-1)));
}

FracExpSeries mul(const FracExpSeries& a, const FracExpSeries& b) {
    Rational T = std::min(a.trunc_ + b.valuation_or_trunc(),
                          b.trunc_ + a.valuation_or_trunc());
    Int D = boost::multiprecision::lcm(a.denom_, b.denom_);
    FracExpSeries ra = a.rebased(D), rb = b.rebased(D);
    std::map<Int, Rational> t;
    for (const auto& [ka, ca] : ra.terms_)
        for (const auto& [kb, cb] : rb.terms_) {
            Int k = ka + kb;
            if (exp_below(k, D, T)) t[k] += ca * cb;
        }
    return FracExpSeries(D, std::move(t), T);
}

FracExpSeries invert(const FracExpSeries& a) {
    if (a.terms_.empty())
        throw NotInvertibleError("cannot invert a series that is zero within its window");
    const Int& D = a.denom_;
    const Int k0 = a.terms_.begin()->first;
    // Coefficients of the unit part a / q^{k0/D} are known for lattice
    // indices j with (k0 + j)/D < trunc.
    Int top = top_lattice_index(D, a.trunc_);
    long long M = static_cast<long long>(top - k0); // indices 0..M are known
    std::vector<Rational> au(static_cast<size_t>(M) + 1), bu(static_cast<size_t>(M) + 1);
    for (long long j = 0; j <= M; ++j) {
        auto it = a.terms_.find(k0 + j);
        au[static_cast<size_t>(j)] = it == a.terms_.end() ? Rational(0) : it->second;
    }
    Rational lead_inv = Rational(1) / au[0];
    bu[0] = lead_inv;
    for (long long m = 1; m <= M; ++m) {
        Rational s = 0;
        for (long long j = 1; j <= m; ++j)
            if (au[static_cast<size_t>(j)] != 0)
                s += au[static_cast<size_t>(j)] * bu[static_cast<size_t>(m - j)];
        bu[static_cast<size_t>(m)] = -lead_inv * s;
    }
    // b = q^{-k0/D} * unit inverse, known below trunc - 2*k0/D.
    Rational T = a.trunc_ - Rational(2 * k0, D);
    std::map<Int, Rational> t;
    for (long long m = 0; m <= M; ++m)
        if (bu[static_cast<size_t>(m)] != 0) t[Int(m) - k0] = bu[static_cast<size_t>(m)];
    return FracExpSeries(D, std::move(t), T);
}

FracExpSeries sqrt_series(const FracExpSeries& a) {
    if (a.terms_.empty())
        throw NoRootError("series is zero within its window: no leading coefficient to take a root of");
    const Int& D = a.denom_;
    const Int k0 = a.terms_.begin()->first;
    if (k0 % 2 != 0)
        throw NoRootError("leading exponent " + to_string(Rational(k0, D)) +
                          " is odd on the lattice with denominator " + to_string(D));
    auto s0 = rational_sqrt(a.terms_.begin()->second);
    if (!s0)
        throw NoRootError("leading coefficient " + to_string(a.terms_.begin()->second) +
                          " is not the square of a rational");
    Int top = top_lattice_index(D, a.trunc_);
    long long M = static_cast<long long>(top - k0);
    const Rational c0 = a.terms_.begin()->second;
    // u_j = (a_{k0+j}/c0) for j >= 1; w = sqrt(1 + u) by the coefficient
    // recurrence 2 w_m = u_m - sum_{0<j<m} w_j w_{m-j}.
    std::vector<Rational> u(static_cast<size_t>(M) + 1), w(static_cast<size_t>(M) + 1);
    for (long long j = 1; j <= M; ++j) {
        auto it = a.terms_.find(k0 + j);
        u[static_cast<size_t>(j)] = it == a.terms_.end() ? Rational(0) : it->second / c0;
    }
    w[0] = 1;
    for (long long m = 1; m <= M; ++m) {
        Rational s = 0;
        for (long long j = 1; j < m; ++j)
            if (w[static_cast<size_t>(j)] != 0)
                s += w[static_cast<size_t>(j)] * w[static_cast<size_t>(m - j)];
        w[static_cast<size_t>(m)] = (u[static_cast<size_t>(m)] - s) / 2;
    }
    Rational T = a.trunc_ - Rational(k0, 2 * D);
    Int e = k0 / 2;
    std::map<Int, Rational> t;
    for (long long m = 0; m <= M; ++m) {
        Rational c = *s0 * w[static_cast<size_t>(m)];
        if (c != 0) t[e + m] = c;
    }
    return FracExpSeries(D, std::move(t), T);
}

FracExpSeries pow_int(const FracExpSeries& a, long long k) {
    if (k < 0) return pow_int(invert(a), -k);
    if (k == 0)
        return FracExpSeries::monomial(1, 0, a.trunc() - a.valuation_or_trunc());
    FracExpSeries result = a;
    FracExpSeries base = a;
    k -= 1;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

FracExpSeries rescale(const FracExpSeries& a, const Rational& s) {
    if (s <= 0) throw DomainError("rescale exponent factor must be positive, got " + to_string(s));
    Int D = a.denom_ * den(s);
    std::map<Int, Rational> t;
    for (const auto& [k, c] : a.terms_) t[k * num(s)] = c;
    return FracExpSeries(D, std::move(t), a.trunc_ * s);
}

FracExpSeries shift(const FracExpSeries& a, const Rational& e) {
    Int D = lcm_int(a.denom_, den(e));
    Int f = D / a.denom_;
    Int off = num(e) * (D / den(e));
    std::map<Int, Rational> t;
    for (const auto& [k, c] : a.terms_) t[k * f + off] = c;
    return FracExpSeries(D, std::move(t), a.trunc_ + e);
}

FracExpSeries scale(const FracExpSeries& a, const Rational& c) {
    std::map<Int, Rational> t;
    if (c != 0)
        for (const auto& [k, v] : a.terms_) t[k] = c * v;
    return FracExpSeries(a.denom_, std::move(t), a.trunc_);
}

bool agree_on_common_window(const FracExpSeries& a, const FracExpSeries& b) {
    return diff_on_common_window(a, b).empty();
}

std::vector<std::pair<Rational, Rational>> diff_on_common_window(const FracExpSeries& a,
                                                                 const FracExpSeries& b) {
    Rational W = std::min(a.trunc(), b.trunc());
    Int D = lcm_int(a.denom(), b.denom());
    FracExpSeries ra = a.rebased(D), rb = b.rebased(D);
    std::map<Int, Rational> d;
    for (const auto& [k, c] : ra.terms())
        if (exp_below(k, D, W)) d[k] += c;
    for (const auto& [k, c] : rb.terms())
        if (exp_below(k, D, W)) d[k] -= c;
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& [k, c] : d)
        if (c != 0) out.emplace_back(Rational(k, D), c);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical interchange forms.

std::string to_canonical_json(const FracExpSeries& s) {
    FracExpSeries n = s.normalized();
    std::ostringstream o;
    o << "{\"denominator\": " << n.denom().str()
      << ", \"truncation\": {\"num\": " << num(n.trunc()).str()
      << ", \"den\": " << den(n.trunc()).str() << "}, \"terms\": [";
    bool first = true;
    for (const auto& [k, c] : n.terms()) {
        if (!first) o << ", ";
        first = false;
        o << "{\"exp_num\": " << k.str() << ", \"exp_den\": " << n.denom().str()
          << ", \"num\": " << num(c).str() << ", \"den\": " << den(c).str() << "}";
    }
    o << "]}";
    return o.str();
}

std::string to_csv(const FracExpSeries& s) {
    FracExpSeries n = s.normalized();
    std::ostringstream o;
    for (const auto& [k, c] : n.terms())
        o << k.str() << "," << n.denom().str() << "," << num(c).str() << ","
          << den(c).str() << "\n";
    return o.str();
}

std::string to_text(const FracExpSeries& s) {
    FracExpSeries n = s.normalized();
    std::vector<std::pair<std::string, std::string>> rows;
    size_t width = 0;
    for (const auto& [k, c] : n.terms()) {
        std::string e = n.denom() == 1 ? k.str() : k.str() + "/" + n.denom().str();
        rows.emplace_back("q^(" + e + ")", to_string(c));
        width = std::max(width, rows.back().first.size());
    }
    std::ostringstream o;
    o << "# exponents below " << to_string(n.trunc()) << " (" << rows.size()
      << " terms)\n";
    for (const auto& [e, c] : rows)
        o << e << std::string(width - e.size() + 2, ' ') << c << "\n";
    return o.str();
}

// ---------------------------------------------------------------------------
// Parser for the canonical JSON form.  Hand-rolled so coefficients larger
// than any machine integer survive the round trip exactly.

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    explicit Cursor(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("invalid canonical series JSON at offset " +
                          std::to_string(i) + ": " + why);
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        return s[i];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i;
    }
    bool consume_if(char c) {
        if (i < s.size() && peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string key() {
        expect('"');
        size_t start = i;
        while (i < s.size() && s[i] != '"') ++i;
        if (i >= s.size()) fail("unterminated key");
        std::string k = s.substr(start, i - start);
        ++i;
        expect(':');
        return k;
    }
    Int integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected an integer");
        return Int(s.substr(start, i - start));
    }
};

} // namespace

FracExpSeries from_canonical_json(const std::string& text) {
    Cursor c(text);
    std::optional<Int> denominator;
    std::optional<Rational> trunc;
    std::vector<std::pair<Rational, Rational>> terms;
    bool saw_terms = false;

    c.expect('{');
    if (!c.consume_if('}')) {
        do {
            std::string k = c.key();
            if (k == "denominator") {
                denominator = c.integer();
            } else if (k == "truncation") {
                std::optional<Int> tn, td;
                c.expect('{');
                do {
                    std::string tk = c.key();
                    if (tk == "num") tn = c.integer();
                    else if (tk == "den") td = c.integer();
                    else c.fail("unknown truncation field \"" + tk + "\"");
                } while (c.consume_if(','));
                c.expect('}');
                if (!tn || !td) c.fail("truncation needs num and den");
                if (*td <= 0) c.fail("truncation denominator must be positive");
                trunc = Rational(*tn, *td);
            } else if (k == "terms") {
                saw_terms = true;
                c.expect('[');
                if (!c.consume_if(']')) {
                    do {
                        std::optional<Int> en, ed, cn, cd;
                        c.expect('{');
                        do {
                            std::string tk = c.key();
                            if (tk == "exp_num") en = c.integer();
                            else if (tk == "exp_den") ed = c.integer();
                            else if (tk == "num") cn = c.integer();
                            else if (tk == "den") cd = c.integer();
                            else c.fail("unknown term field \"" + tk + "\"");
                        } while (c.consume_if(','));
                        c.expect('}');
                        if (!en || !ed || !cn || !cd) c.fail("term needs exp_num, exp_den, num, den");
                        if (*ed <= 0) c.fail("exp_den must be positive");
                        if (*cd <= 0) c.fail("coefficient denominator must be positive");
                        if (*cn == 0) c.fail("zero coefficients may not be stored");
                        terms.emplace_back(Rational(*en, *ed), Rational(*cn, *cd));
                    } while (c.consume_if(','));
                    c.expect(']');
                }
            } else {
                c.fail("unknown field \"" + k + "\"");
            }
        } while (c.consume_if(','));
        c.expect('}');
    }
    c.skip_ws();
    if (c.i != text.size()) c.fail("trailing data");
    if (!denominator || !trunc || !saw_terms)
        throw DomainError("invalid canonical series JSON: denominator, truncation and terms are all required");
    if (*denominator <= 0)
        throw DomainError("invalid canonical series JSON: denominator must be positive");

    for (size_t a = 0; a < terms.size(); ++a)
        for (size_t b = a + 1; b < terms.size(); ++b)
            if (terms[a].first == terms[b].first)
                throw DomainError("invalid canonical series JSON: duplicate exponent " +
                                  to_string(terms[a].first));
    for (const auto& [e, coeff] : terms)
        if (e >= *trunc)
            throw DomainError("invalid canonical series JSON: exponent " + to_string(e) +
                              " is not below the truncation " + to_string(*trunc));
    return FracExpSeries::from_terms(terms, *trunc);
}

} // namespace vwq
