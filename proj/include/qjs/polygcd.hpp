#pragma once

#include <vector>

#include "qjs/laurent.hpp"
#include "qjs/rational.hpp"

// Dense univariate polynomial helpers over Q (index = exponent) backing
// RationalFunction normalization: divmod, exact division, and a primitive-PRS
// gcd that does the Euclidean walk on integer-primitive polynomials to keep
// coefficients small.

namespace qjs::polydetail {

using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline void trim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline QPoly qpoly_from_laurent(const Laurent<Rational>& f) {
    QPoly p;
    if (f.zero()) return p;
    if (f.min_exp() < 0)
        throw InvalidSubstitutionError("qpoly_from_laurent: negative exponent");
    p.assign(static_cast<size_t>(f.max_exp()) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) p[static_cast<size_t>(e)] = c;
    return p;
}

inline Laurent<Rational> laurent_from_qpoly(const QPoly& p, const std::string& var) {
    Laurent<Rational> f(var);
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) f.set(static_cast<long>(i), p[i]);
    return f;
}

// Quotient and remainder of a by b over Q; b nonzero.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    if (b.empty()) throw DivisionByZeroError("poly divmod: zero divisor");
    QPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() >= b.size() && a.back().is_zero()) trim(a);
    }
    trim(q);
    return {q, a};
}

inline QPoly divexact(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw DivisionByZeroError("poly divexact: nonzero remainder");
    return q;
}

inline ZPoly primitive_integer(const QPoly& p) {
    Integer l = 1;
    for (const auto& c : p) l = lcm(l, denominator(c));
    ZPoly z(p.size());
    for (size_t i = 0; i < p.size(); ++i) z[i] = numerator(p[i]) * (l / denominator(p[i]));
    Integer g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g > 1)
        for (auto& c : z) c /= g;
    return z;
}

inline void strip_content(ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
}

// Pseudo-remainder prem(a,b) = lc(b)^(deg a - deg b + 1) a mod b, over Z.
inline ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const Integer& lead = b.back();
    long scale = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    while (a.size() >= b.size()) {
        Integer f = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        --scale;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    for (; scale > 0; --scale)
        for (auto& c : a) c *= lead;
    return a;
}

// Coprimality fast path: degree of gcd modulo a word-size prime, or -1 when
// the reduction is unusable (a denominator or leading coefficient vanishes).
namespace modp {

inline constexpr uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

inline uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % kPrime);
}
inline uint64_t power(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}
inline uint64_t inv(uint64_t a) { return power(a, kPrime - 2); }

inline bool reduce(const QPoly& p, std::vector<uint64_t>& out) {
    out.assign(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        uint64_t den = static_cast<uint64_t>(denominator(p[i]) % kPrime);
        if (den == 0) return false;
        Integer nm = numerator(p[i]) % Integer(kPrime);
        if (nm < 0) nm += Integer(kPrime);
        out[i] = mul(static_cast<uint64_t>(nm), inv(den));
    }
    if (!out.empty() && out.back() == 0) return false;  // degree dropped
    return true;
}

}  // namespace modp

// Monic gcd over Q: mod-p coprimality fast path, subresultant PRS fallback.
inline QPoly gcd_monic(const QPoly& fa, const QPoly& fb) {
    if (fa.empty() || fb.empty()) {
        QPoly g = fa.empty() ? fb : fa;
        if (g.empty()) return g;
        Rational lead = g.back();
        for (auto& c : g) c /= lead;
        return g;
    }
    if (fa.size() == 1 || fb.size() == 1) return QPoly{Rational(1)};
    {
        std::vector<uint64_t> a, b;
        if (modp::reduce(fa, a) && modp::reduce(fb, b)) {
            if (a.size() < b.size()) a.swap(b);
            while (!b.empty()) {
                uint64_t linv = modp::inv(b.back());
                while (a.size() >= b.size()) {
                    uint64_t f = modp::mul(a.back(), linv);
                    size_t shift = a.size() - b.size();
                    for (size_t i = 0; i < b.size(); ++i) {
                        uint64_t t = modp::mul(f, b[i]);
                        a[shift + i] = a[shift + i] >= t ? a[shift + i] - t
                                                         : a[shift + i] + modp::kPrime - t;
                    }
                    while (!a.empty() && a.back() == 0) a.pop_back();
                }
                a.swap(b);
            }
            // gcd over Q divides the (monic-normalized) gcd mod p; degree 0
            // mod p certifies coprimality over Q
            if (a.size() == 1) return QPoly{Rational(1)};
        }
    }
    // subresultant PRS over Z
    ZPoly a = primitive_integer(fa), b = primitive_integer(fb);
    if (a.size() < b.size()) a.swap(b);
    Integer g = 1, h = 1;
    while (true) {
        long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        ZPoly r = pseudo_rem(a, b);
        if (r.empty()) break;
        if (r.size() == 1) {
            b = {Integer(1)};
            break;
        }
        a.swap(b);  // a <- old b
        Integer divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        b = std::move(r);
        for (auto& c : b) c /= divisor;
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer num = g;
            for (long i = 1; i < delta; ++i) num *= g;
            Integer den = h;
            for (long i = 2; i < delta; ++i) den *= h;
            h = num / den;
        }
    }
    strip_content(b);
    QPoly out(b.size());
    Rational lead(b.back());
    for (size_t i = 0; i < b.size(); ++i) out[i] = Rational(b[i]) / lead;
    return out;
}

}  // namespace qjs::polydetail
