#pragma once

#include <vector>

#include "qjs/printing.hpp"
#include "qjs/qcore.hpp"
#include "qjs/ratfunc.hpp"
#include "qjs/rings.hpp"

namespace qjs {

// Per-family base-variable convention: all operator-level arithmetic runs in
// Q(v) with q = v^D, so that half-integer q-powers (Stieltjes-Wigert) are
// Laurent monomials in v.
struct QContext {
    int D = 1;

    RationalFunction from_lq(const LQ& f) const {
        return RationalFunction(f.substitute_power(D).renamed("v"));
    }
    RationalFunction q_power(long e) const {
        return RationalFunction(LQ::variable("v", D * e));
    }
    RationalFunction v_power(long e) const {
        return RationalFunction(LQ::variable("v", e));
    }
    RationalFunction bracket(long n) const { return from_lq(q_bracket(n)); }
    RationalFunction bracket_inv(long n) const { return from_lq(q_bracket_inv(n)); }
    RationalFunction factorial(long n) const { return from_lq(q_factorial(n)); }
    RationalFunction rising(long a, long n) const { return from_lq(q_rising(a, n)); }
};

// Polynomial in x over Q(v), dense with trimmed leading zeros.
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(RationalFunction c) { set(0, std::move(c)); }
    static XPolynomial variable() {
        XPolynomial p;
        p.set(1, ring_one<RationalFunction>());
        return p;
    }
    static XPolynomial constant(RationalFunction c) { return XPolynomial(std::move(c)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool zero() const { return c_.empty(); }
    RationalFunction coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i]
                                                         : ring_zero<RationalFunction>();
    }
    void set(int i, RationalFunction c) {
        if (i >= static_cast<int>(c_.size())) {
            if (c.zero()) return;
            c_.resize(i + 1, ring_zero<RationalFunction>());
        }
        c_[i] = std::move(c);
        trim();
    }
    bool monic() const {
        return !c_.empty() && c_.back() == ring_one<RationalFunction>();
    }

    friend XPolynomial operator+(const XPolynomial& f, const XPolynomial& g) {
        XPolynomial r;
        r.c_.resize(std::max(f.c_.size(), g.c_.size()), ring_zero<RationalFunction>());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f.coeff(i) + g.coeff(i);
        r.trim();
        return r;
    }
    friend XPolynomial operator-(const XPolynomial& f, const XPolynomial& g) {
        XPolynomial r;
        r.c_.resize(std::max(f.c_.size(), g.c_.size()), ring_zero<RationalFunction>());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f.coeff(i) - g.coeff(i);
        r.trim();
        return r;
    }
    friend XPolynomial operator*(const XPolynomial& f, const XPolynomial& g) {
        XPolynomial r;
        if (f.zero() || g.zero()) return r;
        r.c_.assign(f.c_.size() + g.c_.size() - 1, ring_zero<RationalFunction>());
        for (size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].zero()) continue;
            for (size_t j = 0; j < g.c_.size(); ++j)
                r.c_[i + j] += f.c_[i] * g.c_[j];
        }
        r.trim();
        return r;
    }
    friend XPolynomial operator*(const RationalFunction& s, const XPolynomial& f) {
        XPolynomial r;
        if (s.zero()) return r;
        r.c_ = f.c_;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }
    friend XPolynomial operator*(const XPolynomial& f, const RationalFunction& s) {
        return s * f;
    }
    friend XPolynomial operator-(const XPolynomial& f) {
        XPolynomial r = f;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    XPolynomial& operator+=(const XPolynomial& g) { return *this = *this + g; }
    XPolynomial& operator-=(const XPolynomial& g) { return *this = *this - g; }
    XPolynomial& operator*=(const XPolynomial& g) { return *this = *this * g; }

    friend bool operator==(const XPolynomial& f, const XPolynomial& g) {
        return f.c_ == g.c_;
    }
    friend bool operator!=(const XPolynomial& f, const XPolynomial& g) { return !(f == g); }

private:
    void trim() {
        while (!c_.empty() && c_.back().zero()) c_.pop_back();
    }
    std::vector<RationalFunction> c_;
};

inline XPolynomial x_monomial(const RationalFunction& c, int e) {
    XPolynomial p;
    p.set(e, c);
    return p;
}

// Jackson derivative on coefficients: D_q x^n = [n]_q x^{n-1}.
inline XPolynomial dq(const QContext& ctx, const XPolynomial& f, bool inverse = false) {
    XPolynomial r;
    for (int i = 1; i <= f.degree(); ++i) {
        RationalFunction b = inverse ? ctx.bracket_inv(i) : ctx.bracket(i);
        r.set(i - 1, b * f.coeff(i));
    }
    return r;
}

inline XPolynomial dq_pow(const QContext& ctx, XPolynomial f, int k, bool inverse = false) {
    for (int i = 0; i < k; ++i) f = dq(ctx, f, inverse);
    return f;
}

// f(x) -> f(q^m x)
inline XPolynomial dilate(const QContext& ctx, const XPolynomial& f, long m) {
    XPolynomial r;
    for (int i = 0; i <= f.degree(); ++i) r.set(i, ctx.q_power(m * i) * f.coeff(i));
    return r;
}

inline std::string render(const XPolynomial& f) {
    if (f.zero()) return "0";
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).zero()) continue;
        std::string cs = render(f.coeff(i));
        std::string ps = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        std::string term;
        if (ps.empty()) term = printdetail::needs_parens(cs) ? "(" + cs + ")" : cs;
        else if (cs == "1") term = ps;
        else if (cs == "-1") term = "-" + ps;
        else if (printdetail::needs_parens(cs) || cs.find('/') != std::string::npos)
            term = "(" + cs + ")*" + ps;
        else term = cs + "*" + ps;
        out = printdetail::join_terms(std::move(out), term);
    }
    return out;
}

}  // namespace qjs
