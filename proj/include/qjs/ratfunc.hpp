#pragma once

#include <string>
#include <utility>

#include "qjs/laurent.hpp"
#include "qjs/polygcd.hpp"

namespace qjs {

// Normalized quotient of Laurent polynomials over Q in one variable.
// Canonical form: the denominator is a genuine polynomial (no negative
// exponents) with nonzero constant term, monic; after clearing the
// numerator's Laurent shift the polynomial parts are coprime. Equality of
// values then coincides with structural equality.
class RationalFunction {
public:
    using L = Laurent<Rational>;

    RationalFunction() : num_(), den_(L::constant(1)) {}
    RationalFunction(const Rational& c) : num_(L::constant(c)), den_(L::constant(1)) {
        if (is_zero(c)) num_ = L();
    }
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    RationalFunction(const L& num) : num_(num), den_(L::constant(1)) {}
    RationalFunction(L num, L den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction variable(const std::string& var, long e = 1) {
        return RationalFunction(L::variable(var, e));
    }

    const L& num() const { return num_; }
    const L& den() const { return den_; }
    bool zero() const { return num_.zero(); }
    bool den_is_one() const {
        return den_.terms().size() == 1 && den_.min_exp() == 0 && is_one(den_.coeff(0));
    }

    // Reduced arithmetic: operands are canonical, so cross-cancelling with
    // gcds of the small parts keeps every intermediate reduced (Henrici).
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.zero()) return b;
        if (b.zero()) return a;
        if (a.den_is_one() && b.den_is_one()) return from_reduced(a.num_ + b.num_, a.den_);
        L g = poly_gcd(a.den_, b.den_);
        if (g.max_exp() == 0) {
            return from_reduced_checked(a.num_ * b.den_ + b.num_ * a.den_,
                                        a.den_ * b.den_);
        }
        L dena = divide_poly(a.den_, g);
        L denb = divide_poly(b.den_, g);
        L t = a.num_ * denb + b.num_ * dena;
        if (t.zero()) return RationalFunction();
        long s = t.min_exp();
        L h = poly_gcd(s != 0 ? t.shifted(-s) : t, g);
        if (h.max_exp() > 0) {
            t = divide_laurent(t, h);
            g = divide_poly(g, h);
        }
        return from_reduced(t, dena * denb * g);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.zero() || b.zero()) return RationalFunction();
        if (a.den_is_one() && b.den_is_one()) return from_reduced(a.num_ * b.num_, a.den_);
        L g1 = poly_gcd(num_poly_part(a), b.den_);
        L g2 = poly_gcd(num_poly_part(b), a.den_);
        L num = divide_laurent(a.num_, g1) * divide_laurent(b.num_, g2);
        L den = divide_poly(a.den_, g2) * divide_poly(b.den_, g1);
        return from_reduced(num, den);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.zero()) throw DivisionByZeroError("RationalFunction: division by zero");
        return a * b.reciprocal();
    }

    RationalFunction reciprocal() const {
        if (zero()) throw DivisionByZeroError("RationalFunction: reciprocal of zero");
        long s = num_.min_exp();
        L p = s != 0 ? num_.shifted(-s) : num_;
        Rational lead = p.coeff(p.max_exp());
        Rational inv = Rational(1) / lead;
        RationalFunction r;
        r.num_ = (den_ * inv).shifted(-s);
        r.den_ = p * inv;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction pow(long e) const {
        if (e >= 0) return ring_pow(*this, e);
        return ring_one<RationalFunction>() / ring_pow(*this, -e);
    }

    Rational evaluate_at(const Rational& point) const {
        Rational d = evaluate(den_, point);
        if (d.is_zero()) throw EvaluationError("RationalFunction: denominator vanishes at point");
        return evaluate(num_, point) / d;
    }

private:
    // monic gcd of the polynomial parts (both inputs polynomials with
    // nonzero constant term, or constants)
    static L poly_gcd(const L& a, const L& b) {
        if (a.zero() || b.zero() || a.max_exp() == 0 || b.max_exp() == 0)
            return L::constant(1);
        auto g = polydetail::gcd_monic(polydetail::qpoly_from_laurent(a),
                                       polydetail::qpoly_from_laurent(b));
        return polydetail::laurent_from_qpoly(g, a.var().empty() ? b.var() : a.var());
    }
    static L divide_poly(const L& a, const L& g) {
        if (g.max_exp() == 0) return a;
        return polydetail::laurent_from_qpoly(
            polydetail::divexact(polydetail::qpoly_from_laurent(a),
                                 polydetail::qpoly_from_laurent(g)),
            a.var());
    }
    // divide a Laurent numerator by a polynomial with nonzero constant term
    static L divide_laurent(const L& a, const L& g) {
        if (a.zero() || g.max_exp() == 0) return a;
        long s = a.min_exp();
        L p = s != 0 ? a.shifted(-s) : a;
        L q = divide_poly(p, g);
        return s != 0 ? q.shifted(s) : q;
    }
    static L num_poly_part(const RationalFunction& a) {
        if (a.num_.zero()) return L();
        long s = a.num_.min_exp();
        return s != 0 ? a.num_.shifted(-s) : a.num_;
    }
    // build from parts already known to be coprime, fixing monicity only
    static RationalFunction from_reduced(L num, L den) {
        RationalFunction r;
        if (num.zero()) return r;
        Rational lead = den.coeff(den.max_exp());
        if (!is_one(lead)) {
            Rational inv = Rational(1) / lead;
            num = num * inv;
            den = den * inv;
        }
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }
    // like from_reduced but the parts may still share a factor
    static RationalFunction from_reduced_checked(L num, L den) {
        return RationalFunction(std::move(num), std::move(den));
    }

    void normalize() {
        if (den_.zero()) throw DivisionByZeroError("RationalFunction: zero denominator");
        if (num_.zero()) {
            num_ = L();
            den_ = L::constant(1);
            return;
        }
        long sd = den_.min_exp();
        if (sd != 0) {
            den_ = den_.shifted(-sd);
            num_ = num_.shifted(-sd);
        }
        long sn = num_.min_exp();
        L p = sn != 0 ? num_.shifted(-sn) : num_;
        if (den_.max_exp() > 0 && p.max_exp() > 0) {
            auto dp = polydetail::qpoly_from_laurent(p);
            auto dd = polydetail::qpoly_from_laurent(den_);
            auto g = polydetail::gcd_monic(dp, dd);
            if (g.size() > 1) {
                p = polydetail::laurent_from_qpoly(polydetail::divexact(dp, g), p.var());
                den_ = polydetail::laurent_from_qpoly(polydetail::divexact(dd, g), den_.var());
            }
        }
        Rational lead = den_.coeff(den_.max_exp());
        if (!is_one(lead)) {
            den_ = den_ * (Rational(1) / lead);
            p = p * (Rational(1) / lead);
        }
        num_ = sn != 0 ? p.shifted(sn) : p;
    }

    L num_;
    L den_;
};

template <>
struct ring_traits<RationalFunction> {
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Rational(1)); }
};

inline bool is_zero(const RationalFunction& f) { return f.zero(); }

// Cross-multiplication equality a1/a2 = b1/b2 (the invariant check that the
// canonical form must agree with).
inline bool cross_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace qjs
