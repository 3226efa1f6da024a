#pragma once

#include "qjs/laurent.hpp"

namespace qjs {

// GCD-free fraction over an arbitrary commutative ring. No normalization:
// equality is cross-multiplication only. Used where the entry ring is nested
// (Newton interpolation sums, Askey-Wilson explicit sums) and a bivariate
// gcd would be needed for canonical forms.
template <class R>
struct Fraction {
    R num = ring_zero<R>();
    R den = ring_one<R>();

    Fraction() = default;
    Fraction(R n) : num(std::move(n)) {}
    Fraction(R n, R d) : num(std::move(n)), den(std::move(d)) {
        if (is_zero(den)) throw DivisionByZeroError("Fraction: zero denominator");
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.num, a.den * b.den);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (is_zero(b.num)) throw DivisionByZeroError("Fraction: division by zero");
        return Fraction(a.num * b.den, a.den * b.num);
    }
    friend Fraction operator-(const Fraction& a) {
        Fraction r = a;
        r.num = ring_zero<R>() - r.num;
        return r;
    }
};

template <class R>
bool cross_equal(const Fraction<R>& a, const Fraction<R>& b) {
    return a.num * b.den == b.num * a.den;
}

template <class R>
bool cross_equal(const Fraction<R>& a, const R& b) {
    return a.num == b * a.den;
}

}  // namespace qjs
