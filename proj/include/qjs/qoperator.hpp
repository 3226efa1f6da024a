#pragma once

#include <functional>
#include <memory>

#include "qjs/xpoly.hpp"

namespace qjs {

// Opaque linear map on x-polynomials, assembled from multiplication, the
// Jackson pair D_q / D_{q^{-1}}, and dilations x -> q^m x. Operators are
// extensional: identities about them are certified by application to the
// monomial basis up to a declared degree bound.
class QDiffOperator {
public:
    using Fn = std::function<XPolynomial(const XPolynomial&)>;

    QDiffOperator() : fn_([](const XPolynomial& f) { return f; }) {}
    explicit QDiffOperator(Fn fn) : fn_(std::move(fn)) {}

    XPolynomial operator()(const XPolynomial& f) const { return fn_(f); }
    XPolynomial apply(const XPolynomial& f) const { return fn_(f); }

    static QDiffOperator identity() { return QDiffOperator(); }
    static QDiffOperator multiply(XPolynomial p) {
        return QDiffOperator([p = std::move(p)](const XPolynomial& f) { return p * f; });
    }
    static QDiffOperator jackson(QContext ctx, bool inverse = false) {
        return QDiffOperator([ctx, inverse](const XPolynomial& f) {
            return dq(ctx, f, inverse);
        });
    }
    static QDiffOperator dilation(QContext ctx, long m) {
        return QDiffOperator([ctx, m](const XPolynomial& f) { return dilate(ctx, f, m); });
    }

    // composition: (a*b)(f) = a(b(f))
    friend QDiffOperator operator*(const QDiffOperator& a, const QDiffOperator& b) {
        return QDiffOperator(
            [a, b](const XPolynomial& f) { return a.fn_(b.fn_(f)); });
    }
    friend QDiffOperator operator+(const QDiffOperator& a, const QDiffOperator& b) {
        return QDiffOperator(
            [a, b](const XPolynomial& f) { return a.fn_(f) + b.fn_(f); });
    }
    friend QDiffOperator operator-(const QDiffOperator& a, const QDiffOperator& b) {
        return QDiffOperator(
            [a, b](const XPolynomial& f) { return a.fn_(f) - b.fn_(f); });
    }
    friend QDiffOperator operator*(const RationalFunction& s, const QDiffOperator& a) {
        return QDiffOperator([s, a](const XPolynomial& f) { return s * a.fn_(f); });
    }

private:
    Fn fn_;
};

// k-fold composition; op^0 is the identity.
inline QDiffOperator operator_pow(const QDiffOperator& op, int k) {
    if (k < 0) throw InputError("operator_pow: negative power");
    QDiffOperator acc = QDiffOperator::identity();
    for (int i = 0; i < k; ++i) acc = op * acc;
    return acc;
}

// Exact agreement of two operators on x^0..x^M.
inline bool operators_agree(const QDiffOperator& a, const QDiffOperator& b, int M,
                            std::string* witness = nullptr) {
    for (int m = 0; m <= M; ++m) {
        XPolynomial xm = x_monomial(ring_one<RationalFunction>(), m);
        XPolynomial fa = a(xm), fb = b(xm);
        if (fa != fb) {
            if (witness)
                *witness = "operators differ on x^" + std::to_string(m) + ": " + render(fa) +
                           " vs " + render(fb);
            return false;
        }
    }
    return true;
}

// D_q^n (fg) = sum_k [n over k]_q (D_q^{n-k} f)(q^k x) (D_q^k g)(x)
inline bool q_leibniz_check(const QContext& ctx, const XPolynomial& f, const XPolynomial& g,
                            int n) {
    XPolynomial lhs = dq_pow(ctx, f * g, n);
    XPolynomial rhs;
    for (int k = 0; k <= n; ++k)
        rhs += ctx.from_lq(q_binomial(n, k)) *
               (dilate(ctx, dq_pow(ctx, f, n - k), k) * dq_pow(ctx, g, k));
    return lhs == rhs;
}

}  // namespace qjs
