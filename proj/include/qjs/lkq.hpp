#pragma once

#include <memory>

#include "qjs/family.hpp"
#include "qjs/qoperator.hpp"
#include "qjs/triangles.hpp"

namespace qjs {

// L_q = Phi(x) D_q o D_{q^{-1}} - Psi(x) D_{q^{-1}}
inline QDiffOperator build_Lq(const std::shared_ptr<QClassicalFamily>& fam) {
    QContext ctx = fam->ctx;
    XPolynomial phi = fam->Phi, psi = fam->Psi;
    return QDiffOperator([ctx, phi, psi](const XPolynomial& f) {
        XPolynomial g = dq(ctx, f, true);
        return phi * dq(ctx, g, false) - psi * g;
    });
}

// The even order operator of the expansion theorem:
//   L_{k;q}[y](x) = sum_{nu=0}^{k} Lambda_{k,nu}(x) (D_{q^{-1}}^{k-nu} D_q^k y)(q^{-nu} x)
// with Lambda_{k,nu} = q^{-(k-nu)(nu+1)}/([nu]_q! [k-nu]_q!)
//                      (prod_{s=1}^{nu} chi_s^{[k-s]})
//                      (prod_{s=0}^{k-nu-1} q^{-s deg Phi} Phi(q^s x)) D_q^{k-nu} P_k.
// The denominator [nu]_q! [k-nu]_q! (and not [k-nu]_q! alone) is forced by
// the eigen equation L_{k;q}[P_n] = Xi_n(k;q) P_n: the functional identity
// D_q^nu(u0^{[k]}) carries D_q^{k-nu}P_k / [k]_q! = P_nu^{[k-nu]} / [nu]_q!.
inline QDiffOperator build_Lkq(const std::shared_ptr<QClassicalFamily>& fam, int k) {
    if (k < 0) throw InputError("build_Lkq: negative order");
    if (k == 0) return QDiffOperator::identity();
    QContext ctx = fam->ctx;
    std::vector<XPolynomial> lambda(k + 1);
    for (int nu = 0; nu <= k; ++nu) {
        RationalFunction c = ctx.q_power(-static_cast<long>(k - nu) * (nu + 1)) /
                             (ctx.factorial(k - nu) * ctx.factorial(nu));
        for (int s = 1; s <= nu; ++s) c *= fam->chi_deriv(s, k - s);
        XPolynomial prod(c);
        for (int s = 0; s <= k - nu - 1; ++s) prod *= fam->phi_k(s);
        lambda[nu] = prod * dq_pow(ctx, fam->pn(k), k - nu);
    }
    int K = k;
    return QDiffOperator([ctx, lambda, K](const XPolynomial& f) {
        XPolynomial g = dq_pow(ctx, f, K);
        XPolynomial out;
        for (int nu = 0; nu <= K; ++nu) {
            XPolynomial h = dq_pow(ctx, g, K - nu, true);
            out += lambda[nu] * dilate(ctx, h, -nu);
        }
        return out;
    });
}

// S_{q^{-1}}(k,j) and friends mapped into Q(v).
inline RationalFunction qstirling_inv_in_v(const QContext& ctx, Kind kind, int k, int j) {
    return ctx.from_lq(qstirling(kind, k, j).substitute_power(-1));
}

// JS_k^j(z; q^{-1}) / Jc_k^j(z; q^{-1}) evaluated at a z value in Q(v).
inline RationalFunction qjs_inv_at(const QContext& ctx, Kind kind, int k, int j,
                                   const RationalFunction& z) {
    ZQ entry = qjs_invert_q(q_jacobi_stirling(kind, k, j));
    RationalFunction acc;
    for (const auto& [i, c] : entry.terms()) acc += ctx.from_lq(c) * z.pow(i);
    return acc;
}

// Expansion of L_q^k in the L_{j;q}; the two branches of the theorem.
inline QDiffOperator power_expansion_rhs(const std::shared_ptr<QClassicalFamily>& fam,
                                         int k) {
    QContext ctx = fam->ctx;
    QDiffOperator acc = QDiffOperator::multiply(XPolynomial());
    for (int j = 0; j <= k; ++j) {
        RationalFunction c;
        if (fam->deg_phi() == 2) {
            c = qjs_inv_at(ctx, Kind::Second, k, j, fam->z_value()) *
                ctx.q_power(static_cast<long>(j) * (j + 1) / 2 - k);
        } else {
            c = qstirling_inv_in_v(ctx, Kind::Second, k, j) *
                ctx.q_power((fam->deg_phi() - 1) * static_cast<long>(j) * (j - 1) / 2) *
                (-fam->psi_prime0()).pow(k - j);
        }
        if (c.zero()) continue;
        acc = acc + c * build_Lkq(fam, j);
    }
    return acc;
}

// Reciprocal expansion of L_{k;q} in powers of L_q. The first-kind numbers
// enter with their expansion signs (-1)^{k-j} c_{q^{-1}}(k,j), resp.
// (-1)^{k-j} Jc_k^j(z;q^{-1}).
inline QDiffOperator reciprocal_expansion_rhs(const std::shared_ptr<QClassicalFamily>& fam,
                                              int k) {
    QContext ctx = fam->ctx;
    QDiffOperator lq = build_Lq(fam);
    QDiffOperator acc = QDiffOperator::multiply(XPolynomial());
    for (int j = 0; j <= k; ++j) {
        RationalFunction c;
        if (fam->deg_phi() == 2) {
            c = qjs_inv_at(ctx, Kind::First, k, j, fam->z_value()) *
                ctx.q_power(j - static_cast<long>(k) * (k + 1) / 2);
        } else {
            c = qstirling_inv_in_v(ctx, Kind::First, k, j) *
                ctx.q_power((1 - fam->deg_phi()) * static_cast<long>(k) * (k - 1) / 2) *
                (-fam->psi_prime0()).pow(k - j);
        }
        if ((k - j) % 2 == 1) c = -c;
        if (c.zero()) continue;
        acc = acc + c * operator_pow(lq, j);
    }
    return acc;
}

enum class ExpansionDirection { PowerToLkq, LkqToPower };

// Exact agreement of both sides on x^0..x^M.
inline bool expansion_check(const std::shared_ptr<QClassicalFamily>& fam, int k,
                            ExpansionDirection dir, int M, std::string* witness = nullptr) {
    if (dir == ExpansionDirection::PowerToLkq) {
        QDiffOperator lhs = operator_pow(build_Lq(fam), k);
        return operators_agree(lhs, power_expansion_rhs(fam, k), M, witness);
    }
    return operators_agree(build_Lkq(fam, k), reciprocal_expansion_rhs(fam, k), M, witness);
}

// Scalar eigenvalue expansions:
//   (chi_n)^k = sum_j S_{q^{-1}}(k,j) q^{(degPhi-1)j(j-1)/2} (-Psi'(0))^{k-j} Xi_n(j;q)
// (deg Phi < 2), and the JS version for deg Phi = 2; plus the reciprocal with
// the signed first-kind numbers.
inline bool scalar_expansion_check(const std::shared_ptr<QClassicalFamily>& fam, int n,
                                   int k) {
    QContext ctx = fam->ctx;
    RationalFunction lhs = fam->chi(n).pow(k);
    RationalFunction rhs;
    for (int j = 0; j <= k; ++j) {
        if (fam->deg_phi() == 2) {
            rhs += qjs_inv_at(ctx, Kind::Second, k, j, fam->z_value()) *
                   ctx.q_power(static_cast<long>(j) * (j + 1) / 2 - k) * fam->xi_product(n, j);
        } else {
            rhs += qstirling_inv_in_v(ctx, Kind::Second, k, j) *
                   ctx.q_power((fam->deg_phi() - 1) * static_cast<long>(j) * (j - 1) / 2) *
                   (-fam->psi_prime0()).pow(k - j) * fam->xi_product(n, j);
        }
    }
    if (lhs != rhs) return false;
    RationalFunction lhs2 = fam->xi_product(n, k);
    RationalFunction rhs2;
    for (int j = 0; j <= k; ++j) {
        RationalFunction c;
        if (fam->deg_phi() == 2) {
            c = qjs_inv_at(ctx, Kind::First, k, j, fam->z_value()) *
                ctx.q_power(j - static_cast<long>(k) * (k + 1) / 2);
        } else {
            c = qstirling_inv_in_v(ctx, Kind::First, k, j) *
                ctx.q_power((1 - fam->deg_phi()) * static_cast<long>(k) * (k - 1) / 2) *
                (-fam->psi_prime0()).pow(k - j);
        }
        if ((k - j) % 2 == 1) c = -c;
        rhs2 += c * fam->chi(n).pow(j);
    }
    return lhs2 == rhs2;
}

}  // namespace qjs
