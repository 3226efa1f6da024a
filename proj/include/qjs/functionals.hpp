#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qjs/family.hpp"
#include "qjs/lkq.hpp"

namespace qjs {

// A linear functional on polynomials represented by its exact moment prefix
// (u)_0..(u)_N. Every identity check declares its moment horizon and is
// exact up to it.
struct MomentFunctional {
    std::vector<RationalFunction> m;
    std::string provenance;

    int horizon() const { return static_cast<int>(m.size()) - 1; }

    const RationalFunction& moment(int n) const {
        if (n < 0 || n > horizon())
            throw InputError("moment " + std::to_string(n) + " beyond available prefix (" +
                             std::to_string(horizon()) + ")");
        return m[n];
    }

    // <u, f>
    RationalFunction apply(const XPolynomial& f) const {
        RationalFunction acc;
        for (int i = 0; i <= f.degree(); ++i)
            if (!f.coeff(i).zero()) acc += f.coeff(i) * moment(i);
        return acc;
    }
};

// (D_q u)_n = -[n]_q (u)_{n-1}
inline MomentFunctional functional_dq(const QContext& ctx, const MomentFunctional& u,
                                      bool inverse = false) {
    MomentFunctional r;
    r.provenance = "derived-by-action";
    r.m.resize(u.m.size());
    r.m[0] = ring_zero<RationalFunction>();
    for (size_t n = 1; n < u.m.size(); ++n) {
        RationalFunction b = inverse ? ctx.bracket_inv(static_cast<long>(n))
                                     : ctx.bracket(static_cast<long>(n));
        r.m[n] = -(b * u.m[n - 1]);
    }
    return r;
}

// (g u)_n = <u, g x^n>; the prefix shortens by deg g.
inline MomentFunctional functional_mul(const XPolynomial& g, const MomentFunctional& u) {
    MomentFunctional r;
    r.provenance = "derived-by-action";
    int d = g.degree();
    if (d < 0) {
        r.m.assign(u.m.size(), ring_zero<RationalFunction>());
        return r;
    }
    int len = static_cast<int>(u.m.size()) - d;
    for (int n = 0; n < len; ++n) {
        RationalFunction acc;
        for (int i = 0; i <= d; ++i)
            if (!g.coeff(i).zero()) acc += g.coeff(i) * u.m[n + i];
        r.m.push_back(acc);
    }
    return r;
}

// h_a u for a = q^m: <h_a u, x^n> = q^{mn} (u)_n
inline MomentFunctional functional_dilate(const QContext& ctx, const MomentFunctional& u,
                                          long mexp) {
    MomentFunctional r;
    r.provenance = "derived-by-action";
    r.m.resize(u.m.size());
    for (size_t n = 0; n < u.m.size(); ++n)
        r.m[n] = ctx.q_power(mexp * static_cast<long>(n)) * u.m[n];
    return r;
}

// Moments of the q-classical form from the Pearson equation
// D_q(Phi u0) + Psi u0 = 0: testing against x^n gives
//   (u)_{n+1} (Psi'(0) - [n]_q phi_2) = [n]_q (phi_1 (u)_n + phi_0 (u)_{n-1}) - psi_0 (u)_n.
inline MomentFunctional pearson_moments(const QContext& ctx, const XPolynomial& Phi,
                                        const XPolynomial& Psi, int N) {
    if (Phi.degree() > 2 || Phi.zero() || Psi.degree() != 1)
        throw InputError("pearson_moments: need deg Phi <= 2, deg Psi = 1");
    RationalFunction phi2 = Phi.coeff(2), phi1 = Phi.coeff(1), phi0 = Phi.coeff(0);
    RationalFunction psi1 = Psi.coeff(1), psi0 = Psi.coeff(0);
    MomentFunctional u;
    u.provenance = "pearson-generated";
    u.m.push_back(ring_one<RationalFunction>());
    for (int n = 0; n < N; ++n) {
        RationalFunction pivot = psi1 - ctx.bracket(n) * phi2;
        if (pivot.zero())
            throw DegeneracyError("Pearson pivot vanishes at n=" + std::to_string(n));
        RationalFunction rhs = ctx.bracket(n) * phi1 * u.m[n] - psi0 * u.m[n];
        if (n >= 1) rhs += ctx.bracket(n) * phi0 * u.m[n - 1];
        u.m.push_back(rhs / pivot);
    }
    return u;
}

inline MomentFunctional pearson_moments(const std::shared_ptr<QClassicalFamily>& fam, int N) {
    MomentFunctional u;
    u.provenance = "pearson-generated";
    u.m = fam->moments(N);
    return u;
}

// The Pearson residual <D_q(Phi u) + Psi u, x^n> for 0 <= n <= N.
inline bool pearson_residual_check(const std::shared_ptr<QClassicalFamily>& fam,
                                   const MomentFunctional& u, int N) {
    MomentFunctional t = functional_dq(fam->ctx, functional_mul(fam->Phi, u));
    MomentFunctional s = functional_mul(fam->Psi, u);
    for (int n = 0; n <= N; ++n)
        if (!(t.moment(n) + s.moment(n)).zero()) return false;
    return true;
}

// <u0, P_n P_m> = delta_nm prod_{j<=n} gamma_j.
inline bool orthogonality_check(const std::shared_ptr<QClassicalFamily>& fam, int N,
                                std::string* witness = nullptr) {
    MomentFunctional u0 = pearson_moments(fam, 2 * N + 1);
    RationalFunction norm = ring_one<RationalFunction>();
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) norm *= fam->gamma_n(n);
        for (int m = 0; m <= n; ++m) {
            RationalFunction v = u0.apply(fam->pn(n) * fam->pn(m));
            RationalFunction expect = (m == n) ? norm : ring_zero<RationalFunction>();
            if (v != expect) {
                if (witness)
                    *witness = fam->name + " orthogonality fails at (n,m)=(" +
                               std::to_string(n) + "," + std::to_string(m) + ")";
                return false;
            }
        }
    }
    return true;
}

// <u0, P_n^2> = prod_{j=1}^{n} gamma_j
inline RationalFunction squared_norm(const std::shared_ptr<QClassicalFamily>& fam, int n) {
    RationalFunction acc = ring_one<RationalFunction>();
    for (int j = 1; j <= n; ++j) acc *= fam->gamma_n(j);
    return acc;
}

// prod_{s<k} Phi_s(x)
inline XPolynomial phi_product(const std::shared_ptr<QClassicalFamily>& fam, int k) {
    XPolynomial acc(ring_one<RationalFunction>());
    for (int s = 0; s < k; ++s) acc *= fam->phi_k(s);
    return acc;
}

// zeta_k from the normalization (u0^{[k]})_0 = 1 with
// u0^{[k]} = zeta_k (prod_{s<k} Phi_s) u0.
inline RationalFunction zeta_k(const std::shared_ptr<QClassicalFamily>& fam, int k) {
    if (k == 0) return ring_one<RationalFunction>();
    XPolynomial prod = phi_product(fam, k);
    MomentFunctional u0 = pearson_moments(fam, prod.degree() + 1);
    RationalFunction denom = u0.apply(prod);
    if (denom.zero()) throw DegeneracyError(fam->name + ": (prod Phi_s u0)_0 = 0");
    return ring_one<RationalFunction>() / denom;
}

// u0^{[k]} as a moment prefix of length N+1.
inline MomentFunctional u0_deriv(const std::shared_ptr<QClassicalFamily>& fam, int k, int N) {
    XPolynomial prod = phi_product(fam, k);
    MomentFunctional u0 = pearson_moments(fam, N + prod.degree() + 1);
    MomentFunctional r = functional_mul(prod, u0);
    RationalFunction z = zeta_k(fam, k);
    for (auto& c : r.m) c *= z;
    r.provenance = "derived-by-action";
    return r;
}

// vartheta_n = [n]_q! (prod_{s=1}^{n} chi_s^{[n-s]})^{-1} = [n]_q!/Xi_n(n;q).
// This is the value the Rodrigues formula itself forces (set n = k in the
// even order functional identity, where D_q^n P_n = [n]_q!) and it matches
// (-1)^n <u0,P_n^2> zeta_n / [n]_q!.
inline RationalFunction vartheta_closed(const std::shared_ptr<QClassicalFamily>& fam, int n) {
    RationalFunction prod = ring_one<RationalFunction>();
    for (int s = 1; s <= n; ++s) prod *= fam->chi_deriv(s, n - s);
    return fam->ctx.factorial(n) / prod;
}

// Rodrigues: P_n u0 = vartheta_n D_q^n ((prod_{s<n} Phi_s) u0) on x^0..x^M.
inline bool rodrigues_check(const std::shared_ptr<QClassicalFamily>& fam, int n, int M,
                            std::string* witness = nullptr) {
    XPolynomial prod = phi_product(fam, n);
    MomentFunctional u0 = pearson_moments(fam, M + std::max(prod.degree(), n) + 1);
    MomentFunctional rhs = functional_mul(prod, u0);
    for (int i = 0; i < n; ++i) rhs = functional_dq(fam->ctx, rhs);
    RationalFunction th = vartheta_closed(fam, n);
    MomentFunctional lhs = functional_mul(fam->pn(n), u0);
    for (int j = 0; j <= M; ++j) {
        if (lhs.moment(j) != th * rhs.moment(j)) {
            if (witness)
                *witness = fam->name + " rodrigues fails at n=" + std::to_string(n) +
                           ", moment " + std::to_string(j);
            return false;
        }
    }
    return true;
}

// Even order functional identity:
//   D_q^k ( (prod_{s<k} Phi_s) (D_q^k P_n) u0 ) = Xi_n(k;q) P_n u0  on x^0..x^M.
inline bool even_order_functional_check(const std::shared_ptr<QClassicalFamily>& fam, int n,
                                        int k, int M, std::string* witness = nullptr) {
    XPolynomial g = phi_product(fam, k) * dq_pow(fam->ctx, fam->pn(n), k);
    MomentFunctional u0 = pearson_moments(fam, M + std::max(g.degree(), fam->pn(n).degree()) + 1);
    MomentFunctional lhs = functional_mul(g, u0);
    for (int i = 0; i < k; ++i) lhs = functional_dq(fam->ctx, lhs);
    MomentFunctional pu = functional_mul(fam->pn(n), u0);
    RationalFunction xi = fam->xi_product(n, k);
    for (int j = 0; j <= M; ++j) {
        if (lhs.moment(j) != xi * pu.moment(j)) {
            if (witness)
                *witness = fam->name + " even-order functional fails at (n,k)=(" +
                           std::to_string(n) + "," + std::to_string(k) + "), moment " +
                           std::to_string(j);
            return false;
        }
    }
    return true;
}

// <u_n, P_k> = delta_nk with u_n = <u0,P_n^2>^{-1} P_n u0.
inline bool dual_sequence_check(const std::shared_ptr<QClassicalFamily>& fam, int N,
                                std::string* witness = nullptr) {
    MomentFunctional u0 = pearson_moments(fam, 2 * N + 1);
    for (int n = 0; n <= N; ++n) {
        MomentFunctional un = functional_mul(fam->pn(n), u0);
        RationalFunction norm = squared_norm(fam, n);
        for (int k = 0; k <= N; ++k) {
            RationalFunction v = un.apply(fam->pn(k)) / norm;
            RationalFunction expect =
                n == k ? ring_one<RationalFunction>() : ring_zero<RationalFunction>();
            if (v != expect) {
                if (witness)
                    *witness = fam->name + " dual sequence fails at (n,k)=(" +
                               std::to_string(n) + "," + std::to_string(k) + ")";
                return false;
            }
        }
    }
    return true;
}

// <u0^{[k]}, (P_n^{[k]})^2>
inline RationalFunction deriv_norm(const std::shared_ptr<QClassicalFamily>& fam, int k,
                                   int n) {
    XPolynomial p = fam->pn_deriv(n, k);
    XPolynomial g = phi_product(fam, k) * p * p;
    MomentFunctional u0 = pearson_moments(fam, g.degree() + 1);
    return zeta_k(fam, k) * u0.apply(g);
}

// varpi_n(k, k-nu) both ways: norm-ratio form and product form.
inline bool omega_consistency_check(const std::shared_ptr<QClassicalFamily>& fam, int n,
                                    int k, int nu) {
    QContext ctx = fam->ctx;
    RationalFunction ratio = deriv_norm(fam, k, n) / deriv_norm(fam, k - nu, n + nu);
    RationalFunction lhs = ctx.rising(n + 1, nu) * ratio;
    if (nu % 2 == 1) lhs = -lhs;
    RationalFunction rhs = zeta_k(fam, k) / zeta_k(fam, k - nu);
    for (int s = 1; s <= nu; ++s) {
        XPolynomial pk = fam->phi_k(k - s), sk = fam->psi_k(k - s);
        rhs *= ctx.q_power(-(n + s - 1)) *
               (ctx.bracket(n + s - 1) * pk.coeff(2) - sk.coeff(1));
    }
    return lhs == rhs;
}

// vartheta_n = (-1)^n <u0,P_n^2> zeta_n / [n]_q!, against the closed form.
inline bool vartheta_consistency_check(const std::shared_ptr<QClassicalFamily>& fam, int n) {
    RationalFunction viaZeta =
        squared_norm(fam, n) * zeta_k(fam, n) / fam->ctx.factorial(n);
    if (n % 2 == 1) viaZeta = -viaZeta;
    return viaZeta == vartheta_closed(fam, n);
}

// u0^{[k]} reproduces pearson_moments(Phi_k, Psi_k, .) after normalization.
inline bool u0k_pearson_check(const std::shared_ptr<QClassicalFamily>& fam, int k, int N,
                              std::string* witness = nullptr) {
    MomentFunctional lhs = u0_deriv(fam, k, N);
    MomentFunctional rhs = pearson_moments(fam->ctx, fam->phi_k(k), fam->psi_k(k), N);
    for (int j = 0; j <= N; ++j)
        if (lhs.moment(j) != rhs.moment(j)) {
            if (witness)
                *witness = fam->name + " u0^[k] vs pearson(Phi_k,Psi_k) fails at k=" +
                           std::to_string(k) + ", moment " + std::to_string(j);
            return false;
        }
    return true;
}

// Functional q-Leibniz:
//   D_q^n(f u) = sum_k [n over k]_{q^{-1}} q^{-(n-k)} (D_{q^{-1}}^{n-k} f)(q^{-k} x) (D_q^k u)
inline bool functional_leibniz_check(const std::shared_ptr<QClassicalFamily>& fam,
                                     const XPolynomial& f, int n, int M) {
    QContext ctx = fam->ctx;
    MomentFunctional u0 = pearson_moments(fam, M + f.degree() + n + 1);
    MomentFunctional lhs = functional_mul(f, u0);
    for (int i = 0; i < n; ++i) lhs = functional_dq(ctx, lhs);
    std::vector<RationalFunction> rhs(M + 1, ring_zero<RationalFunction>());
    for (int k = 0; k <= n; ++k) {
        XPolynomial g = dq_pow(ctx, f, n - k, true);
        // g(q^{-k} x)
        g = dilate(ctx, g, -k);
        MomentFunctional du = u0;
        for (int i = 0; i < k; ++i) du = functional_dq(ctx, du);
        MomentFunctional term = functional_mul(g, du);
        RationalFunction c =
            ctx.from_lq(q_binomial(n, k).substitute_power(-1)) * ctx.q_power(-(n - k));
        for (int j = 0; j <= M; ++j) rhs[j] += c * term.moment(j);
    }
    for (int j = 0; j <= M; ++j)
        if (lhs.moment(j) != rhs[j]) return false;
    return true;
}

// D_q(f u) = f(q^{-1} x) (D_q u) + q^{-1} (D_{q^{-1}} f) u
inline bool product_rule_functional_check(const std::shared_ptr<QClassicalFamily>& fam,
                                          const XPolynomial& f, int M) {
    QContext ctx = fam->ctx;
    MomentFunctional u0 = pearson_moments(fam, M + f.degree() + 2);
    MomentFunctional lhs = functional_dq(ctx, functional_mul(f, u0));
    MomentFunctional t1 = functional_mul(dilate(ctx, f, -1), functional_dq(ctx, u0));
    MomentFunctional t2 = functional_mul(dq(ctx, f, true), u0);
    for (int j = 0; j <= M; ++j) {
        RationalFunction rhs = t1.moment(j) + ctx.q_power(-1) * t2.moment(j);
        if (lhs.moment(j) != rhs) return false;
    }
    return true;
}

// P_n^{[1]} is orthogonal with respect to pearson(Phi_1, Psi_1).
inline bool hahn_property_check(const std::shared_ptr<QClassicalFamily>& fam, int N,
                                std::string* witness = nullptr) {
    MomentFunctional u1 = pearson_moments(fam->ctx, fam->phi_k(1), fam->psi_k(1), 2 * N + 1);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m < n; ++m) {
            RationalFunction v = u1.apply(fam->pn_deriv(n, 1) * fam->pn_deriv(m, 1));
            if (!v.zero()) {
                if (witness)
                    *witness = fam->name + " Hahn property fails at (n,m)=(" +
                               std::to_string(n) + "," + std::to_string(m) + ")";
                return false;
            }
        }
    return true;
}

}  // namespace qjs
