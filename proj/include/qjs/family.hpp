#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qjs/xpoly.hpp"

namespace qjs {

// A q-classical MOPS descriptor: the Pearson pair (Phi, Psi) with Phi monic
// of degree <= 2 and deg Psi = 1, plus the three-term recurrence data
// (beta_n, gamma_{n+1}). That the two describe the same sequence is the
// master consistency invariant, certified by the eigen-equation suite.
class QClassicalFamily {
public:
    std::string name;
    QContext ctx;
    XPolynomial Phi;
    XPolynomial Psi;
    std::function<RationalFunction(int)> beta;     // beta_n, n >= 0
    std::function<RationalFunction(int)> gamma_n;  // gamma_n, n >= 1
    std::map<std::string, RationalFunction> params;
    int n_cap = 12;

    QClassicalFamily(std::string nm, QContext c, XPolynomial phi, XPolynomial psi,
                     std::function<RationalFunction(int)> b,
                     std::function<RationalFunction(int)> g)
        : name(std::move(nm)), ctx(c), Phi(std::move(phi)), Psi(std::move(psi)),
          beta(std::move(b)), gamma_n(std::move(g)) {
        if (Phi.degree() > 2 || Phi.zero())
            throw InputError(name + ": deg Phi must be 0, 1 or 2");
        if (!Phi.monic()) throw InputError(name + ": Phi must be monic");
        if (Psi.degree() != 1) throw InputError(name + ": deg Psi must be 1");
    }
    QClassicalFamily(const QClassicalFamily&) = delete;
    QClassicalFamily& operator=(const QClassicalFamily&) = delete;

    int deg_phi() const { return Phi.degree(); }
    RationalFunction psi_prime0() const { return Psi.coeff(1); }
    RationalFunction phi_half2() const { return Phi.coeff(2); }  // Phi''(0)/2

    // monic P_n from the second order recurrence; cached, single writer.
    // Returned by value: the cache may reallocate on extension.
    XPolynomial pn(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (cache_.empty()) {
            cache_.push_back(XPolynomial(ring_one<RationalFunction>()));
            XPolynomial p1 = XPolynomial::variable();
            p1.set(0, -beta(0));
            cache_.push_back(p1);
        }
        while (static_cast<int>(cache_.size()) <= n) {
            int m = static_cast<int>(cache_.size());  // building P_m
            XPolynomial xb = XPolynomial::variable();
            xb.set(0, -beta(m - 1));
            XPolynomial p = xb * cache_[m - 1] - gamma_n(m - 1) * cache_[m - 2];
            cache_.push_back(std::move(p));
        }
        return cache_[n];
    }

    // Pearson moments (u0)_0..(u0)_N with (u0)_0 = 1, cached:
    //   (u)_{n+1} (Psi'(0) - [n]_q phi_2) = [n]_q (phi_1 (u)_n + phi_0 (u)_{n-1}) - psi_0 (u)_n
    std::vector<RationalFunction> moments(int N) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (moments_.empty()) moments_.push_back(ring_one<RationalFunction>());
        RationalFunction phi2 = Phi.coeff(2), phi1 = Phi.coeff(1), phi0 = Phi.coeff(0);
        RationalFunction psi1 = Psi.coeff(1), psi0 = Psi.coeff(0);
        while (static_cast<int>(moments_.size()) <= N) {
            int n = static_cast<int>(moments_.size()) - 1;
            RationalFunction pivot = psi1 - ctx.bracket(n) * phi2;
            if (pivot.zero())
                throw DegeneracyError(name + ": Pearson pivot vanishes at n=" +
                                      std::to_string(n));
            RationalFunction rhs =
                ctx.bracket(n) * phi1 * moments_[n] - psi0 * moments_[n];
            if (n >= 1) rhs += ctx.bracket(n) * phi0 * moments_[n - 1];
            moments_.push_back(rhs / pivot);
        }
        return {moments_.begin(), moments_.begin() + N + 1};
    }

    // P_n^{[k]} = D_q^k P_{n+k} / [n+1;q]_k, monic of degree n.
    XPolynomial pn_deriv(int n, int k) const {
        XPolynomial p = dq_pow(ctx, pn(n + k), k);
        return (ring_one<RationalFunction>() / ctx.rising(n + 1, k)) * p;
    }

    // chi_n per the second-order eigenvalue branches.
    RationalFunction chi(int n) const {
        if (deg_phi() == 2)
            return ctx.bracket_inv(n) * (ctx.bracket(n - 1) - psi_prime0());
        return -(ctx.bracket_inv(n) * psi_prime0());
    }

    // z = -(Phi''(0)/2 + q Psi'(0)); with Phi monic of degree 2 this is the
    // single z used across the operator identities.
    RationalFunction z_value() const {
        return -(phi_half2() + ctx.q_power(1) * psi_prime0());
    }

    // Phi_k(x) = q^{-k deg Phi} Phi(q^k x)
    XPolynomial phi_k(int k) const {
        return ctx.q_power(-k * deg_phi()) * dilate(ctx, Phi, k);
    }

    // Psi_k(x) = q^{-k deg Phi} (Psi(x) - [k]_q (D_{q^k} Phi)(x)), where
    // [k]_q [m]_{q^k} = [km]_q keeps the k = 0 case regular.
    XPolynomial psi_k(int k) const {
        XPolynomial d;
        for (int m = 1; m <= Phi.degree(); ++m)
            d.set(m - 1, ctx.bracket(static_cast<long>(k) * m) * Phi.coeff(m));
        return ctx.q_power(-k * deg_phi()) * (Psi - d);
    }

    // chi_n^{[k]} from the Pearson pair of the k-th derivative sequence.
    RationalFunction chi_deriv(int n, int k) const {
        XPolynomial pk = phi_k(k), sk = psi_k(k);
        return ctx.bracket_inv(n) * (ctx.bracket(n - 1) * pk.coeff(2) - sk.coeff(1));
    }

    // chi_n^{[k]} from the closed display q^{-k deg Phi - 1}[n]_{q^{-1}}
    // ([n+2k]_q Phi''(0)/2 + z).
    RationalFunction chi_deriv_alt(int n, int k) const {
        return ctx.q_power(-k * deg_phi() - 1) * ctx.bracket_inv(n) *
               (ctx.bracket(n + 2 * k) * phi_half2() + z_value());
    }

    // Xi_n(k;q) as the product of chi over derivative levels.
    RationalFunction xi_product(int n, int k) const {
        RationalFunction acc = ring_one<RationalFunction>();
        for (int s = 0; s < k; ++s) acc *= chi_deriv(n - s, s);
        return acc;
    }

    // Xi_n(k;q) from the closed branch formulas.
    RationalFunction xi_closed(int n, int k) const {
        RationalFunction acc = ring_one<RationalFunction>();
        if (deg_phi() == 2) {
            RationalFunction z = z_value();
            RationalFunction yn = ctx.bracket_inv(n) * (z + ctx.bracket(n));
            for (int s = 0; s < k; ++s)
                acc *= yn - ctx.bracket_inv(s) * (z + ctx.bracket(s));
            return ctx.q_power(-static_cast<long>(k) * (k + 1) / 2) * acc;
        }
        for (int s = 0; s < k; ++s) acc *= ctx.bracket_inv(n) - ctx.bracket_inv(s);
        RationalFunction pref = (-psi_prime0()).pow(k) *
                                ctx.q_power((1 - deg_phi()) * static_cast<long>(k) *
                                            (k - 1) / 2);
        return pref * acc;
    }

private:
    mutable std::mutex mu_;
    mutable std::vector<XPolynomial> cache_;
    mutable std::vector<RationalFunction> moments_;
};

// --- presets ---------------------------------------------------------------

namespace families {

inline RationalFunction rf_int(long c) { return RationalFunction(Rational(c)); }

// Al-Salam-Carlitz: Phi = 1, Psi = (x - (1+a))/(a(q-1)),
// beta_n = (1+a) q^n, gamma_{n+1} = a q^n (q^{n+1} - 1). Requires a != 0.
inline std::shared_ptr<QClassicalFamily> al_salam_carlitz(const RationalFunction& a) {
    if (a.zero()) throw DegeneracyError("al-salam-carlitz: a = 0");
    QContext ctx{1};
    RationalFunction q = ctx.q_power(1);
    RationalFunction den = a * (q - rf_int(1));
    XPolynomial phi(ring_one<RationalFunction>());
    XPolynomial psi;
    psi.set(1, rf_int(1) / den);
    psi.set(0, -(rf_int(1) + a) / den);
    auto fam = std::make_shared<QClassicalFamily>(
        "al-salam-carlitz", ctx, phi, psi,
        [a, ctx](int n) { return (rf_int(1) + a) * ctx.q_power(n); },
        [a, ctx](int m) {  // gamma_m = a q^{m-1} (q^m - 1)
            return a * ctx.q_power(m - 1) * (ctx.q_power(m) - rf_int(1));
        });
    fam->params["a"] = a;
    return fam;
}

inline std::shared_ptr<QClassicalFamily> discrete_q_hermite() {
    auto fam = al_salam_carlitz(rf_int(-1));
    fam->name = "discrete-q-hermite";
    return fam;
}

// Stieltjes-Wigert, in v with q = v^2: Phi = x^2,
// Psi = -(q-1)^{-1} (x - q^{-3/2}), beta_n = (1+q-q^{n+1}) q^{-2n-3/2},
// gamma_{n+1} = (1-q^{n+1}) q^{-4(n+1)}.
inline std::shared_ptr<QClassicalFamily> stieltjes_wigert() {
    QContext ctx{2};
    RationalFunction q = ctx.q_power(1);
    RationalFunction den = q - rf_int(1);
    XPolynomial phi;
    phi.set(2, ring_one<RationalFunction>());
    XPolynomial psi;
    psi.set(1, -(rf_int(1) / den));
    psi.set(0, ctx.v_power(-3) / den);
    auto fam = std::make_shared<QClassicalFamily>(
        "stieltjes-wigert", ctx, phi, psi,
        [ctx](int n) {
            RationalFunction q = ctx.q_power(1);
            return (rf_int(1) + q - ctx.q_power(n + 1)) * ctx.v_power(-4 * n - 3);
        },
        [ctx](int m) { return (rf_int(1) - ctx.q_power(m)) * ctx.q_power(-4 * m); });
    return fam;
}

// Little q-Jacobi: Phi = x(x - b^{-1}q^{-1}),
// Psi = (abq^2(q-1))^{-1} ((1-abq^2)x + aq - 1); recurrence from the
// standard monic normalization. Requires a, b, ab != q^{-(n+2)} up to the cap.
inline std::shared_ptr<QClassicalFamily> little_q_jacobi(const RationalFunction& a,
                                                         const RationalFunction& b,
                                                         int n_cap = 12) {
    QContext ctx{1};
    RationalFunction q = ctx.q_power(1);
    if (a.zero() || b.zero()) throw DegeneracyError("little-q-jacobi: a, b must be nonzero");
    for (int n = 0; n <= n_cap; ++n) {
        RationalFunction qn = ctx.q_power(n + 2);
        if ((a * qn) == rf_int(1))
            throw DegeneracyError("little-q-jacobi: a = q^-(n+2) at n=" + std::to_string(n));
        if ((b * qn) == rf_int(1))
            throw DegeneracyError("little-q-jacobi: b = q^-(n+2) at n=" + std::to_string(n));
        if ((a * b * qn) == rf_int(1))
            throw DegeneracyError("little-q-jacobi: ab = q^-(n+2) at n=" + std::to_string(n));
    }
    RationalFunction den = a * b * ctx.q_power(2) * (q - rf_int(1));
    XPolynomial phi;
    phi.set(2, ring_one<RationalFunction>());
    phi.set(1, -(rf_int(1) / (b * q)));
    XPolynomial psi;
    psi.set(1, (rf_int(1) - a * b * ctx.q_power(2)) / den);
    psi.set(0, (a * q - rf_int(1)) / den);
    auto A = [a, b, ctx](int n) {
        RationalFunction one = rf_int(1);
        return ctx.q_power(n) * (one - a * ctx.q_power(n + 1)) *
               (one - a * b * ctx.q_power(n + 1)) /
               ((one - a * b * ctx.q_power(2 * n + 1)) * (one - a * b * ctx.q_power(2 * n + 2)));
    };
    auto C = [a, b, ctx](int n) {
        RationalFunction one = rf_int(1);
        return a * ctx.q_power(n) * (one - ctx.q_power(n)) * (one - b * ctx.q_power(n)) /
               ((one - a * b * ctx.q_power(2 * n)) * (one - a * b * ctx.q_power(2 * n + 1)));
    };
    auto fam = std::make_shared<QClassicalFamily>(
        "little-q-jacobi", ctx, phi, psi,
        [A, C](int n) { return A(n) + C(n); },
        [A, C](int m) { return A(m - 1) * C(m); });
    fam->params["a"] = a;
    fam->params["b"] = b;
    fam->n_cap = n_cap;
    return fam;
}

// Generic q-classical family from its defining data.
inline std::shared_ptr<QClassicalFamily> generic(std::string name, QContext ctx,
                                                 XPolynomial phi, XPolynomial psi,
                                                 std::function<RationalFunction(int)> beta,
                                                 std::function<RationalFunction(int)> gamma) {
    return std::make_shared<QClassicalFamily>(std::move(name), ctx, std::move(phi),
                                              std::move(psi), std::move(beta),
                                              std::move(gamma));
}

}  // namespace families
}  // namespace qjs
