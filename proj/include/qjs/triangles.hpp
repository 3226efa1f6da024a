#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "qjs/fraction.hpp"
#include "qjs/qcore.hpp"
#include "qjs/rings.hpp"

namespace qjs {

// One change-of-basis pair for a node sequence b_0, b_1, ... :
//
//   prod_{i<n} (x - b_i) = sum_k first_signed(n,k) x^k
//   x^n                  = sum_k second(n,k) prod_{i<k} (x - b_i)
//
// first(n,k) = (-1)^(n-k) first_signed(n,k) is the positive quantity the
// value lists use. Triangles fill row by row from the defining triangular
// recurrences (including column 0, which the basis change forces to
// prod b_i resp. b_0^n -- zero exactly when b_0 = 0); rows are immutable
// once published and extension is single-writer behind a mutex.
template <class R>
class NumberTriangle {
public:
    NumberTriangle(std::string tag, std::function<R(int)> node, int n_cap)
        : tag_(std::move(tag)), node_(std::move(node)), cap_(n_cap) {}

    const std::string& tag() const { return tag_; }
    int cap() const { return cap_; }
    R node(int i) const { return node_(i); }

    // positive convention; 0 outside 0 <= k <= n
    R first(int n, int k) const {
        if (!in_range(n, k)) return ring_zero<R>();
        extend(n);
        return pos_[n][k];
    }
    // expansion coefficients of prod_{i<n}(x - b_i)
    R first_signed(int n, int k) const {
        R v = first(n, k);
        return ((n - k) % 2 == 0) ? v : ring_zero<R>() - v;
    }
    R second(int n, int k) const {
        if (!in_range(n, k)) return ring_zero<R>();
        extend(n);
        return sec_[n][k];
    }

    // Independent ground truth: literal polynomial expansion and a
    // back-substitution triangular solve in the x-polynomial ring.
    std::vector<std::vector<R>> oracle_first(int N) const {
        std::vector<std::vector<R>> out;
        std::vector<R> poly{ring_one<R>()};  // prod so far, dense in x
        out.push_back(poly);
        for (int n = 1; n <= N; ++n) {
            poly = mul_linear(poly, node_(n - 1));
            out.push_back(poly);
        }
        return out;
    }
    std::vector<std::vector<R>> oracle_second(int N) const {
        std::vector<std::vector<R>> basis;  // basis[k] = prod_{i<k}(x - b_i), monic
        std::vector<R> poly{ring_one<R>()};
        basis.push_back(poly);
        for (int k = 1; k <= N; ++k) {
            poly = mul_linear(poly, node_(k - 1));
            basis.push_back(poly);
        }
        std::vector<std::vector<R>> out;
        for (int n = 0; n <= N; ++n) {
            std::vector<R> residual(n + 1, ring_zero<R>());
            residual[n] = ring_one<R>();
            std::vector<R> row(n + 1, ring_zero<R>());
            for (int k = n; k >= 0; --k) {
                R c = residual[k];
                row[k] = c;
                if (!is_zero(c))
                    for (int j = 0; j <= k; ++j)
                        residual[j] = residual[j] - c * basis[k][j];
            }
            out.push_back(row);
        }
        return out;
    }

private:
    static bool in_range(int n, int k) { return n >= 0 && k >= 0 && k <= n; }

    static std::vector<R> mul_linear(const std::vector<R>& p, const R& b) {
        std::vector<R> r(p.size() + 1, ring_zero<R>());
        for (size_t i = 0; i < p.size(); ++i) {
            r[i + 1] = r[i + 1] + p[i];
            r[i] = r[i] - b * p[i];
        }
        return r;
    }

    void extend(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (pos_.empty()) {
            pos_.push_back({ring_one<R>()});
            sec_.push_back({ring_one<R>()});
        }
        while (static_cast<int>(pos_.size()) <= n) {
            int m = static_cast<int>(pos_.size());  // filling row m from row m-1
            const auto& p = pos_[m - 1];
            const auto& s = sec_[m - 1];
            std::vector<R> prow(m + 1, ring_zero<R>());
            std::vector<R> srow(m + 1, ring_zero<R>());
            R bn = node_(m - 1);
            prow[0] = bn * p[0];
            srow[0] = node_(0) * s[0];
            for (int k = 1; k <= m; ++k) {
                // first kind: P(m,k) = P(m-1,k-1) + b_{m-1} P(m-1,k)
                prow[k] = p[k - 1];
                if (k < m) prow[k] = prow[k] + bn * p[k];
                // second kind: C(m,k) = C(m-1,k-1) + b_k C(m-1,k)
                srow[k] = s[k - 1];
                if (k < m) srow[k] = srow[k] + node_(k) * s[k];
            }
            pos_.push_back(std::move(prow));
            sec_.push_back(std::move(srow));
        }
    }

    std::string tag_;
    std::function<R(int)> node_;
    int cap_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<R>> pos_;
    mutable std::vector<std::vector<R>> sec_;
};

inline constexpr int kUnivariateCap = 12;
inline constexpr int kBivariateCap  = 7;

// --- node sequences ------------------------------------------------------

inline LQ qstirling_node(int i) { return q_bracket(i); }

inline ZQ qjs_node(int i) {
    ZQ b("z");
    b.set(1, q_bracket(i));
    b.set(0, q_bracket(i) * q_bracket_inv(i));
    return b;
}

inline LQ central_node(int i) { return q_bracket(i) * q_bracket_inv(i); }

// (i+z)(i+w) as a polynomial in w whose coefficients are polynomials in z
inline SZW sym_node(int i) {
    Laurent<Rational> zi("z");
    zi.set(0, i);
    zi.set(1, 1);
    SZW b("w");
    b.set(1, zi);
    Laurent<Rational> c("z");
    c.set(0, Rational(i) * i);
    c.set(1, i);
    b.set(0, c);
    return b;
}

inline Laurent<Rational> wilson_node(int i) {
    // -(a+i)^2
    Laurent<Rational> b("a");
    b.set(0, -Rational(i) * i);
    b.set(1, -2 * Rational(i));
    b.set(2, -1);
    return b;
}

// Askey-Wilson basis factor roots: (a q^i + a^{-1} q^{-i})/2
inline AQ askey_wilson_node(int i) {
    AQ b("a");
    b.set(1, q_var(i) * lq_const(Rational(1, 2)));
    b.set(-1, q_var(-i) * lq_const(Rational(1, 2)));
    return b;
}

// y-version nodes [i]_q (1 - y q^{-i})
inline YQ y_version_node(int i) {
    YQ b("y");
    b.set(0, q_bracket(i));
    b.set(1, -(q_bracket(i) * q_var(-i)));
    return b;
}

// classical (q -> 1) Jacobi-Stirling nodes i(z+i)
inline Laurent<Rational> classical_js_node(int i) {
    Laurent<Rational> b("z");
    b.set(0, Rational(i) * i);
    if (i != 0) b.set(1, i);
    return b;
}

inline Laurent<Rational> classical_stirling_node(int i) {
    return Laurent<Rational>::constant(i);
}

// --- shared triangles -----------------------------------------------------

inline const NumberTriangle<LQ>& qstirling_triangle() {
    static NumberTriangle<LQ> t("qstirling", qstirling_node, kUnivariateCap);
    return t;
}
inline const NumberTriangle<ZQ>& qjs_triangle() {
    static NumberTriangle<ZQ> t("qjs", qjs_node, kBivariateCap);
    return t;
}
inline const NumberTriangle<LQ>& central_triangle() {
    static NumberTriangle<LQ> t("central", central_node, kUnivariateCap);
    return t;
}
inline const NumberTriangle<SZW>& sym_triangle() {
    static NumberTriangle<SZW> t("sym", sym_node, kBivariateCap);
    return t;
}
inline const NumberTriangle<Laurent<Rational>>& wilson_triangle() {
    static NumberTriangle<Laurent<Rational>> t("wilson", wilson_node, kBivariateCap);
    return t;
}
inline const NumberTriangle<YQ>& y_version_triangle() {
    static NumberTriangle<YQ> t("y-version", y_version_node, kBivariateCap);
    return t;
}
inline const NumberTriangle<Laurent<Rational>>& classical_js_triangle() {
    static NumberTriangle<Laurent<Rational>> t("classical-js", classical_js_node,
                                               kUnivariateCap);
    return t;
}
inline const NumberTriangle<Rational>& classical_stirling_triangle() {
    static NumberTriangle<Rational> t("classical-stirling",
                                      [](int i) { return Rational(i); }, kUnivariateCap);
    return t;
}

// --- q-Stirling / q-Jacobi-Stirling API -----------------------------------

enum class Kind { First, Second };

inline LQ qstirling(Kind kind, int n, int k) {
    return kind == Kind::First ? qstirling_triangle().first(n, k)
                               : qstirling_triangle().second(n, k);
}

inline ZQ q_jacobi_stirling(Kind kind, int n, int k) {
    return kind == Kind::First ? qjs_triangle().first(n, k) : qjs_triangle().second(n, k);
}

// z-coefficient a_{n,k}^{(i)} (second kind) / b_{n,k}^{(i)} (first kind)
inline LQ qjs_coeff(Kind kind, int n, int k, int i) {
    return q_jacobi_stirling(kind, n, k).coeff(i);
}

inline LQ central_factorial_U(int n, int k) { return central_triangle().second(n, k); }
inline LQ central_factorial_V(int n, int k) { return central_triangle().first(n, k); }

inline SZW sym_stirling_second(int n, int k) { return sym_triangle().second(n, k); }
// s_{z,w}(n,k): the signed expansion coefficients, as the paper defines them
inline SZW sym_stirling_first(int n, int k) { return sym_triangle().first_signed(n, k); }

inline Laurent<Rational> wilson_second(int n, int k) { return wilson_triangle().second(n, k); }
// w(n,k) = e_{n-k}(a^2, ..., (a+n-1)^2): plain expansion coefficients for the
// nodes -(a+i)^2, which are already positive
inline Laurent<Rational> wilson_first(int n, int k) {
    return wilson_triangle().first_signed(n, k);
}

// --- Askey-Wilson ----------------------------------------------------------
//
// Basis (az, a/z; q)_k = prod_{i<k} (1 - 2 a q^i x + a^2 q^{2i}) with
// x = (z + 1/z)/2. Each factor is -2aq^i (x - b_i) with b_i the node above,
// so W_q(n,k) is the monic-basis connection coefficient divided by
// c_k = (-2a)^k q^{k(k-1)/2}, and T_q(n,k) = (-2a)^k q^{binom(k,2)} W_q(n,k)
// recovers exactly the monic-basis coefficient.

inline const NumberTriangle<AQ>& askey_wilson_monic_triangle() {
    static NumberTriangle<AQ> t("askey-wilson", askey_wilson_node, 6);
    return t;
}

inline AQ aw_basis_unit(int k) {
    // (-2a)^k q^{k(k-1)/2}
    AQ u("a");
    Rational c = ring_pow(Rational(-2), k);
    u.set(k, q_var(k * (k - 1) / 2) * lq_const(c));
    return u;
}

inline AQ aw_basis_unit_inv(int k) {
    AQ u("a");
    Rational c = Rational(1) / ring_pow(Rational(-2), k);
    u.set(-k, q_var(-k * (k - 1) / 2) * lq_const(c));
    return u;
}

inline AQ askey_wilson_W(int n, int k) {
    if (k < 0 || k > n) return AQ("a");
    return askey_wilson_monic_triangle().second(n, k) * aw_basis_unit_inv(k);
}

inline AQ askey_wilson_T(int n, int k) {
    if (k < 0 || k > n) return AQ("a");
    return aw_basis_unit(k) * askey_wilson_W(n, k);
}

// coefficients of (az, a/z; q)_n in x, by direct expansion
inline std::vector<AQ> askey_wilson_basis_in_x(int n) {
    std::vector<AQ> poly{AQ::constant(lq_one()).renamed("a")};
    for (int i = 0; i < n; ++i) {
        AQ c0("a"), c1("a");
        c0.set(0, lq_one());
        c0.set(2, q_var(2 * i));
        c1.set(1, q_var(i) * lq_const(-2));
        std::vector<AQ> r(poly.size() + 1, AQ("a"));
        for (size_t j = 0; j < poly.size(); ++j) {
            r[j] = r[j] + c0 * poly[j];
            r[j + 1] = r[j + 1] + c1 * poly[j];
        }
        poly = std::move(r);
    }
    return poly;
}

inline AQ askey_wilson_w(int n, int k) {
    if (k < 0 || k > n) return AQ("a");
    return askey_wilson_basis_in_x(n)[k];
}

enum class AwKind { First, Second, T };

inline AQ askey_wilson(AwKind kind, int n, int k) {
    switch (kind) {
        case AwKind::First: return askey_wilson_w(n, k);
        case AwKind::Second: return askey_wilson_W(n, k);
        default: return askey_wilson_T(n, k);
    }
}

// Cells 1 <= k <= n where the claimed recurrence
// T(n+1,k+1) = T(n,k) + (1 + a^2 q^{2k}) T(n,k+1) fails.
inline std::vector<std::pair<int, int>> askey_wilson_T_recurrence_mismatches(int N) {
    std::vector<std::pair<int, int>> bad;
    for (int n = 1; n < N; ++n)
        for (int k = 1; k <= n; ++k) {
            AQ lhs = askey_wilson_T(n + 1, k + 1);
            AQ mult("a");
            mult.set(0, lq_one());
            mult.set(2, q_var(2 * k));
            AQ rhs = askey_wilson_T(n, k) + mult * askey_wilson_T(n, k + 1);
            if (lhs != rhs) bad.emplace_back(n + 1, k + 1);
        }
    return bad;
}

// Explicit sum for W_q(n,k) (best-effort cross-check; the basis-change solve
// is normative):
//   W_q(n,k) = 2^{-n} sum_{j<=k} q^{k-j^2} a^{-2j} (q^j a + q^{-j}/a)^n
//              / [ (q, q^{1-2j}/a^2; q)_j (q, q^{2j+1} a^2; q)_{k-j} ]
inline Fraction<AQ> askey_wilson_W_explicit(int n, int k) {
    auto apow = [](long e) {
        AQ r("a");
        r.set(e, lq_one());
        return r;
    };
    auto qconst = [](const LQ& c) { return AQ::constant(c).renamed("a"); };
    // (u; q)_m with u = q^s a^e
    auto poch = [&](long s, long e, int m) {
        AQ acc = qconst(lq_one());
        for (int i = 0; i < m; ++i) {
            AQ t("a");
            t.set(0, lq_one());
            t.add_term(e, -q_var(s + i));
            acc *= t;
        }
        return acc;
    };
    Fraction<AQ> sum(AQ("a"), qconst(lq_one()));
    for (int j = 0; j <= k; ++j) {
        AQ base("a");
        base.set(1, q_var(j));
        base.set(-1, q_var(-j));
        AQ num = q_var(k - j * j) * apow(-2 * j) * ring_pow(base, n);
        AQ den = poch(1, 0, j) * poch(1 - 2 * j, -2, j) * poch(1, 0, k - j) *
                 poch(2 * j + 1, 2, k - j);
        sum = sum + Fraction<AQ>(num, den);
    }
    AQ half = qconst(LQ::constant(Rational(Integer(1), ring_pow(Integer(2), n))));
    return Fraction<AQ>(sum.num * half, sum.den);
}

// --- Newton interpolation for JS (Eq-style alternating sum) ----------------
//
//   JS(n,j) = sum_{r<=j} (-1)^{j-r} q^{-binom(r,2)-r(j-r)}
//             ([r]_q([r]_{q^{-1}}+z))^n
//             / ( [r]_q! [j-r]_q! prod_{0<=k<=j, k!=r} (z + [k+r]_{q^{-1}}) )
inline Fraction<ZQ> qjs_newton(int n, int j) {
    auto zconst = [](const LQ& c) { return ZQ::constant(c).renamed("z"); };
    Fraction<ZQ> sum(ZQ("z"), zconst(lq_one()));
    for (int r = 0; r <= j; ++r) {
        ZQ node = qjs_node(r);  // [r]_q (z + [r]_{q^{-1}})
        ZQ num = zconst(q_var(-(r * (r - 1) / 2) - r * (j - r))) * ring_pow(node, n);
        if ((j - r) % 2 == 1) num = -num;
        ZQ den = zconst(q_factorial(r) * q_factorial(j - r));
        for (int k = 0; k <= j; ++k) {
            if (k == r) continue;
            ZQ f("z");
            f.set(1, lq_one());
            f.set(0, q_bracket_inv(k + r));
            den *= f;
        }
        sum = sum + Fraction<ZQ>(num, den);
    }
    return sum;
}

// --- column generating function --------------------------------------------
//
// sum_{n>=k} second(n,k) x^n = x^k / prod_{i=0}^{k} (1 - b_i x), truncated at
// x^N. (For zero-based node families b_0 = 0 and the i=0 factor is 1.)
template <class R>
std::vector<R> ogf_column(const NumberTriangle<R>& tri, int k, int N) {
    std::vector<R> series(N + 1, ring_zero<R>());
    if (k <= N) series[k] = ring_one<R>();
    for (int i = 0; i <= k; ++i) {
        R b = tri.node(i);
        if (is_zero(b)) continue;
        // multiply by 1/(1 - b x): prefix sums with weight b
        for (int m = 1; m <= N; ++m) series[m] = series[m] + b * series[m - 1];
    }
    return series;
}

// --- specialization identities ---------------------------------------------

// q -> q^{-1} applied to every Laurent(q) coefficient of a z-polynomial entry
inline ZQ qjs_invert_q(const ZQ& f) { return inner_substitute_power(f, -1); }

// Eq-style specialization: JS_n^k(1/(q-1); q^{-1}) = (q/(q-1))^{n-k} S_q(n,k),
// checked as the cleared polynomial identity
//   sum_i a^{(i)}(q^{-1}) (q-1)^{n-k-i} = q^{n-k} S_q(n,k)  in Laurent(q).
inline bool specialization_to_qstirling_check(Kind kind, int n, int k) {
    ZQ entry = qjs_invert_q(q_jacobi_stirling(kind, n, k));
    LQ qm1 = q_var(1) - lq_one();
    LQ lhs("q");
    for (const auto& [i, c] : entry.terms())
        lhs += c * ring_pow(qm1, n - k - i);
    LQ rhs = q_var(n - k) * qstirling(kind, n, k);
    return lhs == rhs;
}

// Rescaled y-version identity, in the cleared polynomial form
//   sum_i a^{(i)}(q) (y-1)^i (1-q^{-1})^{n-k-i} = S_q(n,k,y^{-1}) y^{n-k}.
// (The scaling [j]_q(z+[j]_{q^{-1}}) = (y/(1-q^{-1})) [j]_q(1-y^{-1}q^{-j})
// forces the exponent k-n on (1-q^{-1}), not k.)
inline bool y_version_check(int n, int k) {
    ZQ entry = q_jacobi_stirling(Kind::Second, n, k);
    YQ ym1("y");
    ym1.set(1, lq_one());
    ym1.set(0, -lq_one());
    LQ one_minus_qinv = lq_one() - q_var(-1);
    YQ lhs("y");
    for (const auto& [i, c] : entry.terms())
        lhs += YQ::constant(c * ring_pow(one_minus_qinv, n - k - i)).renamed("y") *
               ring_pow(ym1, i);
    YQ rhs = y_version_triangle().second(n, k).substitute_power(-1).shifted(n - k);
    return lhs == rhs;
}

// --- inverse relations ------------------------------------------------------

// Both products of [second(n,j)] and [first_signed(n,j)] are the identity.
template <class R>
bool inverse_pair_check(const NumberTriangle<R>& tri, int N, std::string* witness = nullptr) {
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= N; ++k) {
            R s1 = ring_zero<R>(), s2 = ring_zero<R>();
            for (int j = 0; j <= N; ++j) {
                if (j <= n && k <= j) {
                    s1 = s1 + tri.second(n, j) * tri.first_signed(j, k);
                    s2 = s2 + tri.first_signed(n, j) * tri.second(j, k);
                }
            }
            R expect = (n == k) ? ring_one<R>() : ring_zero<R>();
            if (s1 != expect || s2 != expect) {
                if (witness)
                    *witness = tri.tag() + " inverse fails at (n,k)=(" + std::to_string(n) +
                               "," + std::to_string(k) + ")";
                return false;
            }
        }
    return true;
}

// Askey-Wilson pair W_q / w_q in the non-monic basis.
inline bool askey_wilson_inverse_check(int N, std::string* witness = nullptr) {
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= N; ++k) {
            AQ s = AQ("a");
            for (int j = k; j <= n; ++j) s = s + askey_wilson_W(n, j) * askey_wilson_w(j, k);
            AQ expect = (n == k) ? AQ::constant(lq_one()).renamed("a") : AQ("a");
            if (s != expect) {
                if (witness)
                    *witness = "askey-wilson inverse fails at (n,k)=(" + std::to_string(n) +
                               "," + std::to_string(k) + ")";
                return false;
            }
        }
    return true;
}

}  // namespace qjs
