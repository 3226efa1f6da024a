#include <catch2/catch_amalgamated.hpp>

#include "qjs/lkq.hpp"
#include "qjs/printing.hpp"
#include "qjs/verify.hpp"

using namespace qjs;
using families::rf_int;

namespace {
std::shared_ptr<QClassicalFamily> asc() { return families::al_salam_carlitz(rf_int(2)); }
std::shared_ptr<QClassicalFamily> asc1() { return families::al_salam_carlitz(rf_int(-1)); }
std::shared_ptr<QClassicalFamily> sw() { return families::stieltjes_wigert(); }
std::shared_ptr<QClassicalFamily> lqj() {
    return families::little_q_jacobi(RationalFunction::variable("v"),
                                     RationalFunction::variable("v", 2));
}
}  // namespace

TEST_CASE("jackson derivative") {
    QContext ctx{1};
    XPolynomial x3 = x_monomial(ring_one<RationalFunction>(), 3);
    XPolynomial d = dq(ctx, x3);
    CHECK(d.degree() == 2);
    CHECK(d.coeff(2) == ctx.bracket(3));
    CHECK(dq(ctx, XPolynomial(rf_int(5))).zero());
    XPolynomial x2 = x_monomial(ring_one<RationalFunction>(), 2);
    CHECK(dq(ctx, x2, true).coeff(1) == ctx.bracket_inv(2));
    // linearity on random combinations
    XPolynomial f = x3 + rf_int(3) * x2;
    CHECK(dq(ctx, f) == dq(ctx, x3) + rf_int(3) * dq(ctx, x2));
}

TEST_CASE("q-leibniz") {
    QContext ctx{1};
    XPolynomial x = XPolynomial::variable();
    CHECK(q_leibniz_check(ctx, x, x, 1));
    XPolynomial f, g;
    f.set(4, rf_int(2));
    f.set(1, rf_int(-3));
    f.set(0, rf_int(1));
    g.set(3, rf_int(5));
    g.set(2, rf_int(7));
    CHECK(q_leibniz_check(ctx, f, g, 3));
    CHECK(q_leibniz_check(ctx, XPolynomial(rf_int(1)), g, 4));
    // the product rule: D_q(fg) = f(qx) D_q g + (D_q f) g
    XPolynomial lhs = dq(ctx, f * g);
    XPolynomial rhs = dilate(ctx, f, 1) * dq(ctx, g) + dq(ctx, f) * g;
    CHECK(lhs == rhs);
}

TEST_CASE("build_Lq eigen behaviour") {
    auto fam = asc();
    QDiffOperator L = build_Lq(fam);
    // constants are annihilated
    CHECK(L(XPolynomial(rf_int(3))).zero());
    // P_1 = x - (1+a) with chi_1 = -1/(a(q-1))
    XPolynomial p1 = fam->pn(1);
    CHECK(L(p1) == fam->chi(1) * p1);
    CHECK(fam->chi(1) == -(fam->ctx.bracket_inv(1) * fam->Psi.coeff(1)));
    for (int n = 0; n <= 10; ++n) {
        CHECK(L(fam->pn(n)) == fam->chi(n) * fam->pn(n));
        auto f2 = lqj();
        if (n <= 6) CHECK(build_Lq(f2)(f2->pn(n)) == f2->chi(n) * f2->pn(n));
    }
    // degree violations are construction errors
    XPolynomial cubic;
    cubic.set(3, rf_int(1));
    XPolynomial psi;
    psi.set(1, rf_int(1));
    CHECK_THROWS_AS(families::generic("bad", QContext{1}, cubic, psi,
                                      [](int) { return rf_int(0); },
                                      [](int) { return rf_int(1); }),
                    InputError);
}

TEST_CASE("build_Lkq") {
    auto fam = asc();
    // k = 0 is the identity
    XPolynomial x2 = x_monomial(ring_one<RationalFunction>(), 2);
    CHECK(build_Lkq(fam, 0)(x2) == x2);
    // k = 1 agrees with L_q on monomials
    std::string w;
    CHECK(operators_agree(build_Lkq(fam, 1), build_Lq(fam), 8, &w));
    // k = 2 on P_3 reproduces the closed-branch eigenvalue
    QDiffOperator L2 = build_Lkq(fam, 2);
    CHECK(L2(fam->pn(3)) == fam->xi_closed(3, 2) * fam->pn(3));
    // n < k: the eigenvalue product contains chi_0 = 0
    CHECK(fam->xi_product(1, 2).zero());
    CHECK(L2(fam->pn(1)).zero());
    for (auto f : {asc1(), sw(), lqj()})
        for (int k = 1; k <= 3; ++k) {
            QDiffOperator Lk = build_Lkq(f, k);
            for (int n = 0; n <= 8; ++n)
                CHECK(Lk(f->pn(n)) == f->xi_product(n, k) * f->pn(n));
        }
}

TEST_CASE("operator powers") {
    auto fam = sw();
    QDiffOperator L = build_Lq(fam);
    XPolynomial x2 = x_monomial(ring_one<RationalFunction>(), 2);
    CHECK(operator_pow(L, 0)(x2) == x2);
    std::string w;
    CHECK(operators_agree(operator_pow(L, 2), L * L, 8, &w));
    for (int n = 0; n <= 6; ++n)
        CHECK(operator_pow(L, 2)(fam->pn(n)) == fam->chi(n).pow(2) * fam->pn(n));
}

TEST_CASE("eigenvalue scalars") {
    for (auto fam : {asc(), sw(), lqj()}) {
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= 3; ++k) {
                CHECK(fam->chi_deriv(n, k) == fam->chi_deriv_alt(n, k));
                CHECK(fam->xi_product(n, k) == fam->xi_closed(n, k));
                if (n >= k) CHECK(!fam->xi_product(n, k).zero());
            }
        CHECK(fam->xi_product(5, 0) == ring_one<RationalFunction>());
    }
    // little q-jacobi z value: (1 - (abq)^{-1})/(q - 1)
    auto f = lqj();
    RationalFunction q = f->ctx.q_power(1);
    RationalFunction ab = f->params["a"] * f->params["b"];
    CHECK(f->z_value() ==
          (rf_int(1) - (ab * q).pow(-1)) / (q - rf_int(1)));
}

TEST_CASE("expansion theorems") {
    std::string w;
    for (auto fam : {asc(), sw(), lqj()}) {
        CHECK(expansion_check(fam, 1, ExpansionDirection::PowerToLkq, 6, &w));
        CHECK(expansion_check(fam, 1, ExpansionDirection::LkqToPower, 6, &w));
    }
    // deg Phi = 2 branch (q-Jacobi-Stirling numbers)
    auto f2 = families::little_q_jacobi(RationalFunction::variable("v"),
                                        RationalFunction::variable("v", 2));
    CHECK(expansion_check(f2, 2, ExpansionDirection::PowerToLkq, 6, &w));
    CHECK(expansion_check(f2, 2, ExpansionDirection::LkqToPower, 6, &w));
    // deg Phi = 0 branch (q-Stirling numbers) at a = -1, k = 3
    CHECK(expansion_check(asc1(), 3, ExpansionDirection::PowerToLkq, 6, &w));
    CHECK(expansion_check(asc1(), 3, ExpansionDirection::LkqToPower, 6, &w));
    for (auto fam : {asc(), sw()})
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= 4; ++k) CHECK(scalar_expansion_check(fam, n, k));
}
