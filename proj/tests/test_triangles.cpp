#include <catch2/catch_amalgamated.hpp>

#include "qjs/printing.hpp"
#include "qjs/verify.hpp"

using namespace qjs;

namespace {
LQ lq(std::initializer_list<std::pair<long, long>> terms) {
    LQ f("q");
    for (auto [e, c] : terms) f.set(e, c);
    return f;
}
}  // namespace

TEST_CASE("q-Stirling numbers") {
    CHECK(qstirling(Kind::Second, 3, 2) == lq({{0, 2}, {1, 1}}));
    CHECK(qstirling(Kind::First, 3, 2) == lq({{0, 2}, {1, 1}}));
    CHECK(qstirling(Kind::Second, 5, 5) == lq({{0, 1}}));
    CHECK(qstirling(Kind::Second, 3, 7).zero());
    CHECK(qstirling(Kind::Second, 3, -1).zero());
    // expansion route: x(x-1)(x-1-q) has signed x^2 coefficient -(2+q)
    auto of = qstirling_triangle().oracle_first(3);
    CHECK(of[3][2] == -lq({{0, 2}, {1, 1}}));
}

TEST_CASE("q-Jacobi-Stirling published values") {
    CHECK(q_jacobi_stirling(Kind::Second, 3, 2) == frozen::JS_3_2());
    CHECK(q_jacobi_stirling(Kind::Second, 4, 2) == frozen::JS_4_2());
    CHECK(q_jacobi_stirling(Kind::First, 4, 2) == frozen::Jc_4_2());
    CHECK(q_jacobi_stirling(Kind::First, 4, 3) == frozen::Jc_4_3());
    for (int n = 1; n <= 6; ++n) {
        CHECK(q_jacobi_stirling(Kind::Second, n, 1) == frozen::one_plus_z_pow(n - 1));
        CHECK(q_jacobi_stirling(Kind::First, n, 1) == frozen::Jc_n_1(n));
    }
    // canonical rendering is byte-stable
    CHECK(render(q_jacobi_stirling(Kind::Second, 3, 2)) == "(q^-1+3+q)+(2+q)*z");
    CHECK(render(q_jacobi_stirling(Kind::First, 4, 3)) ==
          "(q^-2+3*q^-1+6+3*q+q^2)+(3+2*q+q^2)*z");
    CHECK(q_jacobi_stirling(Kind::Second, 2, 5).zero());
}

TEST_CASE("newton interpolation formula") {
    CHECK(cross_equal(qjs_newton(2, 2), Fraction<ZQ>(ZQ::constant(lq_one()).renamed("z"))));
    CHECK(cross_equal(qjs_newton(3, 2), Fraction<ZQ>(frozen::JS_3_2())));
    CHECK(cross_equal(qjs_newton(4, 2), Fraction<ZQ>(frozen::JS_4_2())));
    for (int n = 0; n <= 5; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(cross_equal(qjs_newton(n, j),
                              Fraction<ZQ>(q_jacobi_stirling(Kind::Second, n, j))));
}

TEST_CASE("central factorial numbers") {
    CHECK(central_factorial_U(3, 2) == lq({{-1, 1}, {0, 3}, {1, 1}}));
    CHECK(central_factorial_U(4, 2) == lq({{-2, 1}, {-1, 5}, {0, 9}, {1, 5}, {2, 1}}));
    CHECK(central_factorial_V(4, 4) == lq({{0, 1}}));
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(central_factorial_U(n, k) == q_jacobi_stirling(Kind::Second, n, k).coeff(0));
            CHECK(central_factorial_V(n, k) == q_jacobi_stirling(Kind::First, n, k).coeff(0));
        }
}

TEST_CASE("coefficient structure") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            ZQ js = q_jacobi_stirling(Kind::Second, n, k);
            ZQ jc = q_jacobi_stirling(Kind::First, n, k);
            CHECK(js.max_exp() == n - k);
            CHECK(jc.max_exp() == n - k);
            CHECK(js.coeff(n - k) == qstirling(Kind::Second, n, k));
            CHECK(jc.coeff(n - k) == qstirling(Kind::First, n, k));
            for (const auto& [i, c] : js.terms())
                for (const auto& [e, r] : c.terms()) {
                    CHECK(r > 0);
                    CHECK(denominator(r) == 1);
                }
        }
}

TEST_CASE("specializations") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(specialization_to_qstirling_check(Kind::Second, n, k));
            CHECK(specialization_to_qstirling_check(Kind::First, n, k));
            CHECK(y_version_check(n, k));
        }
}

TEST_CASE("symmetric numbers") {
    SZW s20 = sym_stirling_second(2, 0);
    Laurent<Rational> z2("z");
    z2.set(2, 1);
    CHECK(s20 == SZW::monomial("w", z2, 2));
    CHECK(render(sym_stirling_second(2, 1)) == "(1+z)+(1+2*z)*w");
    CHECK(render(sym_stirling_first(2, 1)) == "(-1-z)+(-1-2*z)*w");
    CHECK(sym_stirling_second(2, 2) == SZW::constant(Laurent<Rational>::constant(1)).renamed("w"));
    // symmetry in z and w
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            SZW f = sym_stirling_second(n, k);
            SZW transposed("w");
            for (const auto& [we, zc] : f.terms())
                for (const auto& [ze, c] : zc.terms()) {
                    Laurent<Rational> t("z");
                    t.set(we, c);
                    transposed.add_term(ze, t);
                }
            CHECK(f == transposed);
        }
}

TEST_CASE("wilson numbers") {
    Laurent<Rational> a2("a");
    a2.set(2, 1);
    CHECK(wilson_first(1, 0) == a2);
    CHECK(wilson_second(1, 0) == -a2);
    CHECK(wilson_second(4, 4) == Laurent<Rational>::constant(1).renamed("a"));
    // e_{n-k} structure: w(n,k) = e_{n-k}(a^2, ..., (a+n-1)^2)
    for (int n = 1; n <= 5; ++n) {
        Laurent<Rational> en = wilson_first(n, 0);
        Laurent<Rational> expect = Laurent<Rational>::constant(1).renamed("a");
        for (int i = 0; i < n; ++i) expect *= -wilson_node(i);
        CHECK(en == expect);
    }
    // column 0 of the second kind is (-a^2)^n
    for (int n = 0; n <= 5; ++n) {
        Laurent<Rational> expect("a");
        expect.set(2 * n, (n % 2 == 0) ? 1 : -1);
        CHECK(wilson_second(n, 0) == expect);
    }
}

TEST_CASE("askey-wilson numbers") {
    AQ minus_half_inv_a("a");
    minus_half_inv_a.set(-1, LQ::constant(Rational(-1, 2)));
    CHECK(askey_wilson(AwKind::Second, 1, 1) == minus_half_inv_a);
    CHECK(askey_wilson(AwKind::T, 1, 1) == AQ::constant(lq_one()).renamed("a"));
    AQ quad("a");
    quad.set(0, lq_one());
    quad.set(2, lq_one());
    CHECK(askey_wilson(AwKind::First, 1, 0) == quad);
    // boundary column W_q(n,0) = ((1+a^2)/(2a))^n
    for (int n = 0; n <= 4; ++n) {
        AQ expect = AQ::constant(lq_one()).renamed("a");
        AQ half_node("a");
        half_node.set(-1, LQ::constant(Rational(1, 2)));
        half_node.set(1, LQ::constant(Rational(1, 2)));
        CHECK(askey_wilson_W(n, 0) == ring_pow(half_node, n));
        (void)expect;
    }
    for (int n = 0; n <= 4; ++n) CHECK(askey_wilson_W_explicit(n, 0).num.zero() == false);
    // explicit sum cross-check
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(cross_equal(askey_wilson_W_explicit(n, k), Fraction<AQ>(askey_wilson_W(n, k))));
    // the corrected triangular recurrence with node multipliers holds
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            AQ lhs = askey_wilson_W(n + 1, k + 1);
            AQ half_inv("a");
            half_inv.set(-1, -q_var(-k) * LQ::constant(Rational(1, 2)));
            AQ rhs = half_inv * askey_wilson_W(n, k) +
                     askey_wilson_node(k + 1) * askey_wilson_W(n, k + 1);
            CHECK(lhs == rhs);
        }
    // the claimed polynomial T recurrence does not hold; mismatches are
    // reported, first at (3,2)
    auto bad = askey_wilson_T_recurrence_mismatches(4);
    REQUIRE(!bad.empty());
    CHECK(bad.front() == std::make_pair(3, 2));
}

TEST_CASE("inverse relations") {
    std::string w;
    CHECK(inverse_pair_check(qstirling_triangle(), 7, &w));
    CHECK(inverse_pair_check(qjs_triangle(), 7, &w));
    CHECK(inverse_pair_check(sym_triangle(), 6, &w));
    CHECK(inverse_pair_check(wilson_triangle(), 6, &w));
    CHECK(askey_wilson_inverse_check(5, &w));
}

TEST_CASE("oracle certifies every triangle") {
    auto check = [&](const auto& tri, int N) {
        auto of = tri.oracle_first(N);
        auto os = tri.oracle_second(N);
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= n; ++k) {
                CHECK(tri.first_signed(n, k) == of[n][k]);
                CHECK(tri.second(n, k) == os[n][k]);
            }
    };
    check(qstirling_triangle(), 7);
    check(qjs_triangle(), 7);
    check(central_triangle(), 7);
    check(sym_triangle(), 7);
    check(wilson_triangle(), 7);
    check(y_version_triangle(), 6);
    check(askey_wilson_monic_triangle(), 5);
}

TEST_CASE("column generating functions") {
    auto col1 = ogf_column(qjs_triangle(), 1, 4);
    for (int n = 1; n <= 4; ++n) CHECK(col1[n] == frozen::one_plus_z_pow(n - 1));
    auto col3 = ogf_column(qjs_triangle(), 3, 4);
    CHECK(col3[3] == ZQ::constant(lq_one()).renamed("z"));
    auto sym1 = ogf_column(sym_triangle(), 1, 3);
    CHECK(sym1[2] == sym_stirling_second(2, 1));  // (1+z)(1+w) + zw
}

TEST_CASE("q to 1 degeneration") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(evaluate(qstirling(Kind::Second, n, k), 1) ==
                  classical_stirling_triangle().second(n, k));
            CHECK(evaluate_inner(q_jacobi_stirling(Kind::Second, n, k), 1).renamed("z") ==
                  classical_js_triangle().second(n, k));
            CHECK(evaluate_inner(q_jacobi_stirling(Kind::First, n, k), 1).renamed("z") ==
                  classical_js_triangle().first(n, k));
        }
    // classical Jacobi-Stirling value at z=1, (n,k)=(3,2): nodes i(1+i)
    CHECK(evaluate(classical_js_triangle().second(3, 2), 1) == 8);
}
