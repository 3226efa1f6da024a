#include <catch2/catch_amalgamated.hpp>

#include "qjs/combinat.hpp"
#include "qjs/printing.hpp"
#include "qjs/triangles.hpp"

using namespace qjs;
using namespace qjs::combinat;

namespace {
LQ lq(std::initializer_list<std::pair<long, long>> terms) {
    LQ f("q");
    for (auto [e, c] : terms) f.set(e, c);
    return f;
}
}  // namespace

TEST_CASE("jacobi-stirling partitions") {
    CHECK(js_partition_polynomial(3, 2, 0) == lq({{-1, 1}, {0, 3}, {1, 1}}));
    CHECK(js_partition_polynomial(3, 2, 1) == lq({{0, 2}, {1, 1}}));
    CHECK(enumerate_js_partitions(2, 2, 0).size() == 1);
    CHECK(enumerate_js_partitions(3, 2, 0).size() + enumerate_js_partitions(3, 2, 1).size() ==
          8);
    CHECK(enumerate_js_partitions(2, 2, 1).empty());
    // blocks are canonical: zero block first, then by increasing minima
    for (const auto& pi : enumerate_js_partitions(4, 2, 1)) {
        for (size_t b = 2; b < pi.blocks.size(); ++b)
            CHECK(pi.blocks[b - 1].front().number < pi.blocks[b].front().number);
        // nonzero blocks contain both copies of their smallest element
        for (size_t b = 1; b < pi.blocks.size(); ++b) {
            int mn = pi.blocks[b].front().number;
            int copies = 0;
            for (const auto& e : pi.blocks[b])
                if (e.number == mn) ++copies;
            CHECK(copies == 2);
        }
    }
}

TEST_CASE("partition statistics match the coefficients") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int i = 0; i <= n - k; ++i)
                CHECK(js_partition_polynomial(n, k, i) == qjs_coeff(Kind::Second, n, k, i));
}

TEST_CASE("records") {
    CHECK(records({5, 7, 4, 8, 6, 2, 3, 1, 9}) == std::vector<int>{5, 4, 2, 1});
    CHECK(rec_count({1}) == 1);
    CHECK(records({1, 2, 3}) == std::vector<int>{1});
    CHECK_THROWS_AS(records({2, 2}), InputError);
}

TEST_CASE("b-codes and sorting indices") {
    Perm tau{0, 3, 2, 1};  // (1 3)(2)
    CHECK(b_code(tau, 1) == std::vector<int>{1, 2, 1});
    CHECK(sorting_index(tau) == 2);
    Perm idp{0, 1, 2, 3, 4};
    CHECK(b_code(idp, 1) == std::vector<int>{1, 2, 3, 4});
    CHECK(sorting_index(idp) == 0);
    Perm sld{1, 0, 3, 2};  // (0 1)(2 3) on [3]_0
    CHECK(b_code_zero(sld) == std::vector<int>{1, 2, 2});
    CHECK(sorting_index_zero(sld) == 1);
    CHECK(sorting_index_zero_stable(sld) == 1);
    // first divergence of the stable variant: three records in the zero word
    Perm deep{3, 0, 1, 2};  // (0 3 2 1), word 321
    CHECK(sorting_index_zero(deep) == 3);
    CHECK(sorting_index_zero_stable(deep) == 2);
}

TEST_CASE("permutation pairs") {
    CHECK(perm_pair_polynomial(3, 2, 0) == lq({{-1, 1}, {0, 3}, {1, 1}}));
    CHECK(perm_pair_polynomial(3, 2, 1) == lq({{0, 2}, {1, 1}}));
    auto base = enumerate_perm_pairs(1, 1, 0);
    CHECK(base.size() == 1);
    CHECK(perm_pair_polynomial(1, 1, 0) == lq({{0, 1}}));
    // the cell the literal convention got wrong
    CHECK(perm_pair_polynomial(3, 1, 2) == lq({{0, 1}, {1, 1}}));
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (int i = 0; i <= n - k; ++i)
                CHECK(perm_pair_polynomial(n, k, i) == qjs_coeff(Kind::First, n, k, i));
}

TEST_CASE("double signed partitions") {
    auto k1 = enumerate_double_signed(2, 1);
    CHECK(k1.size() == 5);
    std::multiset<std::pair<int, int>> weights;
    for (const auto& pi : k1) weights.insert(double_signed_weight(pi));
    std::multiset<std::pair<int, int>> expect{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}};
    CHECK(weights == expect);
    auto k0 = enumerate_double_signed(2, 0);
    REQUIRE(k0.size() == 1);
    CHECK(double_signed_weight(k0[0]) == std::make_pair(2, 2));
    auto k2 = enumerate_double_signed(2, 2);
    REQUIRE(k2.size() == 1);
    CHECK(double_signed_weight(k2[0]) == std::make_pair(0, 0));
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(double_signed_polynomial(n, k) == sym_stirling_second(n, k));
}

TEST_CASE("zero-rooted pairs") {
    CHECK(render(pairs_zero_polynomial(2, 1)) == "(1+z)+(1+2*z)*w");
    CHECK(pairs_zero_polynomial(1, 1) ==
          SZW::constant(Laurent<Rational>::constant(1)).renamed("w"));
    for (int n = 0; n <= 4; ++n) {
        CHECK(pairs_zero_polynomial(n, n) ==
              SZW::constant(Laurent<Rational>::constant(1)).renamed("w"));
        for (int k = 0; k <= n; ++k) {
            SZW expect = sym_stirling_first(n, k);
            if ((n - k) % 2 == 1) expect = -expect;
            CHECK(pairs_zero_polynomial(n, k) == expect);
        }
    }
}

TEST_CASE("recurrence replay of the partition proof") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int i = 0; i <= n - k; ++i) {
                LQ own("q"), zero1("q"), nonzero1("q");
                for (const auto& pi : enumerate_js_partitions(n, k, i)) {
                    auto [i1, i2] = js_inversions(pi);
                    bool own_block = false, n1zero = false;
                    for (const auto& b : pi.blocks)
                        if (b.size() == 2 && b[0].number == n && b[1].number == n)
                            own_block = true;
                    for (const auto& e : pi.blocks[0])
                        if (e.number == n && e.copy == 1) n1zero = true;
                    (own_block ? own : (n1zero ? zero1 : nonzero1)).add_term(i2 - i1, 1);
                }
                CHECK(own == qjs_coeff(Kind::Second, n - 1, k - 1, i));
                CHECK(zero1 == q_bracket(k) * qjs_coeff(Kind::Second, n - 1, k, i - 1));
                CHECK(nonzero1 ==
                      q_bracket(k) * q_bracket_inv(k) * qjs_coeff(Kind::Second, n - 1, k, i));
            }
}
