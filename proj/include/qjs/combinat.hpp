#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qjs/qcore.hpp"
#include "qjs/rings.hpp"

// Exhaustive generators for the combinatorial models certifying the number
// triangles: Jacobi-Stirling partitions of [n]_2 with the two inversion
// statistics, permutation pairs with the sorting index, double signed
// partitions, and zero-rooted permutation pairs. Everything here is pure
// enumeration; the generating polynomials are accumulated by the callers.

namespace qjs {
namespace combinat {

// An element i_s of [n]_2: number i with copy subscript s in {1,2}.
struct Entry {
    int number;
    int copy;
    friend bool operator<(const Entry& a, const Entry& b) {
        return a.number != b.number ? a.number < b.number : a.copy < b.copy;
    }
    friend bool operator==(const Entry& a, const Entry& b) {
        return a.number == b.number && a.copy == b.copy;
    }
};

// Blocks in canonical order: zero block(s) first, then nonzero blocks by
// increasing minima. For single-zero-block partitions blocks[0] is the zero
// block; for double signed partitions blocks[0] = B0 and blocks[1] = B0'.
struct SignedPartition {
    int zero_blocks = 1;
    std::vector<std::vector<Entry>> blocks;

    std::string str() const {
        std::string s;
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (b) s += ",";
            s += "{";
            for (size_t i = 0; i < blocks[b].size(); ++i) {
                if (i) s += ",";
                s += std::to_string(blocks[b][i].number) + "_" +
                     std::to_string(blocks[b][i].copy);
            }
            s += "}";
            if (static_cast<int>(b) < zero_blocks) s += "_0";
            if (zero_blocks == 2 && b == 1) s += "'";
        }
        return s;
    }
};

// inv_1: pairs (b_1, B_j) with b_1 in a nonzero block B_i, 1 <= i < j, and
// some c_1 in B_j with c < b.
// inv_2: pairs (b_2, B_j) with b_2 in B_i, 0 <= i < j, some c_2 in B_j with
// c < b, and the subscript-1 copy of b not in B_j.
inline std::pair<int, int> js_inversions(const SignedPartition& pi) {
    const auto& bl = pi.blocks;
    int inv1 = 0, inv2 = 0;
    auto has = [&](size_t j, const Entry& e) {
        return std::find(bl[j].begin(), bl[j].end(), e) != bl[j].end();
    };
    for (size_t i = 0; i < bl.size(); ++i)
        for (const Entry& e : bl[i])
            for (size_t j = i + 1; j < bl.size(); ++j) {
                if (e.copy == 1) {
                    if (i == 0) continue;  // type 1 needs a nonzero home block
                    bool smaller = std::any_of(bl[j].begin(), bl[j].end(), [&](const Entry& c) {
                        return c.copy == 1 && c.number < e.number;
                    });
                    if (smaller) ++inv1;
                } else {
                    bool smaller = std::any_of(bl[j].begin(), bl[j].end(), [&](const Entry& c) {
                        return c.copy == 2 && c.number < e.number;
                    });
                    if (smaller && !has(j, Entry{e.number, 1})) ++inv2;
                }
            }
    return {inv1, inv2};
}

// Jacobi-Stirling k-partitions of [n]_2 whose zero block holds i numbers
// with subscript 1. Numbers are inserted in increasing order, so each new
// number is never a block minimum of an existing block.
inline std::vector<SignedPartition> enumerate_js_partitions(int n, int k, int i) {
    std::vector<SignedPartition> out;
    SignedPartition state;
    state.zero_blocks = 1;
    state.blocks.push_back({});  // zero block
    std::function<void(int)> rec = [&](int j) {
        if (j > n) {
            int nz = static_cast<int>(state.blocks.size()) - 1;
            if (nz != k) return;
            int sub1 = 0;
            for (const Entry& e : state.blocks[0])
                if (e.copy == 1) ++sub1;
            if (sub1 != i) return;
            out.push_back(state);
            return;
        }
        // new block {j_1, j_2}
        state.blocks.push_back({Entry{j, 1}, Entry{j, 2}});
        rec(j + 1);
        state.blocks.pop_back();
        // j_1 -> d1, j_2 -> d2 with d1 != d2 and not both in the zero block
        size_t m = state.blocks.size();
        for (size_t d1 = 0; d1 < m; ++d1)
            for (size_t d2 = 0; d2 < m; ++d2) {
                if (d1 == d2) continue;
                state.blocks[d1].push_back(Entry{j, 1});
                state.blocks[d2].push_back(Entry{j, 2});
                rec(j + 1);
                state.blocks[d1].pop_back();
                state.blocks[d2].pop_back();
            }
    };
    rec(1);
    for (auto& p : out)
        for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    return out;
}

// Accumulated sum of q^{inv} over Pi(n,k,i).
inline LQ js_partition_polynomial(int n, int k, int i) {
    LQ acc("q");
    for (const auto& pi : enumerate_js_partitions(n, k, i)) {
        auto [i1, i2] = js_inversions(pi);
        acc.add_term(i2 - i1, 1);
    }
    return acc;
}

// --- permutations -----------------------------------------------------------

// A permutation of {0,..,m-1} (or {1,..,m} embedded with a fixed 0) as the
// image table perm[i] = sigma(i).
using Perm = std::vector<int>;

inline int cycle_count(const Perm& s, int from = 0) {
    int m = static_cast<int>(s.size());
    std::vector<bool> seen(m, false);
    int c = 0;
    for (int i = from; i < m; ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = s[j]) seen[j] = true;
    }
    return c;
}

// positive cycle minima: { j >= 1 : j = min(Orb(j) \cap [n]) }
inline std::set<int> cycle_minima(const Perm& s) {
    int m = static_cast<int>(s.size());
    std::vector<bool> seen(m, false);
    std::set<int> mins;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int mn = 0;
        bool has_pos = false;
        for (int j = i; !seen[j]; j = s[j]) {
            seen[j] = true;
            if (j >= 1 && (!has_pos || j < mn)) {
                mn = j;
                has_pos = true;
            }
        }
        if (has_pos) mins.insert(mn);
    }
    return mins;
}

// records: letters smaller than every letter before them
inline std::vector<int> records(const std::vector<int>& w) {
    std::vector<int> rec;
    for (size_t j = 0; j < w.size(); ++j) {
        bool ok = true;
        for (size_t t = 0; t < j; ++t)
            if (w[t] < w[j]) { ok = false; break; }
        if (ok) rec.push_back(w[j]);
    }
    auto distinct = std::set<int>(w.begin(), w.end());
    if (distinct.size() != w.size()) throw InputError("records: letters must be distinct");
    return rec;
}

inline int rec_count(const std::vector<int>& w) {
    return static_cast<int>(records(w).size());
}

// the word sigma(0) sigma^2(0) ... up to the step returning to 0
inline std::vector<int> zero_word(const Perm& s) {
    std::vector<int> w;
    for (int j = s[0]; j != 0; j = s[j]) w.push_back(j);
    return w;
}

// B-code on [m] (1-based positions of a permutation table including 0 or
// not): for each i, b_i = sigma^{-k}(i) for the least k >= 1 with
// sigma^{-k}(i) <= i.
inline std::vector<int> b_code(const Perm& s, int first) {
    int m = static_cast<int>(s.size());
    Perm inv(m);
    for (int i = 0; i < m; ++i) inv[s[i]] = i;
    std::vector<int> code;
    for (int i = first; i < m; ++i) {
        int j = inv[i];
        while (j > i) j = inv[j];
        code.push_back(j);
    }
    return code;
}

// Sor(sigma) = sum (i - b_i) for a permutation of [n] given as a table on
// {1..n} with s[0] = 0 fixed.
inline int sorting_index(const Perm& s) {
    auto code = b_code(s, 1);
    int total = 0;
    for (size_t t = 0; t < code.size(); ++t) total += static_cast<int>(t) + 1 - code[t];
    return total;
}

// Sor_0 on [n]_0: b'_i = i when sigma^{-1}(i) = 0, else the B-code entry.
inline int sorting_index_zero(const Perm& s) {
    int m = static_cast<int>(s.size());
    Perm inv(m);
    for (int i = 0; i < m; ++i) inv[s[i]] = i;
    int total = 0;
    for (int i = 1; i < m; ++i) {
        int bi;
        if (inv[i] == 0) {
            bi = i;
        } else {
            int j = inv[i];
            while (j > i) j = inv[j];
            bi = j;
        }
        total += i - bi;
    }
    return total;
}

// Insertion-stable variant of Sor_0 used in the first-kind pair sums: the
// B-code treats 0 as an ordinary minimal letter, then the zero-cycle word
// compensates with rec_0(w) - sum(records(w)). Under insertion of a new
// largest element this gains exactly +1 when the element becomes the image
// of 0 and +(n-j) when it lands elsewhere, which is what the triangular
// recurrence of the first kind needs. It agrees with the literal
// per-element convention (b'_i = i when sigma^{-1}(i) = 0) whenever every
// record of w beyond the first equals 1, which covers all the published
// example rows; the two diverge first at words with three records.
inline int sorting_index_zero_stable(const Perm& s) {
    auto code = b_code(s, 1);
    int total = 0;
    for (size_t t = 0; t < code.size(); ++t) total += static_cast<int>(t) + 1 - code[t];
    auto w = zero_word(s);
    auto rec = records(w);
    int sum_rec = 0;
    for (int r : rec) sum_rec += r;
    return total + (static_cast<int>(rec.size()) - 1) - sum_rec;
}

inline std::vector<int> b_code_zero(const Perm& s) {
    int m = static_cast<int>(s.size());
    Perm inv(m);
    for (int i = 0; i < m; ++i) inv[s[i]] = i;
    std::vector<int> code;
    for (int i = 1; i < m; ++i) {
        if (inv[i] == 0) {
            code.push_back(i);
        } else {
            int j = inv[i];
            while (j > i) j = inv[j];
            code.push_back(j);
        }
    }
    return code;
}

inline std::vector<Perm> all_perms(int m, bool fix_zero) {
    std::vector<Perm> out;
    std::vector<int> base;
    for (int i = fix_zero ? 1 : 0; i < m; ++i) base.push_back(i);
    std::sort(base.begin(), base.end());
    do {
        Perm p(m);
        if (fix_zero) {
            p[0] = 0;
            for (int i = 1; i < m; ++i) p[i] = base[i - 1];
        } else {
            for (int i = 0; i < m; ++i) p[i] = base[i];
        }
        out.push_back(p);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline bool same_cycle(const Perm& s, int a, int b) {
    for (int j = s[a]; ; j = s[j]) {
        if (j == b) return true;
        if (j == a) return false;
    }
}

struct PermPair {
    Perm sigma;  // on [n]_0, table of size n+1
    Perm tau;    // on [n], table of size n+1 with tau[0] = 0 unused
    int sor = 0;
    std::string str() const {
        auto cyc = [](const Perm& p, int from) {
            std::string s;
            int m = static_cast<int>(p.size());
            std::vector<bool> seen(m, false);
            for (int i = from; i < m; ++i) {
                if (seen[i]) continue;
                s += "(";
                bool first = true;
                for (int j = i; !seen[j]; j = p[j]) {
                    seen[j] = true;
                    if (!first) s += " ";
                    s += std::to_string(j);
                    first = false;
                }
                s += ")";
            }
            return s;
        };
        return cyc(sigma, 0) + ", " + cyc(tau, 1);
    }
};

// P(n,k,i): sigma on [n]_0 and tau on [n], both with k cycles, 1 and 0 in
// the same cycle of sigma, equal positive cycle minima, and rec_0(w) = i
// with w the zero word of sigma (rec_0 = rec - 1; w always contains 1 here).
inline std::vector<PermPair> enumerate_perm_pairs(int n, int k, int i) {
    std::vector<PermPair> out;
    auto sigmas = all_perms(n + 1, false);
    auto taus = all_perms(n + 1, true);
    for (const auto& s : sigmas) {
        if (cycle_count(s) != k) continue;
        if (s[0] == 0 || !same_cycle(s, 0, 1)) continue;
        if (rec_count(zero_word(s)) - 1 != i) continue;
        auto smin = cycle_minima(s);
        int ssor = sorting_index_zero_stable(s);
        for (const auto& t : taus) {
            if (cycle_count(t, 1) != k) continue;
            if (cycle_minima(t) != smin) continue;
            out.push_back(PermPair{s, t, sorting_index(t) - ssor});
        }
    }
    return out;
}

inline LQ perm_pair_polynomial(int n, int k, int i) {
    LQ acc("q");
    for (const auto& pr : enumerate_perm_pairs(n, k, i)) acc.add_term(pr.sor, 1);
    return acc;
}

// --- double signed partitions (symmetric numbers, second kind) --------------

// Double signed k-partitions of [n]_2: two distinguishable zero blocks B0
// and B0' (B0' only subscript-2 entries), k nonzero blocks as before.
// s = #subscript-1 entries of B0, t = #subscript-2 entries of B0'.
inline std::vector<SignedPartition> enumerate_double_signed(int n, int k) {
    std::vector<SignedPartition> out;
    SignedPartition state;
    state.zero_blocks = 2;
    state.blocks.push_back({});  // B0
    state.blocks.push_back({});  // B0'
    std::function<void(int)> rec = [&](int j) {
        if (j > n) {
            if (static_cast<int>(state.blocks.size()) - 2 == k) out.push_back(state);
            return;
        }
        state.blocks.push_back({Entry{j, 1}, Entry{j, 2}});
        rec(j + 1);
        state.blocks.pop_back();
        size_t m = state.blocks.size();
        for (size_t d1 = 0; d1 < m; ++d1) {
            if (d1 == 1) continue;  // B0' takes only subscript-2 entries
            for (size_t d2 = 0; d2 < m; ++d2) {
                if (d1 == d2) continue;
                state.blocks[d1].push_back(Entry{j, 1});
                state.blocks[d2].push_back(Entry{j, 2});
                rec(j + 1);
                state.blocks[d1].pop_back();
                state.blocks[d2].pop_back();
            }
        }
    };
    rec(1);
    for (auto& p : out)
        for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    return out;
}

inline std::pair<int, int> double_signed_weight(const SignedPartition& pi) {
    int s = 0, t = 0;
    for (const Entry& e : pi.blocks[0])
        if (e.copy == 1) ++s;
    for (const Entry& e : pi.blocks[1])
        if (e.copy == 2) ++t;
    return {s, t};
}

// z^s w^t accumulated over Pi(n,k), as a polynomial in w over z.
inline SZW double_signed_polynomial(int n, int k) {
    SZW acc("w");
    for (const auto& pi : enumerate_double_signed(n, k)) {
        auto [s, t] = double_signed_weight(pi);
        Laurent<Rational> zs("z");
        zs.set(s, 1);
        acc.add_term(t, zs);
    }
    return acc;
}

// --- zero-rooted permutation pairs (symmetric numbers, first kind) ----------

// "Starters" of a permutation of [n]_0: cycle minima of the cycles that do
// not contain 0. Equivalently the positive cycle minima minus the smallest
// nonzero element of the zero cycle. The insertion argument that proves the
// triangular recurrence of s_{z,w} pairs two permutations exactly when their
// starter sets agree; the tracked statistic is the number of records of the
// zero-cycle word (0 for the empty word).
inline std::set<int> starters(const Perm& s) {
    std::set<int> mins = cycle_minima(s);
    auto w = zero_word(s);
    if (!w.empty()) mins.erase(*std::min_element(w.begin(), w.end()));
    return mins;
}

// P_0(n,k): pairs of permutations of [n]_0 with k cycles not containing 0
// and equal starter sets; weight z^{rec(w_sigma)} w^{rec(w_tau)}.
inline std::vector<PermPair> enumerate_pairs_zero(int n, int k) {
    std::vector<PermPair> out;
    auto perms = all_perms(n + 1, false);
    for (const auto& s : perms) {
        auto st = starters(s);
        if (static_cast<int>(st.size()) != k) continue;
        for (const auto& t : perms) {
            if (starters(t) != st) continue;
            out.push_back(PermPair{s, t, 0});
        }
    }
    return out;
}

inline SZW pairs_zero_polynomial(int n, int k) {
    SZW acc("w");
    for (const auto& pr : enumerate_pairs_zero(n, k)) {
        Laurent<Rational> zs("z");
        zs.set(rec_count(zero_word(pr.sigma)), 1);
        acc.add_term(rec_count(zero_word(pr.tau)), zs);
    }
    return acc;
}

}  // namespace combinat
}  // namespace qjs
