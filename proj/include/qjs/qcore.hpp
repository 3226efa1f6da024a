#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "qjs/rings.hpp"

namespace qjs {

// Memoized q-notation: [n]_q, [n]_q!, Gaussian binomials, rising factorials
// [a;q]_n. Values are Laurent polynomials in q; negative-argument brackets
// expand (q^n - 1)/(q - 1) as a Laurent polynomial, keeping the layer
// fraction-free. Memo entries are write-once behind a mutex; concurrent
// readers either find the value or recompute it identically.
class QSymbolTable {
public:
    static QSymbolTable& instance() {
        static QSymbolTable t;
        return t;
    }

    LQ bracket(long n) {
        std::lock_guard<std::mutex> lock(mu_);
        return bracket_unlocked(n);
    }

    LQ factorial(long n) {
        if (n < 0) throw InputError("q-factorial of negative argument");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(factorials_.size()) <= n) {
            if (factorials_.empty()) factorials_.push_back(lq_one());
            else {
                long m = static_cast<long>(factorials_.size());
                factorials_.push_back(factorials_.back() * bracket_unlocked(m));
            }
        }
        return factorials_[static_cast<size_t>(n)];
    }

    LQ binomial(long n, long k) {
        if (n < 0) throw InputError("q-binomial with negative n");
        if (k < 0 || k > n) return LQ("q");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(binrows_.size()) <= n) {
            long m = static_cast<long>(binrows_.size());
            std::vector<LQ> row(static_cast<size_t>(m) + 1);
            row[0] = lq_one();
            row[static_cast<size_t>(m)] = lq_one();
            // Pascal rule [m over j] = [m-1 over j-1] + q^j [m-1 over j]
            for (long j = 1; j < m; ++j)
                row[static_cast<size_t>(j)] =
                    binrows_[m - 1][j - 1] + q_var(j) * binrows_[m - 1][j];
            binrows_.push_back(std::move(row));
        }
        return binrows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

    LQ rising(long a, long n) {
        if (n < 0) throw InputError("q-rising with negative length");
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(a, n);
        auto it = risings_.find(key);
        if (it != risings_.end()) return it->second;
        LQ value = lq_one();
        for (long k = 0; k < n; ++k) value *= bracket_unlocked(a + k);
        risings_.emplace(key, value);
        return value;
    }

private:
    LQ bracket_unlocked(long n) {
        auto it = brackets_.find(n);
        if (it != brackets_.end()) return it->second;
        LQ f("q");
        if (n >= 0)
            for (long i = 0; i < n; ++i) f.set(i, 1);
        else
            for (long i = n; i <= -1; ++i) f.set(i, -1);
        brackets_.emplace(n, f);
        return f;
    }

    std::mutex mu_;
    std::map<long, LQ> brackets_;
    std::vector<LQ> factorials_;
    std::vector<std::vector<LQ>> binrows_;
    std::map<std::pair<long, long>, LQ> risings_;
};

inline LQ q_bracket(long n) { return QSymbolTable::instance().bracket(n); }
inline LQ q_factorial(long n) { return QSymbolTable::instance().factorial(n); }
inline LQ q_binomial(long n, long k) { return QSymbolTable::instance().binomial(n, k); }
inline LQ q_rising(long a, long n) { return QSymbolTable::instance().rising(a, n); }

// [n]_{q^{-1}} as a Laurent polynomial in q.
inline LQ q_bracket_inv(long n) { return q_bracket(n).substitute_power(-1); }

// (t;q)_k as a polynomial of degree k in the formal argument t.
inline Laurent<LQ> q_pochhammer_poly(long k) {
    if (k < 0) throw InputError("q-shifted factorial with negative length");
    Laurent<LQ> acc = Laurent<LQ>::constant(lq_one()).renamed("t");
    for (long i = 0; i < k; ++i) {
        Laurent<LQ> factor("t");
        factor.set(0, lq_one());
        factor.set(1, -q_var(i));
        acc *= factor;
    }
    return acc;
}

// (x;q)_k evaluated at x = q^a, as a Laurent polynomial in q.
inline LQ q_pochhammer_at_power(long a, long k) {
    LQ acc = lq_one();
    for (long i = 0; i < k; ++i) acc *= lq_one() - q_var(a + i);
    return acc;
}

}  // namespace qjs
