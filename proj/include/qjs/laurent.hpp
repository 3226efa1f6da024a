#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qjs/rational.hpp"

namespace qjs {

template <class C>
class Laurent;

template <class T>
struct ring_traits {
    static T zero() { return T(0); }
    static T one() { return T(1); }
};

template <class C>
struct ring_traits<Laurent<C>> {
    static Laurent<C> zero() { return Laurent<C>(); }
    static Laurent<C> one() { return Laurent<C>::constant(ring_traits<C>::one()); }
};

template <class T>
T ring_zero() { return ring_traits<T>::zero(); }
template <class T>
T ring_one() { return ring_traits<T>::one(); }

template <class C>
bool is_zero(const Laurent<C>& f) { return f.terms().empty(); }

// Finitely supported map exponent -> coefficient over a pluggable ring C.
// Exponents may be negative. The variable is a runtime name; the zero
// polynomial (and bare constants) carry the wildcard name "" which unifies
// with any concrete variable on combination. Mixing two distinct concrete
// names is a VariableMismatchError.
template <class C>
class Laurent {
public:
    using coeff_type = C;

    Laurent() = default;
    explicit Laurent(std::string var) : var_(std::move(var)) {}

    static Laurent constant(const C& c) {
        Laurent f;
        f.set(0, c);
        return f;
    }
    static Laurent variable(std::string var, long e = 1) {
        Laurent f(std::move(var));
        f.set(e, ring_one<C>());
        return f;
    }
    static Laurent monomial(std::string var, const C& c, long e) {
        Laurent f(std::move(var));
        f.set(e, c);
        return f;
    }

    const std::string& var() const { return var_; }
    const std::map<long, C>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    C coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_zero<C>() : it->second;
    }

    long min_exp() const { return terms_.begin()->first; }
    long max_exp() const { return terms_.rbegin()->first; }

    void set(long e, const C& c) {
        if (is_zero(c)) terms_.erase(e);
        else terms_[e] = c;
    }
    void add_term(long e, const C& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!is_zero(c)) terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Laurent operator+(const Laurent& f, const Laurent& g) {
        Laurent r(merge_var(f, g));
        r.terms_ = f.terms_;
        for (const auto& [e, c] : g.terms_) r.add_term(e, c);
        return r;
    }
    friend Laurent operator-(const Laurent& f, const Laurent& g) {
        Laurent r(merge_var(f, g));
        r.terms_ = f.terms_;
        for (const auto& [e, c] : g.terms_) r.add_term(e, ring_zero<C>() - c);
        return r;
    }
    friend Laurent operator-(const Laurent& f) {
        Laurent r(f.var_);
        for (const auto& [e, c] : f.terms_) r.terms_.emplace(e, ring_zero<C>() - c);
        return r;
    }
    friend Laurent operator*(const Laurent& f, const Laurent& g) {
        Laurent r(merge_var(f, g));
        for (const auto& [e1, c1] : f.terms_)
            for (const auto& [e2, c2] : g.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    friend Laurent operator*(const Laurent& f, const C& c) {
        Laurent r(f.var_);
        for (const auto& [e, fc] : f.terms_) r.add_term(e, fc * c);
        return r;
    }
    friend Laurent operator*(const C& c, const Laurent& f) { return f * c; }

    Laurent& operator+=(const Laurent& g) { return *this = *this + g; }
    Laurent& operator-=(const Laurent& g) { return *this = *this - g; }
    Laurent& operator*=(const Laurent& g) { return *this = *this * g; }

    friend bool operator==(const Laurent& f, const Laurent& g) {
        if (!f.terms_.empty() && !g.terms_.empty()) merge_var(f, g);
        return f.terms_ == g.terms_;
    }
    friend bool operator!=(const Laurent& f, const Laurent& g) { return !(f == g); }

    // x^s * f
    Laurent shifted(long s) const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
        return r;
    }

    // Every exponent e becomes d*e (x -> x^d); this level's variable only.
    Laurent substitute_power(long d) const {
        if (d == 0) throw InvalidSubstitutionError("substitute_power: d = 0");
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(d * e, c);
        return r;
    }

    Laurent renamed(std::string var) const {
        Laurent r = *this;
        r.var_ = std::move(var);
        return r;
    }

    template <class F>
    auto map_coeffs(F&& fn) const -> Laurent<std::decay_t<decltype(fn(std::declval<C>()))>> {
        Laurent<std::decay_t<decltype(fn(std::declval<C>()))>> r(var_);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

private:
    static std::string merge_var(const Laurent& f, const Laurent& g) {
        if (f.var_.empty()) return g.var_;
        if (g.var_.empty() || f.var_ == g.var_) return f.var_;
        throw VariableMismatchError("variable mismatch: '" + f.var_ + "' vs '" + g.var_ + "'");
    }

    std::string var_;
    std::map<long, C> terms_;
};

template <class R>
R ring_pow(R base, long e) {
    R acc = ring_one<R>();
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// Exact value of f at a rational point. Pole at 0 when negative exponents
// are present is an EvaluationError naming the offending factor.
inline Rational evaluate(const Laurent<Rational>& f, const Rational& point) {
    Rational acc = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e >= 0) {
            acc += c * ring_pow(point, e);
        } else {
            if (is_zero(point))
                throw EvaluationError("evaluate: zero base for negative exponent " +
                                      std::to_string(e));
            acc += c / ring_pow(point, -e);
        }
    }
    return acc;
}

// Coefficient-wise evaluation of the inner variable of a nested polynomial.
inline Laurent<Rational> evaluate_inner(const Laurent<Laurent<Rational>>& f,
                                        const Rational& point) {
    return f.map_coeffs([&](const Laurent<Rational>& c) { return evaluate(c, point); });
}

}  // namespace qjs
