#pragma once

#include <string>

#include "qjs/laurent.hpp"
#include "qjs/ratfunc.hpp"

// Canonical scalar rendering. The grammar is the golden-file contract:
// terms in ascending exponent order, negative powers as q^-1, explicit
// +/- separators, non-unit coefficients joined with '*', rationals as
// decimal-free p/q literals. Multi-term or embedded-sign coefficients of
// nested polynomials are parenthesized.

namespace qjs {

inline std::string render(const Rational& r) { return rational_str(r); }

namespace printdetail {

inline bool needs_parens(const std::string& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+') return true;
        if (s[i] == '-' && i > 0 && s[i - 1] != '^') return true;
    }
    return false;
}

inline std::string power_str(const std::string& var, long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

inline std::string join_terms(std::string acc, const std::string& term) {
    if (acc.empty()) return term;
    if (!term.empty() && term[0] == '-') return acc + "-" + term.substr(1);
    return acc + "+" + term;
}

}  // namespace printdetail

template <class C>
std::string render(const Laurent<C>& f) {
    using namespace printdetail;
    if (f.zero()) return "0";
    std::string var = f.var().empty() ? "_" : f.var();
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string cs = render(c);
        std::string ps = power_str(var, e);
        std::string term;
        if (ps.empty()) {
            term = needs_parens(cs) ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            term = ps;
        } else if (cs == "-1") {
            term = "-" + ps;
        } else if (needs_parens(cs)) {
            term = "(" + cs + ")*" + ps;
        } else {
            term = cs + "*" + ps;
        }
        out = join_terms(std::move(out), term);
    }
    return out;
}

inline std::string render(const RationalFunction& f) {
    if (f.zero()) return "0";
    if (f.den_is_one()) return render(f.num());
    return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

// LaTeX flavor for human inspection: exponents in braces, juxtaposed
// coefficients, \frac for quotients.
namespace printdetail {

inline std::string latex_power(const std::string& var, long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^{" + std::to_string(e) + "}";
}

}  // namespace printdetail

inline std::string render_latex(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    std::string s = numerator(r) < 0 ? "-" : "";
    return s + "\\tfrac{" + Integer(abs(numerator(r))).str() + "}{" + denominator(r).str() +
           "}";
}

template <class C>
std::string render_latex(const Laurent<C>& f) {
    using namespace printdetail;
    if (f.zero()) return "0";
    std::string var = f.var().empty() ? "_" : f.var();
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string cs = render_latex(c);
        std::string ps = latex_power(var, e);
        std::string term;
        if (ps.empty()) {
            term = needs_parens(cs) ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            term = ps;
        } else if (cs == "-1") {
            term = "-" + ps;
        } else if (needs_parens(cs)) {
            term = "(" + cs + ")" + ps;
        } else {
            term = cs + ps;
        }
        out = join_terms(std::move(out), term);
    }
    return out;
}

inline std::string render_latex(const RationalFunction& f) {
    if (f.zero()) return "0";
    if (f.den_is_one()) return render_latex(f.num());
    return "\\frac{" + render_latex(f.num()) + "}{" + render_latex(f.den()) + "}";
}

}  // namespace qjs
