#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qjs {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Typed errors used across the scalar tower.
struct VariableMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidSubstitutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};
struct EvaluationError : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegeneracyError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline bool is_one(const Rational& r) { return r == 1; }

// Exact decimal-free literal: "p" or "p/q" with q > 1.
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// p/q with sign normalized onto the numerator (the backing type requires a
// positive denominator).
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw DivisionByZeroError("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZeroError("parse_rational: zero denominator in '" + s + "'");
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("parse_rational: bad literal '" + s + "'");
    }
}

}  // namespace qjs
