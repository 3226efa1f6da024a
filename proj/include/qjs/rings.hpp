#pragma once

#include "qjs/laurent.hpp"
#include "qjs/ratfunc.hpp"

namespace qjs {

// The concrete rings the number families live in.
using LQ  = Laurent<Rational>;   // Laurent polynomials in q
using ZQ  = Laurent<LQ>;         // polynomials in z over Laurent(q)
using SZW = Laurent<LQ>;         // polynomials in w over polynomials in z (plain exponents)
using AQ  = Laurent<LQ>;         // Laurent in a over Laurent(q)
using YQ  = Laurent<LQ>;         // Laurent in y over Laurent(q)

inline LQ q_var(long e = 1) { return LQ::variable("q", e); }
inline LQ lq_const(const Rational& c) { return LQ::constant(c); }
inline LQ lq_one() { return LQ::constant(1); }

inline ZQ z_var() { return ZQ::variable("z"); }
inline ZQ zq_const(const LQ& c) { return ZQ::constant(c); }

// q -> q^d applied to the inner Laurent(q) coefficients of a nested value.
inline Laurent<LQ> inner_substitute_power(const Laurent<LQ>& f, long d) {
    return f.map_coeffs([&](const LQ& c) { return c.substitute_power(d); });
}

}  // namespace qjs
