#pragma once

#include <json.hpp>

#include "qjs/printing.hpp"
#include "qjs/ratfunc.hpp"

namespace qjs {

using json = nlohmann::ordered_json;

// Scalar JSON: a Rational is an exact "p/q" literal, a Laurent polynomial is
// {"var": ..., "terms": [[exp, coeff], ...]} with terms in ascending exponent
// order, a normalized quotient is {"num": ..., "den": ...}.
inline json to_json(const Rational& r) { return rational_str(r); }

template <class C>
json to_json(const Laurent<C>& f) {
    if (f.zero()) return "0";
    if (f.terms().size() == 1 && f.min_exp() == 0) return to_json(f.coeff(0));
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(json::array({e, to_json(c)}));
    return json{{"var", f.var().empty() ? "_" : f.var()}, {"terms", terms}};
}

inline json to_json(const RationalFunction& f) {
    if (f.den_is_one()) return to_json(f.num());
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

}  // namespace qjs
