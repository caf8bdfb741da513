#pragma once

#include <string>
#include <string_view>

#include "nc/element.hpp"

namespace nc {

// Canonical element strings.
//   modular:  term ("+" term)*, term in {int, int"iF", "iF", int"I", "I",
//             int"iFI", "iFI"}, terms in fixed re -> iF -> I -> iFI order,
//             coefficient 1 elided before a symbol, zero terms omitted,
//             "0" for the zero element.
//   exact:    same shape with symbols i / I / iI, rational coefficients
//             ("p/q"), and negative terms joined with "-".
std::string render(const Carrier& car, const ModElem& x);
std::string render(const Carrier& car, const ExactElem& x);

// Strict parsers; throw ParseError (with position) on grammar violations,
// including symbols outside the family's coordinate shape. Modular integer
// coefficients are reduced into [0, n-1].
ModElem parse_mod(const Carrier& car, std::string_view text);
ExactElem parse_exact(std::string_view text);

// Ring-generic helpers so templated code can format either element kind.
inline std::string render_elem(const ModRing& r, const ModElem& x) { return render(r.carrier(), x); }
inline std::string render_elem(const ExactRing& r, const ExactElem& x) { return render(r.carrier(), x); }
inline ModElem parse_elem(const ModRing& r, std::string_view s) { return parse_mod(r.carrier(), s); }
inline ExactElem parse_elem(const ExactRing&, std::string_view s) { return parse_exact(s); }

}  // namespace nc
