#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nc/format.hpp"
#include "nc/linalg.hpp"

namespace nc {

using ordered_json = nlohmann::ordered_json;

// {"family":"mod-complex","modulus":5}; exact carriers omit the modulus.
ordered_json carrier_to_json(const Carrier& car);
Carrier carrier_from_json(const ordered_json& j);

// {"re":N,"im":N,"neut":N,"imneut":N}; exact coordinates render as "p/q" strings.
ordered_json mod_elem_to_json(const ModElem& x);
ordered_json exact_elem_to_json(const ExactElem& x);

// {"carrier":{...},"rows":R,"cols":C,"entries":["str",...]} row-major.
ordered_json matrix_to_json(const Mat<ModRing>& m);
ordered_json matrix_to_json(const Mat<ExactRing>& m);
Mat<ModRing> mod_matrix_from_json(const ordered_json& j);
Mat<ExactRing> exact_matrix_from_json(const ordered_json& j);

// {"carrier":{...},"coeffs":["str",...]} lowest degree first.
ordered_json poly_to_json(const Poly<ModRing>& p);
ordered_json poly_to_json(const Poly<ExactRing>& p);
Poly<ModRing> mod_poly_from_json(const ordered_json& j);
Poly<ExactRing> exact_poly_from_json(const ordered_json& j);

ordered_json scan_report_to_json(const ScanReport& rep);

// {"values":[{"value":"str","eigenbasis":[["str",...],...]},...]}
ordered_json eigen_to_json(const Carrier& search, const std::vector<EigenPair>& pairs);

// Inline grammars: matrices are rows separated by ';' with ','-separated
// entries; polynomials are ','-separated coefficients, constant term first.
Mat<ModRing> parse_matrix_inline(const Carrier& car, std::string_view s);
Mat<ExactRing> parse_matrix_inline_exact(std::string_view s);
Poly<ModRing> parse_poly_inline(const Carrier& car, std::string_view s);
Poly<ExactRing> parse_poly_inline_exact(std::string_view s);

// Human form "c0 + c1*x + c2*x^2" with composite coefficients parenthesized.
std::string poly_display(const Poly<ModRing>& p);
std::string poly_display(const Poly<ExactRing>& p);

}  // namespace nc
