#include "nc/io.hpp"

#include <algorithm>

namespace nc {

ordered_json carrier_to_json(const Carrier& car) {
  ordered_json j;
  j["family"] = family_name(car.family);
  if (car.is_modular()) j["modulus"] = car.modulus;
  return j;
}

Carrier carrier_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ParseError("carrier JSON needs a \"family\" string", 0);
  const std::string name = j["family"].get<std::string>();
  auto fam = family_from_name(name);
  if (!fam) throw ParseError("unknown carrier family \"" + name + "\"", 0);
  std::optional<long long> modulus;
  if (j.contains("modulus")) {
    if (!j["modulus"].is_number_integer())
      throw ParseError("carrier modulus must be an integer", 0);
    modulus = j["modulus"].get<long long>();
  }
  return make_carrier(*fam, modulus);
}

ordered_json mod_elem_to_json(const ModElem& x) {
  ordered_json j;
  j["re"] = x.c[RE];
  j["im"] = x.c[IM];
  j["neut"] = x.c[NEUT];
  j["imneut"] = x.c[IMNEUT];
  return j;
}

ordered_json exact_elem_to_json(const ExactElem& x) {
  ordered_json j;
  j["re"] = rat_str(x.c[RE]);
  j["im"] = rat_str(x.c[IM]);
  j["neut"] = rat_str(x.c[NEUT]);
  j["imneut"] = rat_str(x.c[IMNEUT]);
  return j;
}

namespace {

template <class R>
ordered_json matrix_to_json_impl(const Mat<R>& m) {
  ordered_json j;
  j["carrier"] = carrier_to_json(m.carrier());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json entries = ordered_json::array();
  for (const auto& e : m.entries()) entries.push_back(render_elem(m.ring(), e));
  j["entries"] = std::move(entries);
  return j;
}

template <class R>
Mat<R> matrix_from_json_impl(const R& ring, const ordered_json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON needs rows, cols, entries", 0);
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
      !j["entries"].is_array())
    throw ParseError("malformed matrix JSON", 0);
  const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive", 0);
  const auto& entries = j["entries"];
  if ((long long)entries.size() != (long long)rows * cols)
    throw ParseError("matrix JSON has " + std::to_string(entries.size()) + " entries, expected " +
                         std::to_string((long long)rows * cols),
                     0);
  Mat<R> m(ring, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_string()) throw ParseError("matrix entries must be strings", 0);
    m.entries()[i] = parse_elem(ring, entries[i].get<std::string>());
  }
  return m;
}

template <class R>
ordered_json poly_to_json_impl(const Poly<R>& p) {
  ordered_json j;
  j["carrier"] = carrier_to_json(p.carrier());
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(render_elem(p.ring(), c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

template <class R>
Poly<R> poly_from_json_impl(const R& ring, const ordered_json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial JSON needs a \"coeffs\" array", 0);
  std::vector<typename R::Elem> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("polynomial coefficients must be strings", 0);
    coeffs.push_back(parse_elem(ring, c.get<std::string>()));
  }
  return Poly<R>(ring, std::move(coeffs));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

template <class R>
Mat<R> parse_matrix_inline_impl(const R& ring, std::string_view s) {
  auto rows = split(s, ';');
  std::vector<std::vector<typename R::Elem>> grid;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    auto cells = split(row, ',');
    if (grid.empty())
      cols = cells.size();
    else if (cells.size() != cols)
      throw ParseError("matrix rows have unequal lengths", 0);
    std::vector<typename R::Elem> parsed;
    for (const auto& cell : cells) parsed.push_back(parse_elem(ring, strip(cell)));
    grid.push_back(std::move(parsed));
  }
  Mat<R> m(ring, (int)grid.size(), (int)cols);
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at((int)r, (int)c) = grid[r][c];
  return m;
}

template <class R>
Poly<R> parse_poly_inline_impl(const R& ring, std::string_view s) {
  std::vector<typename R::Elem> coeffs;
  for (const auto& cell : split(s, ',')) coeffs.push_back(parse_elem(ring, strip(cell)));
  return Poly<R>(ring, std::move(coeffs));
}

template <class R>
std::string poly_display_impl(const Poly<R>& p) {
  if (p.is_zero()) return "0";
  const R& ring = p.ring();
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.deg(); ++i) {
    auto c = p.coeff(i);
    if (ring.is_zero(c)) continue;
    std::string cs = render_elem(ring, c);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    std::string term;
    if (i == 0)
      term = cs;
    else if (ring.is_one(c))
      term = i == 1 ? "x" : "x^" + std::to_string(i);
    else
      term = cs + (i == 1 ? "*x" : "*x^" + std::to_string(i));
    out += first ? term : " + " + term;
    first = false;
  }
  return out;
}

}  // namespace

ordered_json matrix_to_json(const Mat<ModRing>& m) { return matrix_to_json_impl(m); }
ordered_json matrix_to_json(const Mat<ExactRing>& m) { return matrix_to_json_impl(m); }

Mat<ModRing> mod_matrix_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("carrier"))
    throw ParseError("matrix JSON needs a carrier", 0);
  Carrier car = carrier_from_json(j["carrier"]);
  if (!car.is_modular()) throw ParseError("expected a modular matrix carrier", 0);
  return matrix_from_json_impl(ModRing(car), j);
}

Mat<ExactRing> exact_matrix_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("carrier"))
    throw ParseError("matrix JSON needs a carrier", 0);
  Carrier car = carrier_from_json(j["carrier"]);
  if (car.is_modular()) throw ParseError("expected the exact matrix carrier", 0);
  return matrix_from_json_impl(ExactRing(car), j);
}

ordered_json poly_to_json(const Poly<ModRing>& p) { return poly_to_json_impl(p); }
ordered_json poly_to_json(const Poly<ExactRing>& p) { return poly_to_json_impl(p); }

Poly<ModRing> mod_poly_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("carrier"))
    throw ParseError("polynomial JSON needs a carrier", 0);
  Carrier car = carrier_from_json(j["carrier"]);
  if (!car.is_modular()) throw ParseError("expected a modular polynomial carrier", 0);
  return poly_from_json_impl(ModRing(car), j);
}

Poly<ExactRing> exact_poly_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("carrier"))
    throw ParseError("polynomial JSON needs a carrier", 0);
  Carrier car = carrier_from_json(j["carrier"]);
  if (car.is_modular()) throw ParseError("expected the exact polynomial carrier", 0);
  return poly_from_json_impl(ExactRing(car), j);
}

ordered_json scan_report_to_json(const ScanReport& rep) {
  const Carrier& car = rep.carrier;
  ordered_json j;
  j["carrier"] = carrier_to_json(car);
  j["order"] = rep.order;
  j["is_field"] = rep.is_field;
  j["is_integral_domain"] = rep.is_integral_domain;
  ordered_json zds = ordered_json::array();
  for (const auto& [x, y] : rep.zero_divisor_pairs)
    zds.push_back(ordered_json::array({render(car, x), render(car, y)}));
  j["zero_divisors"] = std::move(zds);
  ordered_json units = ordered_json::array();
  for (const auto& u : rep.units) units.push_back(render(car, u));
  j["units"] = std::move(units);
  ordered_json idems = ordered_json::array();
  for (const auto& e : rep.idempotents) idems.push_back(render(car, e));
  j["idempotents"] = std::move(idems);
  ordered_json nils = ordered_json::array();
  for (const auto& n : rep.nilpotents) {
    ordered_json entry;
    entry["element"] = render(car, n.element);
    entry["index"] = n.index;
    nils.push_back(std::move(entry));
  }
  j["nilpotents"] = std::move(nils);
  return j;
}

ordered_json eigen_to_json(const Carrier& search, const std::vector<EigenPair>& pairs) {
  ordered_json values = ordered_json::array();
  for (const auto& p : pairs) {
    ordered_json entry;
    entry["value"] = render(search, p.value);
    ordered_json basis = ordered_json::array();
    for (const auto& v : p.basis) {
      ordered_json col = ordered_json::array();
      for (int r = 0; r < v.rows(); ++r) col.push_back(render(search, v.at(r, 0)));
      basis.push_back(std::move(col));
    }
    entry["eigenbasis"] = std::move(basis);
    values.push_back(std::move(entry));
  }
  ordered_json j;
  j["values"] = std::move(values);
  return j;
}

Mat<ModRing> parse_matrix_inline(const Carrier& car, std::string_view s) {
  return parse_matrix_inline_impl(ModRing(car), s);
}
Mat<ExactRing> parse_matrix_inline_exact(std::string_view s) {
  return parse_matrix_inline_impl(ExactRing(), s);
}
Poly<ModRing> parse_poly_inline(const Carrier& car, std::string_view s) {
  return parse_poly_inline_impl(ModRing(car), s);
}
Poly<ExactRing> parse_poly_inline_exact(std::string_view s) {
  return parse_poly_inline_impl(ExactRing(), s);
}

std::string poly_display(const Poly<ModRing>& p) { return poly_display_impl(p); }
std::string poly_display(const Poly<ExactRing>& p) { return poly_display_impl(p); }

}  // namespace nc
