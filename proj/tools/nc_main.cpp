#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nc/io.hpp"

namespace {

using namespace nc;

struct Global {
  std::string format = "json";
  std::string out;
  long long seed = 0;  // reserved; every command is fully deterministic
  int jobs = 1;
};

void emit(const Global& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + g.out);
  f << payload;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
}

// '@path' loads the file; anything else is taken literally.
std::string load_arg(const std::string& v) {
  if (!v.empty() && v[0] == '@') {
    std::ifstream f(v.substr(1), std::ios::binary);
    if (!f) throw ParseError("cannot read file " + v.substr(1), 0);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return v;
}

bool looks_like_json(const std::string& s) {
  for (char c : s)
    if (!std::isspace((unsigned char)c)) return c == '{';
  return false;
}

struct CarrierFlags {
  std::string family;
  long long modulus = 0;
};

void add_carrier_flags(CLI::App* cmd, CarrierFlags& cf) {
  cmd->add_option("--family", cf.family,
                  "exact | mod-plain | mod-complex | mod-neutro | mod-neutro-complex");
  cmd->add_option("--modulus", cf.modulus, "modulus n >= 2 (modular families only)");
}

Carrier to_carrier(const CarrierFlags& cf) {
  if (cf.family.empty()) throw CarrierError("--family is required");
  auto fam = family_from_name(cf.family);
  if (!fam) throw CarrierError("unknown family \"" + cf.family + "\"");
  if (*fam == Family::ExactNC) {
    if (cf.modulus != 0) throw CarrierError("the exact family takes no --modulus");
    return make_carrier(*fam);
  }
  if (cf.modulus == 0) throw CarrierError("--modulus is required for modular families");
  return make_carrier(*fam, cf.modulus);
}

Carrier json_carrier(const ordered_json& j) {
  if (!j.is_object() || !j.contains("carrier"))
    throw ParseError("JSON input needs a \"carrier\" object", 0);
  return carrier_from_json(j.at("carrier"));
}

// Carrier context for a set of '@file-or-inline' inputs: explicit flags win,
// else the first JSON input names it.
Carrier probe_carrier(const CarrierFlags& cf, const std::vector<std::string>& contents) {
  if (!cf.family.empty()) return to_carrier(cf);
  for (const auto& c : contents)
    if (looks_like_json(c)) return json_carrier(parse_json_text(c));
  throw CarrierError("--family is required for inline input");
}

Mat<ModRing> load_mod_matrix(const Carrier& car, const std::string& content) {
  if (looks_like_json(content)) return mod_matrix_from_json(parse_json_text(content));
  return parse_matrix_inline(car, content);
}

Mat<ExactRing> load_exact_matrix(const std::string& content) {
  if (looks_like_json(content)) return exact_matrix_from_json(parse_json_text(content));
  return parse_matrix_inline_exact(content);
}

Poly<ModRing> load_mod_poly(const Carrier& car, const std::string& content) {
  if (looks_like_json(content)) return mod_poly_from_json(parse_json_text(content));
  return parse_poly_inline(car, content);
}

Poly<ExactRing> load_exact_poly(const std::string& content) {
  if (looks_like_json(content)) return exact_poly_from_json(parse_json_text(content));
  return parse_poly_inline_exact(content);
}

std::string grid_text(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c + 1 < row.size()) cell.resize(width[c], ' ');
      out += c == 0 ? cell : "  " + cell;
    }
    out += "\n";
  }
  return out;
}

template <class R>
std::string format_matrix(const Global& g, const Mat<R>& m) {
  if (g.format == "json") return dump(matrix_to_json(m));
  std::vector<std::vector<std::string>> rows;
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < m.cols(); ++c) row.push_back(render_elem(m.ring(), m.at(r, c)));
    rows.push_back(std::move(row));
  }
  if (g.format == "csv") {
    std::string out;
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
      out += "\n";
    }
    return out;
  }
  return grid_text(rows);
}

std::string format_scalar(const Global& g, const Carrier& car, const ModElem& v) {
  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    j["value"] = mod_elem_to_json(v);
    j["str"] = render(car, v);
    return dump(j);
  }
  return render(car, v) + "\n";
}

std::string format_scalar(const Global& g, const Carrier& car, const ExactElem& v) {
  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    j["value"] = exact_elem_to_json(v);
    j["str"] = render(car, v);
    return dump(j);
  }
  return render(car, v) + "\n";
}

template <class R>
std::string format_poly(const Global& g, const Poly<R>& p) {
  if (g.format == "json") return dump(poly_to_json(p));
  if (g.format == "csv") {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      out += (i ? "," : "") + render_elem(p.ring(), p.coeffs()[i]);
    return out + "\n";
  }
  return poly_display(p) + "\n";
}

// --- table -------------------------------------------------------------------

inline constexpr unsigned long long kTableOrderCap = 256;

std::string cmd_table(const Global& g, const Carrier& car, const std::string& op) {
  Enumerator en(car);
  if (en.size() > kTableOrderCap)
    throw BudgetError("table emission caps at order " + std::to_string(kTableOrderCap) +
                      ", carrier has " + std::to_string(en.size()) + " elements");
  ModRing ring(car);
  const bool add = op == "add";
  std::vector<std::string> hdr(en.size());
  for (unsigned long long i = 0; i < en.size(); ++i) hdr[i] = render(car, en.at(i));
  std::vector<std::vector<std::string>> cells(en.size(), std::vector<std::string>(en.size()));
  for (unsigned long long i = 0; i < en.size(); ++i)
    for (unsigned long long j = 0; j < en.size(); ++j) {
      ModElem v = add ? ring.add(en.at(i), en.at(j)) : ring.mul(en.at(i), en.at(j));
      cells[i][j] = render(car, v);
    }

  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    j["op"] = op;
    j["elements"] = hdr;
    j["table"] = cells;
    return dump(j);
  }
  std::vector<std::vector<std::string>> grid;
  {
    std::vector<std::string> first{"*"};
    first.insert(first.end(), hdr.begin(), hdr.end());
    grid.push_back(std::move(first));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::vector<std::string> row{hdr[i]};
      row.insert(row.end(), cells[i].begin(), cells[i].end());
      grid.push_back(std::move(row));
    }
  }
  if (g.format == "csv") {
    std::string out;
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
      out += "\n";
    }
    return out;
  }
  return grid_text(grid);
}

// --- scan / classify ----------------------------------------------------------

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string cmd_scan(const Global& g, const Carrier& car) {
  ScanReport rep = scan(car, {}, g.jobs);
  if (g.format == "json") return dump(scan_report_to_json(rep));
  if (g.format == "csv") {
    std::string out;
    out += "family," + family_name(car.family) + "\n";
    if (car.is_modular()) out += "modulus," + std::to_string(car.modulus) + "\n";
    out += "order," + std::to_string(rep.order) + "\n";
    out += "is_field," + bool_str(rep.is_field) + "\n";
    out += "is_integral_domain," + bool_str(rep.is_integral_domain) + "\n";
    for (const auto& [x, y] : rep.zero_divisor_pairs)
      out += "zero_divisor," + render(car, x) + "," + render(car, y) + "\n";
    for (const auto& u : rep.units) out += "unit," + render(car, u) + "\n";
    for (const auto& e : rep.idempotents) out += "idempotent," + render(car, e) + "\n";
    for (const auto& n : rep.nilpotents)
      out += "nilpotent," + render(car, n.element) + "," + std::to_string(n.index) + "\n";
    return out;
  }
  std::string out;
  out += "carrier: " + carrier_name(car) + "\n";
  out += "order: " + std::to_string(rep.order) + "\n";
  out += "field: " + std::string(rep.is_field ? "yes" : "no") + "\n";
  out += "integral domain: " + std::string(rep.is_integral_domain ? "yes" : "no") + "\n";
  out += "zero divisor pairs: " + std::to_string(rep.zero_divisor_pairs.size()) + "\n";
  out += "units: " + std::to_string(rep.units.size()) + "\n";
  out += "idempotents: " + std::to_string(rep.idempotents.size()) + "\n";
  out += "nilpotents: " + std::to_string(rep.nilpotents.size()) + "\n";
  for (const auto& [kind, text] : rep.witnesses) out += "witness " + kind + ": " + text + "\n";
  return out;
}

std::string cmd_classify(const Global& g, const Carrier& car) {
  FieldVerdict fv = is_field(car);
  const std::string verdict =
      fv.is_field ? "field" : (fv.witness ? "ring-with-zero-divisors" : "integral-domain");
  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    j["verdict"] = verdict;
    if (fv.witness) {
      ordered_json w;
      w["x"] = render(car, fv.witness->first);
      w["y"] = render(car, fv.witness->second);
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return dump(j);
  }
  if (g.format == "csv") {
    std::string out = verdict;
    if (fv.witness)
      out += "," + render(car, fv.witness->first) + "," + render(car, fv.witness->second);
    return out + "\n";
  }
  if (fv.witness)
    return verdict + ": (" + render(car, fv.witness->first) + ")*(" +
           render(car, fv.witness->second) + ")=0\n";
  return verdict + "\n";
}

// --- mat -----------------------------------------------------------------------

// Row-major entries joined with ';' — a comma-free cell encoding for CSV.
std::string matrix_cell(const Mat<ModRing>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.entries().size(); ++i)
    out += (i ? ";" : "") + render(m.carrier(), m.entries()[i]);
  return out;
}

std::string matrix_inline_form(const Mat<ModRing>& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += ";";
    for (int c = 0; c < m.cols(); ++c)
      out += (c ? "," : "") + render(m.carrier(), m.at(r, c));
  }
  return out;
}

std::string run_mat_binary(const Global& g, const CarrierFlags& cf, const std::string& a_raw,
                           const std::string& b_raw, bool add) {
  const std::string ca = load_arg(a_raw), cb = load_arg(b_raw);
  const Carrier car = probe_carrier(cf, {ca, cb});
  if (car.is_modular()) {
    auto A = load_mod_matrix(car, ca);
    auto B = load_mod_matrix(car, cb);
    return format_matrix(g, add ? mat_add(A, B) : mat_mul(A, B));
  }
  auto A = load_exact_matrix(ca);
  auto B = load_exact_matrix(cb);
  return format_matrix(g, add ? mat_add(A, B) : mat_mul(A, B));
}

std::string run_mat_det(const Global& g, const CarrierFlags& cf, const std::string& a_raw) {
  const std::string ca = load_arg(a_raw);
  const Carrier car = probe_carrier(cf, {ca});
  if (car.is_modular()) {
    auto A = load_mod_matrix(car, ca);
    return format_scalar(g, A.carrier(), mat_det(A));
  }
  auto A = load_exact_matrix(ca);
  return format_scalar(g, A.carrier(), mat_det(A));
}

std::string run_mat_inverse(const Global& g, const CarrierFlags& cf, const std::string& a_raw) {
  const std::string ca = load_arg(a_raw);
  const Carrier car = probe_carrier(cf, {ca});
  if (!car.is_modular())
    throw DomainError("matrix inverse requires a field carrier, got " + carrier_name(car));
  auto A = load_mod_matrix(car, ca);
  auto inv = mat_inverse(A);
  if (g.format == "json") {
    ordered_json j;
    j["invertible"] = inv.has_value();
    j["inverse"] = inv ? matrix_to_json(*inv) : ordered_json(nullptr);
    return dump(j);
  }
  if (!inv) return "absent\n";
  return format_matrix(g, *inv);
}

IdealSide side_from_name(const std::string& s) {
  if (s == "left") return IdealSide::Left;
  if (s == "right") return IdealSide::Right;
  if (s == "two-sided") return IdealSide::TwoSided;
  throw CarrierError("--side must be left, right, or two-sided");
}

std::vector<std::vector<bool>> pattern_from_arg(const std::string& s) {
  if (s == "first-column") return {{true, false}, {true, false}};
  if (s == "first-row") return {{true, true}, {false, false}};
  if (s == "full") return {{true, true}, {true, true}};
  std::vector<std::vector<bool>> mask;
  std::vector<bool> row;
  for (char c : s) {
    if (c == ';') {
      mask.push_back(row);
      row.clear();
    } else if (c == '1' || c == '*') {
      row.push_back(true);
    } else if (c == '0') {
      row.push_back(false);
    } else if (!std::isspace((unsigned char)c)) {
      throw ParseError(std::string("pattern characters are 0, 1, *, ';', got '") + c + "'", 0);
    }
  }
  mask.push_back(row);
  return mask;
}

std::string run_mat_ideal(const Global& g, const CarrierFlags& cf, const std::string& pattern,
                          const std::string& side_name) {
  const Carrier car = to_carrier(cf);
  const auto mask = pattern_from_arg(pattern);
  const IdealSide side = side_from_name(side_name);
  MatrixIdealResult res = check_matrix_ideal(mask, car, side);
  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    ordered_json pat = ordered_json::array();
    for (const auto& row : mask) {
      ordered_json r = ordered_json::array();
      for (bool b : row) r.push_back(b);
      pat.push_back(std::move(r));
    }
    j["pattern"] = std::move(pat);
    j["side"] = side_name;
    j["is_ideal"] = res.ok;
    if (res.counterexample) {
      ordered_json cex;
      cex["r"] = matrix_to_json(res.counterexample->first);
      cex["t"] = matrix_to_json(res.counterexample->second);
      j["counterexample"] = std::move(cex);
    } else {
      j["counterexample"] = nullptr;
    }
    return dump(j);
  }
  if (g.format == "csv") {
    std::string out = "is_ideal," + bool_str(res.ok) + "\n";
    if (res.counterexample) {
      out += "counterexample_r," + matrix_cell(res.counterexample->first) + "\n";
      out += "counterexample_t," + matrix_cell(res.counterexample->second) + "\n";
    }
    return out;
  }
  if (res.ok) return "ideal (" + side_name + ") holds\n";
  return "not a " + side_name + " ideal: r=[" + matrix_inline_form(res.counterexample->first) +
         "], t=[" + matrix_inline_form(res.counterexample->second) + "]\n";
}

// --- poly ----------------------------------------------------------------------

std::string run_poly_binary(const Global& g, const CarrierFlags& cf, const std::string& p_raw,
                            const std::string& q_raw, char which) {
  const std::string cp = load_arg(p_raw), cq = load_arg(q_raw);
  const Carrier car = probe_carrier(cf, {cp, cq});
  if (car.is_modular()) {
    auto P = load_mod_poly(car, cp);
    auto Q = load_mod_poly(car, cq);
    if (which == 'g') return format_poly(g, poly_gcd(P, Q));
    return format_poly(g, which == 'a' ? poly_add(P, Q) : poly_mul(P, Q));
  }
  auto P = load_exact_poly(cp);
  auto Q = load_exact_poly(cq);
  if (which == 'g') throw DomainError("polynomial gcd needs a field carrier, got exact");
  return format_poly(g, which == 'a' ? poly_add(P, Q) : poly_mul(P, Q));
}

std::string run_poly_eval(const Global& g, const CarrierFlags& cf, const std::string& p_raw,
                          const std::string& x_str) {
  const std::string cp = load_arg(p_raw);
  const Carrier car = probe_carrier(cf, {cp});
  if (car.is_modular()) {
    auto P = load_mod_poly(car, cp);
    ModElem x = parse_mod(P.carrier(), x_str);
    return format_scalar(g, P.carrier(), poly_eval(P, x));
  }
  auto P = load_exact_poly(cp);
  ExactElem x = parse_exact(x_str);
  return format_scalar(g, P.carrier(), poly_eval(P, x));
}

template <class R>
std::string format_divmod(const Global& g, const Poly<R>& q, const Poly<R>& r) {
  if (g.format == "json") {
    ordered_json j;
    j["quotient"] = poly_to_json(q);
    j["remainder"] = poly_to_json(r);
    return dump(j);
  }
  if (g.format == "csv") {
    std::string out = "quotient";
    for (const auto& c : q.coeffs()) out += "," + render_elem(q.ring(), c);
    out += "\nremainder";
    for (const auto& c : r.coeffs()) out += "," + render_elem(r.ring(), c);
    return out + "\n";
  }
  return "quotient: " + poly_display(q) + "\nremainder: " + poly_display(r) + "\n";
}

std::string run_poly_divmod(const Global& g, const CarrierFlags& cf, const std::string& p_raw,
                            const std::string& d_raw) {
  const std::string cp = load_arg(p_raw), cd = load_arg(d_raw);
  const Carrier car = probe_carrier(cf, {cp, cd});
  if (car.is_modular()) {
    auto P = load_mod_poly(car, cp);
    auto D = load_mod_poly(car, cd);
    auto [q, r] = poly_divmod(P, D);
    return format_divmod(g, q, r);
  }
  auto P = load_exact_poly(cp);
  auto D = load_exact_poly(cd);
  auto [q, r] = poly_divmod(P, D);
  return format_divmod(g, q, r);
}

std::string format_roots(const Global& g, const Carrier& car, const std::vector<std::string>& roots,
                         std::optional<long long> bound) {
  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    if (bound) j["bound"] = *bound;
    j["roots"] = roots;
    return dump(j);
  }
  if (g.format == "csv") {
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) out += (i ? "," : "") + roots[i];
    return out + "\n";
  }
  if (roots.empty()) return "no roots\n";
  std::string out = "roots:";
  for (const auto& r : roots) out += " " + r;
  return out + "\n";
}

std::string run_poly_roots(const Global& g, const CarrierFlags& cf, const std::string& p_raw,
                           long long bound) {
  const std::string cp = load_arg(p_raw);
  const Carrier car = probe_carrier(cf, {cp});
  if (car.is_modular()) {
    auto P = load_mod_poly(car, cp);
    std::vector<std::string> out;
    for (const auto& r : poly_roots(P)) out.push_back(render(P.carrier(), r));
    return format_roots(g, P.carrier(), out, std::nullopt);
  }
  if (bound < 0)
    throw CarrierError("--bound is required for root search over the exact carrier");
  auto P = load_exact_poly(cp);
  std::vector<std::string> out;
  for (const auto& r : poly_roots_exact(P, bound)) out.push_back(render(P.carrier(), r));
  return format_roots(g, P.carrier(), out, bound);
}

std::string run_poly_irreducible(const Global& g, const CarrierFlags& cf,
                                 const std::string& p_raw) {
  const std::string cp = load_arg(p_raw);
  const Carrier car = probe_carrier(cf, {cp});
  if (!car.is_modular())
    throw DomainError("irreducibility test needs a field carrier, got " + carrier_name(car));
  auto P = load_mod_poly(car, cp);
  IrreducibilityResult res = poly_is_irreducible(P);
  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(P.carrier());
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : P.coeffs()) coeffs.push_back(render(P.carrier(), c));
    j["coeffs"] = std::move(coeffs);
    j["irreducible"] = res.irreducible;
    if (res.factor) {
      ordered_json f = ordered_json::array();
      for (const auto& c : res.factor->coeffs()) f.push_back(render(P.carrier(), c));
      j["factor"] = std::move(f);
    } else {
      j["factor"] = nullptr;
    }
    return dump(j);
  }
  if (g.format == "csv") {
    std::string out = "irreducible," + bool_str(res.irreducible) + "\n";
    if (res.factor) {
      out += "factor";
      for (const auto& c : res.factor->coeffs()) out += "," + render(P.carrier(), c);
      out += "\n";
    }
    return out;
  }
  if (res.irreducible) return "irreducible\n";
  return "reducible: divisible by " + poly_display(*res.factor) + "\n";
}

// --- eigen / closure -------------------------------------------------------------

std::string run_eigen(const Global& g, const CarrierFlags& cf, const std::string& m_raw,
                      const CarrierFlags& search_cf) {
  const std::string cm = load_arg(m_raw);
  const Carrier car = probe_carrier(cf, {cm});
  if (!car.is_modular())
    throw DomainError("eigen search needs a finite carrier, got " + carrier_name(car));
  auto A = load_mod_matrix(car, cm);
  Carrier search = A.carrier();
  if (!search_cf.family.empty()) search = to_carrier(search_cf);
  auto pairs = eigen_search(A, search);
  if (g.format == "json") return dump(eigen_to_json(search, pairs));
  if (g.format == "csv") {
    std::string out;
    for (const auto& p : pairs) {
      out += render(search, p.value);
      for (const auto& v : p.basis) {
        out += ",";
        for (int r = 0; r < v.rows(); ++r)
          out += (r ? ";" : "") + render(search, v.at(r, 0));
      }
      out += "\n";
    }
    return out;
  }
  if (pairs.empty()) return "no eigenvalues in " + carrier_name(search) + "\n";
  std::string out;
  for (const auto& p : pairs) {
    out += "value " + render(search, p.value) + ": basis";
    for (const auto& v : p.basis) {
      out += " [";
      for (int r = 0; r < v.rows(); ++r) out += (r ? "; " : "") + render(search, v.at(r, 0));
      out += "]";
    }
    out += "\n";
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string run_closure(const Global& g, const CarrierFlags& cf, const std::string& set_arg,
                        const std::string& scalars_arg, const CarrierFlags& scalar_cf,
                        const std::string& checks) {
  const Carrier car = to_carrier(cf);
  Carrier scalar_car = car;
  if (!scalar_cf.family.empty()) scalar_car = to_carrier(scalar_cf);

  ModRing ring(car);
  std::vector<Mat<ModRing>> V;
  for (const auto& tok : split_list(set_arg, ';')) {
    Mat<ModRing> m(ring, 1, 1);
    m.at(0, 0) = parse_mod(car, trim(tok));
    V.push_back(std::move(m));
  }
  std::vector<ModElem> S;
  for (const auto& tok : split_list(scalars_arg, ';'))
    S.push_back(parse_mod(scalar_car, trim(tok)));

  ClosureFlags flags{false, false, false};
  for (const auto& tok : split_list(checks, ',')) {
    const std::string t = trim(tok);
    if (t == "scalar")
      flags.scalar = true;
    else if (t == "add")
      flags.add = true;
    else if (t == "mul")
      flags.mul = true;
    else
      throw CarrierError("--check entries are scalar, add, mul; got \"" + t + "\"");
  }

  ClosureVerdict v = closure_check(V, scalar_car, S, flags);
  auto elem_of = [&](const Mat<ModRing>& m) { return render(car, m.at(0, 0)); };

  if (g.format == "json") {
    ordered_json j;
    j["carrier"] = carrier_to_json(car);
    j["scalar_carrier"] = carrier_to_json(scalar_car);
    j["scalar_closed"] = v.scalar_closed ? ordered_json(*v.scalar_closed) : ordered_json(nullptr);
    j["add_closed"] = v.add_closed ? ordered_json(*v.add_closed) : ordered_json(nullptr);
    j["mul_closed"] = v.mul_closed ? ordered_json(*v.mul_closed) : ordered_json(nullptr);
    j["classification"] = v.classification;
    if (v.scalar_violation) {
      ordered_json w;
      w["scalar"] = render(scalar_car, v.scalar_violation->first);
      w["element"] = elem_of(v.scalar_violation->second);
      j["scalar_violation"] = std::move(w);
    } else {
      j["scalar_violation"] = nullptr;
    }
    auto put_pair = [&](const char* key,
                        const std::optional<std::pair<Mat<ModRing>, Mat<ModRing>>>& p) {
      if (p) {
        ordered_json w;
        w["a"] = elem_of(p->first);
        w["b"] = elem_of(p->second);
        j[key] = std::move(w);
      } else {
        j[key] = nullptr;
      }
    };
    put_pair("add_violation", v.add_violation);
    put_pair("mul_violation", v.mul_violation);
    return dump(j);
  }
  if (g.format == "csv") {
    std::string out = "classification," + v.classification + "\n";
    if (v.scalar_closed) {
      out += "scalar," + bool_str(*v.scalar_closed);
      if (v.scalar_violation)
        out += "," + render(scalar_car, v.scalar_violation->first) + "," +
               elem_of(v.scalar_violation->second);
      out += "\n";
    }
    if (v.add_closed) {
      out += "add," + bool_str(*v.add_closed);
      if (v.add_violation)
        out += "," + elem_of(v.add_violation->first) + "," + elem_of(v.add_violation->second);
      out += "\n";
    }
    if (v.mul_closed) {
      out += "mul," + bool_str(*v.mul_closed);
      if (v.mul_violation)
        out += "," + elem_of(v.mul_violation->first) + "," + elem_of(v.mul_violation->second);
      out += "\n";
    }
    return out;
  }
  std::string out = "classification: " + v.classification + "\n";
  if (v.scalar_violation)
    out += "scalar violation: " + render(scalar_car, v.scalar_violation->first) + " * " +
           elem_of(v.scalar_violation->second) + " escapes the set\n";
  if (v.add_violation)
    out += "add violation: " + elem_of(v.add_violation->first) + " + " +
           elem_of(v.add_violation->second) + " escapes the set\n";
  if (v.mul_violation)
    out += "mul violation: " + elem_of(v.mul_violation->first) + " * " +
           elem_of(v.mul_violation->second) + " escapes the set\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and modular neutrosophic complex algebra toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to a file instead of stdout");
  app.add_option("--seed", g.seed, "reserved; all commands are deterministic");
  app.add_option("--jobs", g.jobs, "worker threads for scans (output is identical)")
      ->check(CLI::PositiveNumber);

  // table
  CarrierFlags table_cf;
  std::string table_op;
  auto* table = app.add_subcommand("table", "emit the full Cayley table of a finite carrier");
  table->fallthrough();
  add_carrier_flags(table, table_cf);
  table->add_option("--op", table_op, "add | mul")
      ->required()
      ->check(CLI::IsMember({"add", "mul"}));
  table->callback([&] { emit(g, cmd_table(g, to_carrier(table_cf), table_op)); });

  // scan
  CarrierFlags scan_cf;
  auto* scan_cmd = app.add_subcommand("scan", "full structural report of a finite carrier");
  scan_cmd->fallthrough();
  add_carrier_flags(scan_cmd, scan_cf);
  scan_cmd->callback([&] { emit(g, cmd_scan(g, to_carrier(scan_cf))); });

  // classify
  CarrierFlags classify_cf;
  auto* classify = app.add_subcommand("classify", "field / integral-domain / zero-divisor verdict");
  classify->fallthrough();
  add_carrier_flags(classify, classify_cf);
  classify->callback([&] { emit(g, cmd_classify(g, to_carrier(classify_cf))); });

  // mat
  auto* mat = app.add_subcommand("mat", "matrix operations");
  mat->require_subcommand(1);
  mat->fallthrough();
  CarrierFlags mat_cf;
  std::string mat_a, mat_b, mat_pattern, mat_side = "two-sided";
  {
    auto* c = mat->add_subcommand("add", "entrywise sum");
    c->fallthrough();
    add_carrier_flags(c, mat_cf);
    c->add_option("--a", mat_a, "matrix: inline rows 'x,y;z,w' or @file.json")->required();
    c->add_option("--b", mat_b, "matrix")->required();
    c->callback([&] { emit(g, run_mat_binary(g, mat_cf, mat_a, mat_b, true)); });
  }
  {
    auto* c = mat->add_subcommand("mul", "matrix product");
    c->fallthrough();
    add_carrier_flags(c, mat_cf);
    c->add_option("--a", mat_a, "matrix")->required();
    c->add_option("--b", mat_b, "matrix")->required();
    c->callback([&] { emit(g, run_mat_binary(g, mat_cf, mat_a, mat_b, false)); });
  }
  {
    auto* c = mat->add_subcommand("det", "determinant (Laplace, size <= 6)");
    c->fallthrough();
    add_carrier_flags(c, mat_cf);
    c->add_option("--a", mat_a, "matrix")->required();
    c->callback([&] { emit(g, run_mat_det(g, mat_cf, mat_a)); });
  }
  {
    auto* c = mat->add_subcommand("inverse", "inverse over a field carrier");
    c->fallthrough();
    add_carrier_flags(c, mat_cf);
    c->add_option("--a", mat_a, "matrix")->required();
    c->callback([&] { emit(g, run_mat_inverse(g, mat_cf, mat_a)); });
  }
  {
    auto* c = mat->add_subcommand("ideal", "one-sided ideal pattern check (k <= 2)");
    c->fallthrough();
    add_carrier_flags(c, mat_cf);
    c->add_option("--pattern", mat_pattern,
                  "first-column | first-row | full | rows of 0/1 like '10;10'")
        ->required();
    c->add_option("--side", mat_side, "left | right | two-sided");
    c->callback([&] { emit(g, run_mat_ideal(g, mat_cf, mat_pattern, mat_side)); });
  }

  // poly
  auto* poly = app.add_subcommand("poly", "polynomial operations");
  poly->require_subcommand(1);
  poly->fallthrough();
  CarrierFlags poly_cf;
  std::string poly_p, poly_q, poly_x;
  long long poly_bound = -1;
  {
    auto* c = poly->add_subcommand("add", "sum");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "poly: inline coefficients 'c0,c1,...' or @file.json")
        ->required();
    c->add_option("--q", poly_q, "poly")->required();
    c->callback([&] { emit(g, run_poly_binary(g, poly_cf, poly_p, poly_q, 'a')); });
  }
  {
    auto* c = poly->add_subcommand("mul", "product");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "poly")->required();
    c->add_option("--q", poly_q, "poly")->required();
    c->callback([&] { emit(g, run_poly_binary(g, poly_cf, poly_p, poly_q, 'm')); });
  }
  {
    auto* c = poly->add_subcommand("eval", "Horner evaluation at --x");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "poly")->required();
    c->add_option("--x", poly_x, "element")->required();
    c->callback([&] { emit(g, run_poly_eval(g, poly_cf, poly_p, poly_x)); });
  }
  {
    auto* c = poly->add_subcommand("divmod", "Euclidean division by --d");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "dividend")->required();
    c->add_option("--d", poly_q, "divisor (unit leading coefficient)")->required();
    c->callback([&] { emit(g, run_poly_divmod(g, poly_cf, poly_p, poly_q)); });
  }
  {
    auto* c = poly->add_subcommand("roots", "all roots (exhaustive / bounded exact)");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "poly")->required();
    c->add_option("--bound", poly_bound, "coordinate window for the exact carrier");
    c->callback([&] { emit(g, run_poly_roots(g, poly_cf, poly_p, poly_bound)); });
  }
  {
    auto* c = poly->add_subcommand("irreducible", "irreducibility over a field carrier (deg 1-4)");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "poly")->required();
    c->callback([&] { emit(g, run_poly_irreducible(g, poly_cf, poly_p)); });
  }
  {
    auto* c = poly->add_subcommand("gcd", "monic Euclidean gcd over a field carrier");
    c->fallthrough();
    add_carrier_flags(c, poly_cf);
    c->add_option("--p", poly_p, "poly")->required();
    c->add_option("--q", poly_q, "poly")->required();
    c->callback([&] { emit(g, run_poly_binary(g, poly_cf, poly_p, poly_q, 'g')); });
  }

  // eigen
  CarrierFlags eigen_cf, eigen_search_cf;
  std::string eigen_matrix;
  auto* eigen = app.add_subcommand("eigen", "exhaustive eigenvalue search");
  eigen->fallthrough();
  add_carrier_flags(eigen, eigen_cf);
  eigen->add_option("--matrix", eigen_matrix, "square matrix")->required();
  eigen->add_option("--search-family", eigen_search_cf.family,
                    "carrier searched for eigenvalues (default: the matrix's)");
  eigen->add_option("--search-modulus", eigen_search_cf.modulus, "its modulus");
  eigen->callback([&] { emit(g, run_eigen(g, eigen_cf, eigen_matrix, eigen_search_cf)); });

  // closure
  CarrierFlags closure_cf, closure_scalar_cf;
  std::string closure_set, closure_scalars, closure_checks = "scalar,add,mul";
  auto* closure = app.add_subcommand("closure", "set/semigroup/group vector-space taxonomy");
  closure->fallthrough();
  add_carrier_flags(closure, closure_cf);
  closure->add_option("--set", closure_set, "';'-separated elements")->required();
  closure->add_option("--scalars", closure_scalars, "';'-separated scalars")->required();
  closure->add_option("--scalar-family", closure_scalar_cf.family,
                      "scalar carrier (default: the element carrier)");
  closure->add_option("--scalar-modulus", closure_scalar_cf.modulus, "its modulus");
  closure->add_option("--check", closure_checks, "subset of scalar,add,mul");
  closure->callback([&] {
    emit(g, run_closure(g, closure_cf, closure_set, closure_scalars, closure_scalar_cf,
                        closure_checks));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const nc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const nc::CarrierError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const nc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
