#include "nc/format.hpp"

#include <cctype>

namespace nc {

namespace {

const char* kModSym[4] = {"", "iF", "I", "iFI"};
const char* kExactSym[4] = {"", "i", "I", "iI"};

std::string join_terms_mod(const std::string terms[4]) {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (terms[k].empty()) continue;
    if (!out.empty()) out += '+';
    out += terms[k];
  }
  return out.empty() ? "0" : out;
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return pos < s.size() ? s[pos] : '\0'; }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  // digits+ ; returns the digit run
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected digits");
    return std::string(s.substr(start, pos - start));
  }

  // longest-match symbol; -1 if none
  int symbol(bool exact) {
    skip_ws();
    auto try_sym = [&](const char* sym, int k) -> int {
      std::string_view v(sym);
      if (!v.empty() && s.substr(pos, v.size()) == v) {
        pos += v.size();
        return k;
      }
      return -1;
    };
    if (exact) {
      if (int k = try_sym("iI", IMNEUT); k >= 0) return k;
      if (int k = try_sym("i", IM); k >= 0) return k;
      if (int k = try_sym("I", NEUT); k >= 0) return k;
    } else {
      if (int k = try_sym("iFI", IMNEUT); k >= 0) return k;
      if (int k = try_sym("iF", IM); k >= 0) return k;
      if (int k = try_sym("I", NEUT); k >= 0) return k;
    }
    return -1;
  }
};

}  // namespace

std::string render(const Carrier& car, const ModElem& x) {
  std::string terms[4];
  for (int k = 0; k < 4; ++k) {
    if (x.c[k] == 0) continue;
    if (k == 0)
      terms[k] = std::to_string(x.c[k]);
    else
      terms[k] = (x.c[k] == 1 ? "" : std::to_string(x.c[k])) + std::string(kModSym[k]);
  }
  return join_terms_mod(terms);
}

std::string render(const Carrier&, const ExactElem& x) {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rat& v = x.c[k];
    if (v == 0) continue;
    std::string term;
    if (k == 0) {
      term = rat_str(v);
    } else if (v == 1) {
      term = kExactSym[k];
    } else if (v == -1) {
      term = std::string("-") + kExactSym[k];
    } else {
      term = rat_str(v) + kExactSym[k];
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += '-';
      out += term.substr(1);
    } else {
      out += '+';
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

ModElem parse_mod(const Carrier& car, std::string_view text) {
  if (!car.is_modular()) throw ParseError("modular parser used with exact carrier", 0);
  Cursor cur{text};
  const long long n = car.modulus;

  cur.skip_ws();
  if (cur.peek() == '0') {
    std::size_t save = cur.pos;
    ++cur.pos;
    if (cur.done()) return ModElem{};
    cur.pos = save;  // "0..." inside a longer string: fall through to term parse
  }

  ModElem out{};
  int last_k = -1;
  bool first = true;
  while (true) {
    if (cur.done()) {
      if (first) cur.fail("empty element");
      break;
    }
    if (!first) {
      if (cur.peek() != '+') cur.fail("expected '+'");
      ++cur.pos;
    }
    cur.skip_ws();
    long long coef = 1;
    bool have_num = std::isdigit((unsigned char)cur.peek());
    if (have_num) {
      std::string d = cur.digits();
      coef = 0;
      for (char ch : d) {
        coef = coef * 10 + (ch - '0');
        if (coef >= (1ll << 62)) coef %= n;  // keep huge literals reducible
      }
      coef %= n;
    }
    int k = cur.symbol(false);
    if (k < 0) {
      if (!have_num) cur.fail("expected coefficient or symbol");
      k = RE;
    }
    if (k <= last_k) cur.fail("terms out of order or duplicated");
    if (!(car.mask() >> k & 1u))
      cur.fail(std::string(kModSym[k] ? kModSym[k] : "") + " has no slot in " + carrier_name(car));
    out.c[k] = ((coef % n) + n) % n;
    last_k = k;
    first = false;
  }
  return out;
}

ExactElem parse_exact(std::string_view text) {
  Cursor cur{text};

  cur.skip_ws();
  if (cur.peek() == '0') {
    std::size_t save = cur.pos;
    ++cur.pos;
    if (cur.done()) return ExactElem{};
    cur.pos = save;
  }

  ExactElem out{};
  int last_k = -1;
  bool first = true;
  while (true) {
    if (cur.done()) {
      if (first) cur.fail("empty element");
      break;
    }
    int sign = 1;
    if (first) {
      if (cur.peek() == '-') {
        sign = -1;
        ++cur.pos;
      }
    } else {
      char c = cur.peek();
      if (c == '+') {
        ++cur.pos;
      } else if (c == '-') {
        sign = -1;
        ++cur.pos;
      } else {
        cur.fail("expected '+' or '-'");
      }
    }
    cur.skip_ws();
    Rat coef = 1;
    bool have_num = std::isdigit((unsigned char)cur.peek());
    if (have_num) {
      std::string num = cur.digits();
      std::string den = "1";
      if (cur.peek() == '/') {
        ++cur.pos;
        den = cur.digits();
      }
      coef = Rat(Int(num), Int(den));
      if (coef.get_den() == 0) cur.fail("zero denominator");
      coef.canonicalize();
    }
    int k = cur.symbol(true);
    if (k < 0) {
      if (!have_num) cur.fail("expected coefficient or symbol");
      k = RE;
    }
    if (k <= last_k) cur.fail("terms out of order or duplicated");
    out.c[k] = sign < 0 ? Rat(-coef) : coef;
    last_k = k;
    first = false;
  }
  return out;
}

}  // namespace nc
