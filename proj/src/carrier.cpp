#include "nc/carrier.hpp"

namespace nc {

Carrier make_carrier(Family family, std::optional<long long> modulus) {
  if (family == Family::ExactNC) {
    if (modulus.has_value())
      throw CarrierError("exact carrier takes no modulus");
    return Carrier{family, 0};
  }
  if (!modulus.has_value())
    throw CarrierError("modular carrier requires a modulus");
  if (*modulus < 2)
    throw CarrierError("modulus must be >= 2, got " + std::to_string(*modulus));
  return Carrier{family, *modulus};
}

unsigned long long carrier_order(const Carrier& c) {
  if (!c.is_modular())
    throw DomainError("exact carrier is infinite");
  unsigned long long order = 1;
  const unsigned long long n = (unsigned long long)c.modulus;
  for (int i = 0; i < c.coords(); ++i) {
    if (order > ~0ull / n)
      throw BudgetError("carrier order overflows 64 bits");
    order *= n;
  }
  return order;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::ExactNC: return "exact";
    case Family::ModPlain: return "mod-plain";
    case Family::ModComplex: return "mod-complex";
    case Family::ModNeutro: return "mod-neutro";
    case Family::ModNeutroComplex: return "mod-neutro-complex";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "exact") return Family::ExactNC;
  if (name == "mod-plain") return Family::ModPlain;
  if (name == "mod-complex") return Family::ModComplex;
  if (name == "mod-neutro") return Family::ModNeutro;
  if (name == "mod-neutro-complex") return Family::ModNeutroComplex;
  return std::nullopt;
}

std::string carrier_name(const Carrier& c) {
  if (!c.is_modular()) return family_name(c.family);
  return family_name(c.family) + "(" + std::to_string(c.modulus) + ")";
}

void require_same(const Carrier& a, const Carrier& b) {
  if (!(a == b))
    throw MixedCarrierError("carriers differ: " + carrier_name(a) + " vs " + carrier_name(b));
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace nc
