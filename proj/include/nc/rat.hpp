#pragma once

#include <gmpxx.h>

#include <string>

namespace nc {

using Rat = mpq_class;
using Int = mpz_class;

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// "p" for integers, "p/q" otherwise (always canonical, sign on the numerator).
inline std::string rat_str(const Rat& r) {
  if (rat_is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace nc
