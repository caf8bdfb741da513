#include "nc/fuzzy.hpp"

#include "nc/error.hpp"

namespace nc {

namespace {

void check_range(const FuzzyNC& x) {
  for (const Rat& v : x.c)
    if (v < 0 || v > 1)
      throw DomainError("fuzzy coordinate outside [0,1]: " + v.get_str());
}

}  // namespace

FuzzyNC fuzzy_make(Rat re, Rat im, Rat neut, Rat imneut) {
  FuzzyNC x{{std::move(re), std::move(im), std::move(neut), std::move(imneut)}};
  check_range(x);
  return x;
}

FuzzyNC fuzzy_meet(const FuzzyNC& x, const FuzzyNC& y) {
  check_range(x);
  check_range(y);
  FuzzyNC z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] < y.c[k] ? x.c[k] : y.c[k];
  return z;
}

FuzzyNC fuzzy_join(const FuzzyNC& x, const FuzzyNC& y) {
  check_range(x);
  check_range(y);
  FuzzyNC z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] > y.c[k] ? x.c[k] : y.c[k];
  return z;
}

}  // namespace nc
