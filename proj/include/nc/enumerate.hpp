#pragma once

#include "nc/element.hpp"

namespace nc {

// Bijection index <-> element for a finite carrier, in lexicographic
// (re, im, neut, imneut) order. Index 0 is the zero element.
class Enumerator {
 public:
  explicit Enumerator(const Carrier& car);  // DomainError for the exact family

  const Carrier& carrier() const { return car_; }
  unsigned long long size() const { return size_; }
  ModElem at(unsigned long long index) const;
  unsigned long long index_of(const ModElem& x) const;

 private:
  Carrier car_;
  long long n_ = 0;
  unsigned long long size_ = 0;
  int active_[4] = {};  // active coordinate slots, most significant first
  int k_ = 0;
};

}  // namespace nc
