#include "nc/enumerate.hpp"

namespace nc {

Enumerator::Enumerator(const Carrier& car) : car_(car) {
  if (!car.is_modular())
    throw DomainError("cannot enumerate the exact (infinite) carrier");
  n_ = car.modulus;
  size_ = carrier_order(car);
  for (int i = 0; i < 4; ++i)
    if (car.mask() >> i & 1u) active_[k_++] = i;
}

ModElem Enumerator::at(unsigned long long index) const {
  if (index >= size_)
    throw DomainError("enumeration index out of range");
  ModElem x{};
  for (int d = k_ - 1; d >= 0; --d) {
    x.c[active_[d]] = (long long)(index % (unsigned long long)n_);
    index /= (unsigned long long)n_;
  }
  return x;
}

unsigned long long Enumerator::index_of(const ModElem& x) const {
  unsigned long long idx = 0;
  for (int d = 0; d < k_; ++d)
    idx = idx * (unsigned long long)n_ + (unsigned long long)x.c[active_[d]];
  return idx;
}

}  // namespace nc
