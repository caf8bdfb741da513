#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad carrier construction: modulus < 2, modulus supplied for the exact family, ...
struct CarrierError : Error {
  using Error::Error;
};

// Two values with unequal carrier descriptors met in one operation.
struct MixedCarrierError : Error {
  using Error::Error;
};

// Matrix / vector dimensions do not line up. Reported before carrier mismatches.
struct ShapeError : Error {
  using Error::Error;
};

// Input text violates the element / polynomial grammar.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t position) : Error(what), pos(position) {}
};

// Operation undefined for this carrier (elimination over a non-field, enumeration
// of the exact carrier, division by a non-unit leading coefficient, ...).
struct DomainError : Error {
  using Error::Error;
};

// An exhaustive computation would exceed its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace nc
