#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nc/matrix.hpp"
#include "nc/poly.hpp"

namespace nc {

// A space of rows x cols matrices with entries in `element`, viewed as a
// module over `base` scalars. `base` must have the same modulus and a
// coordinate set contained in the element family's (e.g. Z_p under C(Z_p)).
struct SpaceSpec {
  Carrier element;
  int rows = 1;
  int cols = 1;
  Carrier base;
};

// Throws DomainError/ShapeError when the spec is malformed.
void validate_spec(const SpaceSpec& spec);

// rows * cols * (element coordinate count / base coordinate count).
int dim_over_base(const SpaceSpec& spec);

// The coordinate indices spanning the element carrier over the base: those
// whose symbol uses only the units absent from the base family. Ascending.
std::vector<int> quotient_symbols(const Carrier& element, const Carrier& base);

// Unit matrices times each quotient symbol, position-major (row-major entry
// order) then symbol order. Size = dim_over_base.
std::vector<Mat<ModRing>> standard_basis(const SpaceSpec& spec);

// Isomorphism of base-modules between the spec's space and base^dim: column
// vector of base-carrier coordinates (position-major, then symbol). unflatten
// is its inverse.
Mat<ModRing> flatten(const SpaceSpec& spec, const Mat<ModRing>& m);
Mat<ModRing> unflatten(const SpaceSpec& spec, const Mat<ModRing>& v);

// --- elimination over field carriers ---------------------------------------

struct Rref {
  Mat<ModRing> mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form; requires a field carrier.
Rref rref(const Mat<ModRing>& A);

int rank(const Mat<ModRing>& A);

// One solution of A*x = b (free variables 0), re-verified; absent when the
// system is inconsistent. b is a rows x 1 column.
std::optional<Mat<ModRing>> gauss_solve(const Mat<ModRing>& A, const Mat<ModRing>& b);

// Basis of the solution space of A*x = 0 (cols x 1 columns); size = nullity.
std::vector<Mat<ModRing>> nullspace_basis(const Mat<ModRing>& A);

inline constexpr int kCharPolyBudget = 5;

// det(x*I - A) by polynomial-entry Laplace expansion; monic, degree = size.
// Field carrier, size <= 5.
Poly<ModRing> char_poly(const Mat<ModRing>& A);

// --- eigen search -----------------------------------------------------------

struct EigenPair {
  ModElem value;
  // Over a field search carrier: a nullspace basis of (A - value*I).
  // Otherwise: every nonzero kernel vector, in enumeration order.
  std::vector<Mat<ModRing>> basis;
};

// Tests every scalar of `search` (same modulus, coordinate superset of A's
// carrier); returns scalars with nontrivial kernel, in enumeration order.
std::vector<EigenPair> eigen_search(const Mat<ModRing>& A, const Carrier& search,
                                    const ScanBudget& budget = {});

// Sum of the re-coordinates of all entries, as a base (ModPlain) scalar.
ModElem linear_functional_real_sum(const Mat<ModRing>& v, const Carrier& base);

// --- closure taxonomy -------------------------------------------------------

struct ClosureFlags {
  bool scalar = true;
  bool add = true;
  bool mul = true;
};

struct ClosureVerdict {
  // Unset when the corresponding flag was not requested.
  std::optional<bool> scalar_closed, add_closed, mul_closed;
  std::optional<std::pair<ModElem, Mat<ModRing>>> scalar_violation;
  std::optional<std::pair<Mat<ModRing>, Mat<ModRing>>> add_violation, mul_violation;
  // "none" | "set-vector-space" | "set-linear-algebra" | "strong-linear-algebra"
  std::string classification;
};

// Exhaustive closure check of V under the scalar action of S, addition, and
// internal multiplication; first violations in enumeration order.
ClosureVerdict closure_check(const std::vector<Mat<ModRing>>& V, const Carrier& scalar_carrier,
                             const std::vector<ModElem>& S, const ClosureFlags& flags = {});

// --- subspace relations -----------------------------------------------------

enum class SumVerdict { Direct, PseudoDirect, Neither };

std::string sum_verdict_name(SumVerdict v);

struct DirectSumResult {
  SumVerdict verdict = SumVerdict::Neither;
  int span_rank = 0;
  int ambient_dim = 0;
  // (i, j, w): a nonzero ambient vector in span(bases[i]) and span(bases[j]).
  std::optional<std::tuple<int, int, Mat<ModRing>>> intersection_witness;
};

// Direct: pairwise intersections {0} and the joint span is the whole ambient.
// PseudoDirect: spans, but some pairwise intersection is nontrivial.
// Neither: does not span. Field base carrier required.
DirectSumResult check_direct_sum(const std::vector<std::vector<Mat<ModRing>>>& bases,
                                 const SpaceSpec& spec);

struct InvarianceResult {
  bool invariant = false;
  std::optional<Mat<ModRing>> violator;  // first T*w outside span(W)
};

// True iff T*w lies in span(w_basis) for every basis vector w (columns).
InvarianceResult invariant_subspace_check(const Mat<ModRing>& T,
                                          const std::vector<Mat<ModRing>>& w_basis);

}  // namespace nc
