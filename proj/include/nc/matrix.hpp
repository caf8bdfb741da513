#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nc/scan.hpp"

namespace nc {

// Rectangular matrix over one carrier; row-major entries.
template <class R>
class Mat {
 public:
  using Elem = typename R::Elem;

  Mat(const R& ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols), a_((std::size_t)rows * cols, ring.zero()) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
  }

  static Mat identity(const R& ring, int k) {
    Mat m(ring, k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = ring.one();
    return m;
  }

  const R& ring() const { return ring_; }
  const Carrier& carrier() const { return ring_.carrier(); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int r, int c) { return a_[(std::size_t)r * cols_ + c]; }
  const Elem& at(int r, int c) const { return a_[(std::size_t)r * cols_ + c]; }
  const std::vector<Elem>& entries() const { return a_; }
  std::vector<Elem>& entries() { return a_; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && carrier() == o.carrier() && a_ == o.a_;
  }

 private:
  R ring_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

namespace detail {
// Shape errors precede carrier errors in reporting.
template <class R>
void require_same_shape(const Mat<R>& A, const Mat<R>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw ShapeError("matrix shapes differ: " + std::to_string(A.rows()) + "x" +
                     std::to_string(A.cols()) + " vs " + std::to_string(B.rows()) + "x" +
                     std::to_string(B.cols()));
  require_same(A.carrier(), B.carrier());
}
}  // namespace detail

template <class R>
Mat<R> mat_add(const Mat<R>& A, const Mat<R>& B) {
  detail::require_same_shape(A, B);
  Mat<R> C = A;
  for (std::size_t i = 0; i < C.entries().size(); ++i)
    C.entries()[i] = A.ring().add(A.entries()[i], B.entries()[i]);
  return C;
}

template <class R>
Mat<R> mat_neg(const Mat<R>& A) {
  Mat<R> C = A;
  for (auto& v : C.entries()) v = A.ring().neg(v);
  return C;
}

template <class R>
Mat<R> mat_sub(const Mat<R>& A, const Mat<R>& B) {
  return mat_add(A, mat_neg(B));
}

template <class R>
Mat<R> mat_mul(const Mat<R>& A, const Mat<R>& B) {
  if (A.cols() != B.rows())
    throw ShapeError("inner dimensions differ: " + std::to_string(A.cols()) + " vs " +
                     std::to_string(B.rows()));
  require_same(A.carrier(), B.carrier());
  const R& ring = A.ring();
  Mat<R> C(ring, A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      const auto& aik = A.at(i, k);
      if (ring.is_zero(aik)) continue;
      for (int j = 0; j < B.cols(); ++j)
        C.at(i, j) = ring.add(C.at(i, j), ring.mul(aik, B.at(k, j)));
    }
  return C;
}

template <class R>
Mat<R> mat_scalar_mul(const typename R::Elem& s, const Mat<R>& A) {
  Mat<R> C = A;
  for (auto& v : C.entries()) v = A.ring().mul(s, v);
  return C;
}

template <class R>
Mat<R> transpose(const Mat<R>& A) {
  Mat<R> T(A.ring(), A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
  return T;
}

inline constexpr int kDetBudget = 6;

// Laplace cofactor expansion along the first row; valid over any commutative
// carrier (no division), budgeted at 6x6.
template <class R>
typename R::Elem mat_det(const Mat<R>& A) {
  if (A.rows() != A.cols()) throw ShapeError("determinant of a non-square matrix");
  if (A.rows() > kDetBudget)
    throw BudgetError("determinant budget is " + std::to_string(kDetBudget) + "x" +
                      std::to_string(kDetBudget));
  const R& ring = A.ring();
  const int k = A.rows();
  if (k == 1) return A.at(0, 0);
  typename R::Elem det = ring.zero();
  for (int j = 0; j < k; ++j) {
    if (ring.is_zero(A.at(0, j))) continue;
    Mat<R> minor(ring, k - 1, k - 1);
    for (int r = 1; r < k; ++r) {
      int mc = 0;
      for (int c = 0; c < k; ++c)
        if (c != j) minor.at(r - 1, mc++) = A.at(r, c);
    }
    auto term = ring.mul(A.at(0, j), mat_det(minor));
    det = (j % 2 == 0) ? ring.add(det, term) : ring.sub(det, term);
  }
  return det;
}

// Gauss-Jordan inverse over a field carrier. Absent iff singular. The product
// A * A^-1 is re-verified before returning.
std::optional<Mat<ModRing>> mat_inverse(const Mat<ModRing>& A);

// --- one-sided ideal patterns in full matrix rings -------------------------

struct MatrixIdealResult {
  bool ok = false;
  // (r, t): ring matrix and pattern matrix whose product escapes the pattern.
  std::optional<std::pair<Mat<ModRing>, Mat<ModRing>>> counterexample;
};

inline constexpr int kMatrixIdealSizeCap = 2;
inline constexpr unsigned long long kMatrixIdealOrderCap = 16;

// Exhaustively checks whether the set of k x k matrices supported on `mask`
// absorbs multiplication by every matrix of the full k x k ring on the given
// side(s). mask is row-major, true = free position.
MatrixIdealResult check_matrix_ideal(const std::vector<std::vector<bool>>& mask,
                                     const Carrier& car, IdealSide side,
                                     const ScanBudget& budget = {});

}  // namespace nc
