#include "nc/matrix.hpp"

#include "nc/enumerate.hpp"

namespace nc {

std::optional<Mat<ModRing>> mat_inverse(const Mat<ModRing>& A) {
  if (A.rows() != A.cols()) throw ShapeError("inverse of a non-square matrix");
  if (!is_field_carrier(A.carrier()))
    throw DomainError("matrix inverse requires a field carrier, got " +
                      carrier_name(A.carrier()));
  const ModRing& ring = A.ring();
  const int k = A.rows();

  // Augmented [A | I], reduce to [I | A^-1].
  Mat<ModRing> L = A;
  Mat<ModRing> Rm = Mat<ModRing>::identity(ring, k);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (!ring.is_zero(L.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int c = 0; c < k; ++c) {
        std::swap(L.at(piv, c), L.at(col, c));
        std::swap(Rm.at(piv, c), Rm.at(col, c));
      }
    auto inv = ring.inverse(L.at(col, col));
    if (!inv) return std::nullopt;  // non-unit pivot cannot happen over a field
    for (int c = 0; c < k; ++c) {
      L.at(col, c) = ring.mul(*inv, L.at(col, c));
      Rm.at(col, c) = ring.mul(*inv, Rm.at(col, c));
    }
    for (int r = 0; r < k; ++r) {
      if (r == col || ring.is_zero(L.at(r, col))) continue;
      auto f = L.at(r, col);
      for (int c = 0; c < k; ++c) {
        L.at(r, c) = ring.sub(L.at(r, c), ring.mul(f, L.at(col, c)));
        Rm.at(r, c) = ring.sub(Rm.at(r, c), ring.mul(f, Rm.at(col, c)));
      }
    }
  }
  if (!(mat_mul(A, Rm) == Mat<ModRing>::identity(ring, k)))
    throw std::logic_error("matrix inverse failed re-verification");
  return Rm;
}

namespace {

// Advances the entries of m through the full carrier in odometer order;
// returns false after the last matrix.
bool next_matrix(Mat<ModRing>& m, const Enumerator& en, std::vector<std::size_t>& idx) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < en.size()) {
      m.entries()[pos] = en.at(idx[pos]);
      return true;
    }
    idx[pos] = 0;
    m.entries()[pos] = en.at(0);
  }
  return false;
}

bool fits_mask(const Mat<ModRing>& m, const std::vector<std::vector<bool>>& mask) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!mask[r][c] && !m.ring().is_zero(m.at(r, c))) return false;
  return true;
}

}  // namespace

MatrixIdealResult check_matrix_ideal(const std::vector<std::vector<bool>>& mask,
                                     const Carrier& car, IdealSide side,
                                     const ScanBudget& budget) {
  const std::size_t k = mask.size();
  if (k == 0 || k > kMatrixIdealSizeCap)
    throw BudgetError("matrix ideal check supports sizes 1.." +
                      std::to_string(kMatrixIdealSizeCap));
  for (const auto& row : mask)
    if (row.size() != k) throw ShapeError("pattern mask must be square");

  const unsigned long long order = carrier_order(car);
  if (order > kMatrixIdealOrderCap)
    throw BudgetError("matrix ideal check supports carrier orders up to " +
                      std::to_string(kMatrixIdealOrderCap));
  (void)budget;

  ModRing ring(car);
  Enumerator en(car);
  const int ki = (int)k;

  // The pattern set is an additive subgroup by construction (coordinatewise),
  // so only absorption needs checking.
  auto absorbs = [&](bool left) -> std::optional<std::pair<Mat<ModRing>, Mat<ModRing>>> {
    Mat<ModRing> t(ring, ki, ki);
    std::vector<std::size_t> tidx((std::size_t)ki * ki, 0);
    for (auto& e : t.entries()) e = en.at(0);
    do {
      if (!fits_mask(t, mask)) continue;
      Mat<ModRing> r(ring, ki, ki);
      std::vector<std::size_t> ridx((std::size_t)ki * ki, 0);
      for (auto& e : r.entries()) e = en.at(0);
      do {
        Mat<ModRing> prod = left ? mat_mul(r, t) : mat_mul(t, r);
        if (!fits_mask(prod, mask)) return std::make_pair(r, t);
      } while (next_matrix(r, en, ridx));
    } while (next_matrix(t, en, tidx));
    return std::nullopt;
  };

  MatrixIdealResult res;
  if (side == IdealSide::Left || side == IdealSide::TwoSided) {
    if (auto cex = absorbs(true)) {
      res.ok = false;
      res.counterexample = cex;
      return res;
    }
  }
  if (side == IdealSide::Right || side == IdealSide::TwoSided) {
    if (auto cex = absorbs(false)) {
      res.ok = false;
      res.counterexample = cex;
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace nc
