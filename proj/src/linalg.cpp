#include "nc/linalg.hpp"

#include <algorithm>
#include <set>

#include "nc/enumerate.hpp"

namespace nc {

namespace {

// Union of the unit bits (bit0 = i_F, bit1 = I) over a family's coordinates.
unsigned unit_bits(const Carrier& car) {
  unsigned bits = 0;
  for (int k = 0; k < 4; ++k)
    if (car.mask() >> k & 1u) bits |= (unsigned)k;
  return bits;
}

}  // namespace

void validate_spec(const SpaceSpec& spec) {
  if (!spec.element.is_modular() || !spec.base.is_modular())
    throw DomainError("space specs need modular carriers");
  if (spec.element.modulus != spec.base.modulus)
    throw DomainError("base modulus must match element modulus");
  if ((spec.base.mask() & ~spec.element.mask()) != 0)
    throw DomainError(carrier_name(spec.base) + " is not a subring of " +
                      carrier_name(spec.element));
  if (spec.rows <= 0 || spec.cols <= 0) throw ShapeError("space shape must be positive");
}

std::vector<int> quotient_symbols(const Carrier& element, const Carrier& base) {
  const unsigned q = unit_bits(element) & ~unit_bits(base);
  std::vector<int> out;
  for (int j = 0; j < 4; ++j)
    if ((element.mask() >> j & 1u) && ((unsigned)j & ~q) == 0) out.push_back(j);
  return out;
}

int dim_over_base(const SpaceSpec& spec) {
  validate_spec(spec);
  return spec.rows * spec.cols * (int)quotient_symbols(spec.element, spec.base).size();
}

std::vector<Mat<ModRing>> standard_basis(const SpaceSpec& spec) {
  validate_spec(spec);
  ModRing ring(spec.element);
  const auto syms = quotient_symbols(spec.element, spec.base);
  std::vector<Mat<ModRing>> basis;
  basis.reserve((std::size_t)dim_over_base(spec));
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c)
      for (int q : syms) {
        Mat<ModRing> m(ring, spec.rows, spec.cols);
        ModElem e{};
        e.c[q] = 1 % ring.modulus();
        m.at(r, c) = e;
        basis.push_back(m);
      }
  return basis;
}

Mat<ModRing> flatten(const SpaceSpec& spec, const Mat<ModRing>& m) {
  validate_spec(spec);
  if (m.rows() != spec.rows || m.cols() != spec.cols)
    throw ShapeError("matrix does not match the space shape");
  require_same(m.carrier(), spec.element);
  const auto syms = quotient_symbols(spec.element, spec.base);
  ModRing base_ring(spec.base);
  Mat<ModRing> v(base_ring, dim_over_base(spec), 1);
  int pos = 0;
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c)
      for (int q : syms) {
        ModElem s{};
        for (int b = 0; b < 4; ++b)
          if (spec.base.mask() >> b & 1u) s.c[b] = m.at(r, c).c[q | b];
        v.at(pos++, 0) = s;
      }
  return v;
}

Mat<ModRing> unflatten(const SpaceSpec& spec, const Mat<ModRing>& v) {
  validate_spec(spec);
  const int dim = dim_over_base(spec);
  if (v.rows() != dim || v.cols() != 1)
    throw ShapeError("expected a " + std::to_string(dim) + "-row column vector");
  require_same(v.carrier(), spec.base);
  const auto syms = quotient_symbols(spec.element, spec.base);
  ModRing ring(spec.element);
  Mat<ModRing> m(ring, spec.rows, spec.cols);
  int pos = 0;
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c)
      for (int q : syms) {
        const ModElem& s = v.at(pos++, 0);
        for (int b = 0; b < 4; ++b)
          if (spec.base.mask() >> b & 1u) m.at(r, c).c[q | b] = s.c[b];
      }
  return m;
}

namespace {

void require_field(const Carrier& car, const char* what) {
  if (!is_field_carrier(car))
    throw DomainError(std::string(what) + " needs a field carrier, got " + carrier_name(car));
}

}  // namespace

Rref rref(const Mat<ModRing>& A) {
  require_field(A.carrier(), "row reduction");
  const ModRing& ring = A.ring();
  Rref out{A, {}, 0};
  Mat<ModRing>& M = out.mat;
  int row = 0;
  for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < M.rows(); ++r)
      if (!ring.is_zero(M.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < M.cols(); ++c) std::swap(M.at(piv, c), M.at(row, c));
    auto inv = ring.inverse(M.at(row, col));
    if (!inv) throw std::logic_error("non-unit pivot over a field carrier");
    for (int c = 0; c < M.cols(); ++c) M.at(row, c) = ring.mul(*inv, M.at(row, c));
    for (int r = 0; r < M.rows(); ++r) {
      if (r == row || ring.is_zero(M.at(r, col))) continue;
      auto f = M.at(r, col);
      for (int c = 0; c < M.cols(); ++c)
        M.at(r, c) = ring.sub(M.at(r, c), ring.mul(f, M.at(row, c)));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

int rank(const Mat<ModRing>& A) { return rref(A).rank; }

std::optional<Mat<ModRing>> gauss_solve(const Mat<ModRing>& A, const Mat<ModRing>& b) {
  if (b.rows() != A.rows() || b.cols() != 1)
    throw ShapeError("right-hand side must be a " + std::to_string(A.rows()) +
                     "-row column vector");
  require_same(A.carrier(), b.carrier());
  const ModRing& ring = A.ring();
  Mat<ModRing> aug(ring, A.rows(), A.cols() + 1);
  for (int r = 0; r < A.rows(); ++r) {
    for (int c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols()) = b.at(r, 0);
  }
  Rref red = rref(aug);
  for (int p : red.pivot_cols)
    if (p == A.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  Mat<ModRing> x(ring, A.cols(), 1);
  for (int i = 0; i < (int)red.pivot_cols.size(); ++i)
    x.at(red.pivot_cols[(std::size_t)i], 0) = red.mat.at(i, A.cols());
  if (!(mat_mul(A, x) == b)) throw std::logic_error("solver output failed re-substitution");
  return x;
}

std::vector<Mat<ModRing>> nullspace_basis(const Mat<ModRing>& A) {
  const ModRing& ring = A.ring();
  Rref red = rref(A);
  std::vector<bool> is_pivot((std::size_t)A.cols(), false);
  for (int p : red.pivot_cols) is_pivot[(std::size_t)p] = true;
  std::vector<Mat<ModRing>> basis;
  for (int f = 0; f < A.cols(); ++f) {
    if (is_pivot[(std::size_t)f]) continue;
    Mat<ModRing> v(ring, A.cols(), 1);
    v.at(f, 0) = ring.one();
    for (int i = 0; i < (int)red.pivot_cols.size(); ++i)
      v.at(red.pivot_cols[(std::size_t)i], 0) = ring.neg(red.mat.at(i, f));
    basis.push_back(v);
  }
  return basis;
}

Poly<ModRing> char_poly(const Mat<ModRing>& A) {
  if (A.rows() != A.cols()) throw ShapeError("characteristic polynomial of a non-square matrix");
  if (A.rows() > kCharPolyBudget)
    throw BudgetError("characteristic polynomial budget is " + std::to_string(kCharPolyBudget) +
                      "x" + std::to_string(kCharPolyBudget));
  require_field(A.carrier(), "characteristic polynomial");
  const ModRing& ring = A.ring();
  const int k = A.rows();

  using P = Poly<ModRing>;
  std::vector<std::vector<P>> M((std::size_t)k, std::vector<P>((std::size_t)k, P(ring)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j)
        M[(std::size_t)i][(std::size_t)j] = P(ring, {ring.neg(A.at(i, j)), ring.one()});
      else
        M[(std::size_t)i][(std::size_t)j] = P(ring, {ring.neg(A.at(i, j))});
    }

  // First-row Laplace over polynomial entries.
  auto det = [&](auto&& self, const std::vector<std::vector<P>>& m) -> P {
    const std::size_t s = m.size();
    if (s == 1) return m[0][0];
    P acc(ring);
    for (std::size_t j = 0; j < s; ++j) {
      if (m[0][j].is_zero()) continue;
      std::vector<std::vector<P>> minor(s - 1, std::vector<P>(s - 1, P(ring)));
      for (std::size_t r = 1; r < s; ++r) {
        std::size_t mc = 0;
        for (std::size_t c = 0; c < s; ++c)
          if (c != j) minor[r - 1][mc++] = m[r][c];
      }
      P term = poly_mul(m[0][j], self(self, minor));
      acc = (j % 2 == 0) ? poly_add(acc, term) : poly_sub(acc, term);
    }
    return acc;
  };
  P p = det(det, M);
  if (p.deg() != k || !ring.is_one(p.leading()))
    throw std::logic_error("characteristic polynomial is not monic of full degree");
  return p;
}

namespace {

// Odometer over k-entry column vectors in enumeration order (first entry most
// significant); returns false after the last vector.
bool next_vector(Mat<ModRing>& v, const Enumerator& en, std::vector<std::size_t>& idx) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < en.size()) {
      v.at((int)pos, 0) = en.at(idx[pos]);
      return true;
    }
    idx[pos] = 0;
    v.at((int)pos, 0) = en.at(0);
  }
  return false;
}

bool is_zero_mat(const Mat<ModRing>& m) {
  for (const auto& e : m.entries())
    if (!m.ring().is_zero(e)) return false;
  return true;
}

}  // namespace

std::vector<EigenPair> eigen_search(const Mat<ModRing>& A, const Carrier& search,
                                    const ScanBudget& budget) {
  if (A.rows() != A.cols()) throw ShapeError("eigen search needs a square matrix");
  if (!search.is_modular()) throw DomainError("eigen search needs a finite search carrier");
  ModRing ring(search);
  const int k = A.rows();

  // Lift A into the search carrier.
  Mat<ModRing> B(ring, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) B.at(i, j) = embed_elem(A.carrier(), search, A.at(i, j));

  Enumerator en(search);
  if (en.size() > budget.max_order)
    throw BudgetError("eigen search over " + std::to_string(en.size()) +
                      " scalars exceeds budget " + std::to_string(budget.max_order));

  const bool field = is_field_carrier(search);
  if (!field) {
    // Kernel vectors by brute force: order^k per scalar.
    unsigned long long vecs = 1;
    for (int i = 0; i < k; ++i) {
      if (vecs > budget.max_pairs / en.size())
        throw BudgetError("eigen kernel enumeration exceeds pair budget " +
                          std::to_string(budget.max_pairs));
      vecs *= en.size();
    }
  }

  std::vector<EigenPair> out;
  for (unsigned long long ci = 0; ci < en.size(); ++ci) {
    const ModElem c = en.at(ci);
    Mat<ModRing> M = mat_sub(B, mat_scalar_mul(c, Mat<ModRing>::identity(ring, k)));
    std::vector<Mat<ModRing>> basis;
    if (field) {
      basis = nullspace_basis(M);
    } else {
      Mat<ModRing> v(ring, k, 1);
      std::vector<std::size_t> idx((std::size_t)k, 0);
      do {
        if (is_zero_mat(v)) continue;
        if (is_zero_mat(mat_mul(M, v))) basis.push_back(v);
      } while (next_vector(v, en, idx));
    }
    if (!basis.empty()) out.push_back({c, std::move(basis)});
  }
  return out;
}

ModElem linear_functional_real_sum(const Mat<ModRing>& v, const Carrier& base) {
  if (base.family != Family::ModPlain)
    throw DomainError("the real-sum functional maps into a mod-plain base");
  if (!v.carrier().is_modular() || v.carrier().modulus != base.modulus)
    throw DomainError("base modulus must match the vector's carrier");
  ModRing base_ring(base);
  long long sum = 0;
  for (const auto& e : v.entries()) sum = base_ring.mod(sum + e.c[RE]);
  return base_ring.scalar(sum);
}

ClosureVerdict closure_check(const std::vector<Mat<ModRing>>& V, const Carrier& scalar_carrier,
                             const std::vector<ModElem>& S, const ClosureFlags& flags) {
  ClosureVerdict verdict;
  if (V.empty()) {
    verdict.classification = "none";
    return verdict;
  }
  for (const auto& m : V) detail::require_same_shape(V.front(), m);
  const Carrier elem_car = V.front().carrier();
  if (flags.mul && V.front().rows() != V.front().cols())
    throw ShapeError("multiplicative closure needs square matrices");

  // Deterministic iteration and membership: enumeration (lexicographic) order.
  auto key = [](const Mat<ModRing>& m) { return m.entries(); };
  std::vector<Mat<ModRing>> vs = V;
  std::sort(vs.begin(), vs.end(),
            [&](const Mat<ModRing>& a, const Mat<ModRing>& b) { return key(a) < key(b); });
  std::set<std::vector<ModElem>> members;
  for (const auto& m : vs) members.insert(key(m));

  std::vector<ModElem> ss = S;
  std::sort(ss.begin(), ss.end());

  if (flags.scalar) {
    verdict.scalar_closed = true;
    for (const ModElem& s : ss) {
      const ModElem se = embed_elem(scalar_carrier, elem_car, s);
      for (const auto& v : vs) {
        Mat<ModRing> w = mat_scalar_mul(se, v);
        if (!members.count(key(w))) {
          verdict.scalar_closed = false;
          verdict.scalar_violation = {s, v};
          break;
        }
      }
      if (!*verdict.scalar_closed) break;
    }
  }
  if (flags.add) {
    verdict.add_closed = true;
    for (const auto& a : vs) {
      for (const auto& b : vs) {
        if (!members.count(key(mat_add(a, b)))) {
          verdict.add_closed = false;
          verdict.add_violation = {a, b};
          break;
        }
      }
      if (!*verdict.add_closed) break;
    }
  }
  if (flags.mul) {
    verdict.mul_closed = true;
    for (const auto& a : vs) {
      for (const auto& b : vs) {
        if (!members.count(key(mat_mul(a, b)))) {
          verdict.mul_closed = false;
          verdict.mul_violation = {a, b};
          break;
        }
      }
      if (!*verdict.mul_closed) break;
    }
  }

  if (verdict.scalar_closed.value_or(false)) {
    if (verdict.add_closed.value_or(false)) {
      verdict.classification =
          verdict.mul_closed.value_or(false) ? "strong-linear-algebra" : "set-linear-algebra";
    } else {
      verdict.classification = "set-vector-space";
    }
  } else {
    verdict.classification = "none";
  }
  return verdict;
}

std::string sum_verdict_name(SumVerdict v) {
  switch (v) {
    case SumVerdict::Direct:
      return "direct";
    case SumVerdict::PseudoDirect:
      return "pseudo-direct";
    default:
      return "neither";
  }
}

DirectSumResult check_direct_sum(const std::vector<std::vector<Mat<ModRing>>>& bases,
                                 const SpaceSpec& spec) {
  validate_spec(spec);
  require_field(spec.base, "direct sum analysis");
  DirectSumResult res;
  res.ambient_dim = dim_over_base(spec);
  ModRing base_ring(spec.base);

  // Flatten every subspace basis into columns over the base field.
  std::vector<std::vector<Mat<ModRing>>> cols(bases.size());
  int total = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (const auto& m : bases[i]) cols[i].push_back(flatten(spec, m));
    total += (int)cols[i].size();
  }

  auto columns_matrix = [&](std::initializer_list<std::size_t> which) {
    int n = 0;
    for (std::size_t i : which) n += (int)cols[i].size();
    Mat<ModRing> M(base_ring, res.ambient_dim, std::max(n, 1));
    int c = 0;
    for (std::size_t i : which)
      for (const auto& v : cols[i]) {
        for (int r = 0; r < res.ambient_dim; ++r) M.at(r, c) = v.at(r, 0);
        ++c;
      }
    return std::pair(M, n);
  };

  // Joint span.
  {
    Mat<ModRing> M(base_ring, res.ambient_dim, std::max(total, 1));
    int c = 0;
    for (const auto& group : cols)
      for (const auto& v : group) {
        for (int r = 0; r < res.ambient_dim; ++r) M.at(r, c) = v.at(r, 0);
        ++c;
      }
    res.span_rank = total == 0 ? 0 : rank(M);
  }

  // Pairwise intersections; rank([Bi|Bj]) < rank(Bi) + rank(Bj) iff nontrivial.
  for (std::size_t i = 0; i < bases.size() && !res.intersection_witness; ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (cols[i].empty() || cols[j].empty()) continue;
      auto [Mi, ni] = columns_matrix({i});
      auto [Mj, nj] = columns_matrix({j});
      auto [Mij, nij] = columns_matrix({i, j});
      if (rank(Mij) == rank(Mi) + rank(Mj)) continue;
      // Some joint nullspace vector mixes the two blocks; extract the common
      // ambient vector from its Bi part.
      for (const auto& eta : nullspace_basis(Mij)) {
        Mat<ModRing> alpha(base_ring, ni, 1);
        for (int r = 0; r < ni; ++r) alpha.at(r, 0) = eta.at(r, 0);
        Mat<ModRing> w = mat_mul(Mi, alpha);
        if (!is_zero_mat(w)) {
          res.intersection_witness = {(int)i, (int)j, unflatten(spec, w)};
          break;
        }
      }
      if (!res.intersection_witness)
        throw std::logic_error("rank deficit without a mixing nullspace vector");
      break;
    }

  if (res.span_rank < res.ambient_dim)
    res.verdict = SumVerdict::Neither;
  else
    res.verdict = res.intersection_witness ? SumVerdict::PseudoDirect : SumVerdict::Direct;
  return res;
}

InvarianceResult invariant_subspace_check(const Mat<ModRing>& T,
                                          const std::vector<Mat<ModRing>>& w_basis) {
  if (T.rows() != T.cols()) throw ShapeError("invariance check needs a square matrix");
  require_field(T.carrier(), "invariance check");
  if (w_basis.empty()) return {true, std::nullopt};  // the zero subspace
  Mat<ModRing> W(T.ring(), T.cols(), (int)w_basis.size());
  for (std::size_t j = 0; j < w_basis.size(); ++j) {
    const auto& w = w_basis[j];
    if (w.rows() != T.cols() || w.cols() != 1)
      throw ShapeError("basis vectors must be " + std::to_string(T.cols()) + "-row columns");
    require_same(w.carrier(), T.carrier());
    for (int r = 0; r < T.cols(); ++r) W.at(r, (int)j) = w.at(r, 0);
  }
  for (const auto& w : w_basis) {
    Mat<ModRing> img = mat_mul(T, w);
    if (!gauss_solve(W, img)) return {false, img};
  }
  return {true, std::nullopt};
}

}  // namespace nc
