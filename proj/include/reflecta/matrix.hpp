#pragma once

#include <cassert>
#include <map>
#include <vector>

#include "reflecta/numeric.hpp"
#include "reflecta/span_basis.hpp"

namespace reflecta {

// Dense rational matrix, row-major.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}
  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }
  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline RatMat mat_mul(const RatMat& x, const RatMat& y) {
  assert(x.cols == y.rows);
  RatMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& w = y.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

inline RatMat mat_add(const RatMat& x, const RatMat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  RatMat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline RatMat mat_scale(const RatMat& x, const Rational& c) {
  RatMat out = x;
  for (auto& v : out.a) v *= c;
  return out;
}

inline RatMat mat_sub(const RatMat& x, const RatMat& y) { return mat_add(x, mat_scale(y, Rational(-1))); }

inline RatMat mat_transpose(const RatMat& x) {
  RatMat out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

inline RatMat mat_bracket(const RatMat& x, const RatMat& y) {
  return mat_sub(mat_mul(x, y), mat_mul(y, x));
}

inline Rational mat_trace(const RatMat& x) {
  Rational t(0);
  for (int i = 0; i < x.rows && i < x.cols; ++i) t += x.at(i, i);
  return t;
}

inline bool mat_is_zero(const RatMat& x) {
  for (const auto& v : x.a)
    if (v != 0) return false;
  return true;
}

inline bool mat_is_scalar(const RatMat& x, Rational* scalar = nullptr) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (i != j && x.at(i, j) != 0) return false;
      if (i == j && x.at(i, j) != x.at(0, 0)) return false;
    }
  if (scalar) *scalar = x.rows ? x.at(0, 0) : Rational(0);
  return true;
}

// Flatten a square matrix into the row-major coordinate vector used by
// matrix-space SpanBasis computations.
inline SparseVecZ mat_flatten(const RatMat& x) {
  std::map<int32_t, Rational> m;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x.at(i, j) != 0) m[i * x.cols + j] = x.at(i, j);
  return SparseVecZ::from_rationals(m);
}

// Integer-scaled sparse matrix: entries value = num / den.  Used by the
// closure kernels, where overall scaling is irrelevant to spans.
struct IMatSparse {
  int n = 0;
  Int den = 1;
  // CSR-ish: per row, sorted (col, num) pairs.
  std::vector<std::vector<std::pair<int32_t, Int>>> row_entries;

  static IMatSparse from_rat(const RatMat& m) {
    assert(m.rows == m.cols);
    IMatSparse out;
    out.n = m.rows;
    out.row_entries.resize(m.rows);
    Int den = 1;
    for (const auto& v : m.a)
      if (v != 0) den = boost::multiprecision::lcm(den, denominator(v));
    out.den = den;
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        const Rational& v = m.at(i, j);
        if (v != 0) out.row_entries[i].push_back({j, numerator(v) * (den / denominator(v))});
      }
    return out;
  }
};

// Dense float matrix at working precision.
struct ApproxMat {
  int rows = 0, cols = 0;
  std::vector<ApproxScalar> a;

  ApproxMat() = default;
  ApproxMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, make_approx(0)) {}
  ApproxScalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const ApproxScalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static ApproxMat identity(int n) {
    ApproxMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = make_approx(1);
    return m;
  }
  static ApproxMat from_rat(const RatMat& m) {
    ApproxMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = approx_from_rational(m.a[i]);
    return out;
  }
};

inline ApproxMat amat_mul(const ApproxMat& x, const ApproxMat& y) {
  assert(x.cols == y.rows);
  ApproxMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

inline ApproxMat amat_sub(const ApproxMat& x, const ApproxMat& y) {
  ApproxMat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

// Largest absolute entry, for relation-residue checks.
inline ApproxScalar amat_max_abs(const ApproxMat& x) {
  ApproxScalar m = make_approx(0);
  for (const auto& v : x.a) {
    ApproxScalar av = abs(v);
    if (av > m) m = av;
  }
  return m;
}

}  // namespace reflecta
