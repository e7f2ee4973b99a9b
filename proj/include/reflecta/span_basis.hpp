#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "reflecta/numeric.hpp"

namespace reflecta {

// Sparse vector over Z: strictly increasing indices, nonzero values.
// Basis rows are kept content-free (gcd of entries 1) with positive
// leading entry; the mathematical RREF row is the stored row divided by
// its leading entry, so the stored form is a canonical integer scaling
// of the unique reduced row-echelon basis of the subspace.
struct SparseVecZ {
  std::vector<int32_t> idx;
  std::vector<Int> val;

  bool empty() const { return idx.empty(); }
  size_t nnz() const { return idx.size(); }
  int32_t lead_index() const { return idx.front(); }

  static SparseVecZ from_map(const std::map<int32_t, Int>& m);
  static SparseVecZ from_rationals(const std::map<int32_t, Rational>& m);
  static SparseVecZ unit(int32_t i);

  // Divide out the content and make the leading entry positive.
  void canonicalize();
  Rational value_at(int32_t i) const;
  bool operator==(const SparseVecZ& o) const { return idx == o.idx && val == o.val; }
};

SparseVecZ sv_add(const SparseVecZ& a, const SparseVecZ& b);
SparseVecZ sv_scale(const SparseVecZ& a, const Int& c);

// Incremental reduced row-echelon basis of a subspace of Q^ambient.
// Insertion maintains full reduction (pivot columns are zero in every
// other row), so two SpanBasis objects spanning the same subspace have
// identical rows regardless of insertion order.
class SpanBasis {
 public:
  explicit SpanBasis(int ambient) : ambient_(ambient), row_of_pivot_(ambient, -1) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const SparseVecZ& row(int i) const { return rows_[i]; }
  int32_t pivot(int i) const { return rows_[i].lead_index(); }
  int row_with_pivot(int32_t col) const { return row_of_pivot_[col]; }

  // Fully reduce v; the residue is empty iff v lies in the span.
  SparseVecZ reduce(const SparseVecZ& v) const;
  // As reduce, and writes the coordinates of the reduced-away part with
  // respect to the leading-1 rational rows.
  SparseVecZ reduce_with_coords(const SparseVecZ& v, std::vector<Rational>* coords) const;

  bool contains(const SparseVecZ& v) const { return reduce(v).empty(); }
  std::optional<std::vector<Rational>> coordinates(const SparseVecZ& v) const;

  // Insert v if independent; returns true when the dimension grew.
  bool insert(const SparseVecZ& v);
  // Insert an already fully reduced nonzero residue.
  void insert_residue(SparseVecZ r);

  // Leading-1 rational form of row i (dense).
  std::vector<Rational> rational_row(int i) const;

  bool operator==(const SpanBasis& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  int ambient_;
  std::vector<SparseVecZ> rows_;  // sorted by pivot column
  std::vector<int> row_of_pivot_;
};

// Canonical basis of {x : row . x = 0 for every constraint row}.
SpanBasis nullspace_of_rows(const std::vector<SparseVecZ>& rows, int ambient);

}  // namespace reflecta
