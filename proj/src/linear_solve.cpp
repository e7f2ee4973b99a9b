#include "reflecta/linear_solve.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace reflecta {
namespace {

bool is_diagonal(const RatMat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return true;
}

std::vector<RatMat> unflatten_basis(const SpanBasis& sol, int d) {
  std::vector<RatMat> out;
  for (int r = 0; r < sol.dim(); ++r) {
    std::vector<Rational> row = sol.rational_row(r);
    RatMat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = row[i * d + j];
    out.push_back(std::move(m));
  }
  return out;
}

// Re-RREF a set of solution vectors given in a compressed coordinate
// set, expanded back to full d*d coordinates.
SpanBasis expand_to_full(const SpanBasis& compressed,
                         const std::vector<int32_t>& coord_of, int full_dim) {
  SpanBasis full(full_dim);
  for (int r = 0; r < compressed.dim(); ++r) {
    const SparseVecZ& v = compressed.row(r);
    std::map<int32_t, Int> m;
    for (size_t k = 0; k < v.idx.size(); ++k) m[coord_of[v.idx[k]]] = v.val[k];
    full.insert(SparseVecZ::from_map(m));
  }
  return full;
}

}  // namespace

std::vector<RatMat> solve_commutant(const std::vector<RatMat>& mats) {
  assert(!mats.empty());
  const int d = mats[0].rows;

  std::vector<const RatMat*> diag, rest;
  for (const auto& m : mats) (is_diagonal(m) ? diag : rest).push_back(&m);

  // Coordinates (i,j) allowed by the diagonal constraints: every
  // diagonal matrix D satisfies D_ii = D_jj.
  std::vector<int32_t> coord_of;  // compressed -> i*d+j
  std::vector<int32_t> comp(static_cast<size_t>(d) * d, -1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      bool ok = true;
      for (const RatMat* m : diag)
        if (m->at(i, i) != m->at(j, j)) {
          ok = false;
          break;
        }
      if (ok) {
        comp[i * d + j] = static_cast<int32_t>(coord_of.size());
        coord_of.push_back(i * d + j);
      }
    }

  // Constraint rows of (C M - M C)_{ij} = 0 over the compressed unknowns.
  std::vector<SparseVecZ> rows;
  for (const RatMat* mp : rest) {
    const RatMat& m = *mp;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::map<int32_t, Rational> row;
        for (int k = 0; k < d; ++k) {
          if (m.at(k, j) != 0 && comp[i * d + k] >= 0) row[comp[i * d + k]] += m.at(k, j);
          if (m.at(i, k) != 0 && comp[k * d + j] >= 0) row[comp[k * d + j]] -= m.at(i, k);
        }
        SparseVecZ v = SparseVecZ::from_rationals(row);
        if (!v.empty()) rows.push_back(std::move(v));
      }
  }
  SpanBasis kernel = nullspace_of_rows(rows, static_cast<int>(coord_of.size()));
  return unflatten_basis(expand_to_full(kernel, coord_of, d * d), d);
}

std::vector<RatMat> solve_invariant_form(const std::vector<RatMat>& mats) {
  assert(!mats.empty());
  const int d = mats[0].rows;
  std::vector<SparseVecZ> rows;
  for (const RatMat& m : mats) {
    // (M^T G + G M)_{ij} = sum_k M_ki G_kj + G_ik M_kj.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::map<int32_t, Rational> row;
        for (int k = 0; k < d; ++k) {
          if (m.at(k, i) != 0) row[k * d + j] += m.at(k, i);
          if (m.at(k, j) != 0) row[i * d + k] += m.at(k, j);
        }
        SparseVecZ v = SparseVecZ::from_rationals(row);
        if (!v.empty()) rows.push_back(std::move(v));
      }
  }
  SpanBasis kernel = nullspace_of_rows(rows, d * d);
  return unflatten_basis(kernel, d);
}

std::vector<RatMat> solve_group_invariant_form(const std::vector<RatMat>& mats,
                                               const std::vector<Rational>& chi) {
  assert(!mats.empty() && mats.size() == chi.size());
  const int d = mats[0].rows;
  std::vector<SparseVecZ> rows;
  for (size_t t = 0; t < mats.size(); ++t) {
    const RatMat& m = mats[t];
    // (M^T G M - chi G)_{ij} = sum_{k,l} M_ki G_kl M_lj - chi G_ij.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::map<int32_t, Rational> row;
        for (int k = 0; k < d; ++k) {
          if (m.at(k, i) == 0) continue;
          for (int l = 0; l < d; ++l)
            if (m.at(l, j) != 0) row[k * d + l] += m.at(k, i) * m.at(l, j);
        }
        row[i * d + j] -= chi[t];
        SparseVecZ v = SparseVecZ::from_rationals(row);
        if (!v.empty()) rows.push_back(std::move(v));
      }
  }
  SpanBasis kernel = nullspace_of_rows(rows, d * d);
  return unflatten_basis(kernel, d);
}

std::vector<RatMat> solve_intertwiner_space(const std::vector<RatMat>& a_mats,
                                            const std::vector<RatMat>& b_mats,
                                            const std::vector<Rational>& chi) {
  assert(a_mats.size() == b_mats.size() && a_mats.size() == chi.size());
  assert(!a_mats.empty());
  const int da = a_mats[0].rows;
  const int db = b_mats[0].rows;
  // Unknown Phi is db x da; (Phi A - chi B Phi)_{ij} = 0.
  std::vector<SparseVecZ> rows;
  for (size_t t = 0; t < a_mats.size(); ++t) {
    const RatMat& a = a_mats[t];
    const RatMat& b = b_mats[t];
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < da; ++j) {
        std::map<int32_t, Rational> row;
        for (int k = 0; k < da; ++k)
          if (a.at(k, j) != 0) row[i * da + k] += a.at(k, j);
        for (int k = 0; k < db; ++k)
          if (b.at(i, k) != 0) row[k * da + j] -= chi[t] * b.at(i, k);
        SparseVecZ v = SparseVecZ::from_rationals(row);
        if (!v.empty()) rows.push_back(std::move(v));
      }
  }
  SpanBasis kernel = nullspace_of_rows(rows, db * da);
  std::vector<RatMat> out;
  for (int r = 0; r < kernel.dim(); ++r) {
    std::vector<Rational> row = kernel.rational_row(r);
    RatMat m(db, da);
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < da; ++j) m.at(i, j) = row[i * da + j];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace reflecta
