#include "reflecta/lie_closure.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace reflecta {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_budget(std::chrono::steady_clock::time_point t0, const std::optional<double>& limit) {
  if (limit && seconds_since(t0) > *limit)
    throw ClosureBudgetExceeded("lie closure exceeded the time budget");
}

// Sparse vector over F_p: strictly increasing indices, values in [1, p).
struct VecP {
  std::vector<int32_t> idx;
  std::vector<uint64_t> val;
  bool empty() const { return idx.empty(); }
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t invmod(uint64_t a, uint64_t p) {
  uint64_t r = 1, e = p - 2;  // Fermat; p prime
  for (uint64_t b = a % p; e; e >>= 1, b = mulmod(b, b, p))
    if (e & 1) r = mulmod(r, b, p);
  return r;
}

VecP reduce_mod_p(const SparseVecZ& v, uint64_t p) {
  VecP out;
  const Int ip(p);
  for (size_t k = 0; k < v.idx.size(); ++k) {
    Int r = v.val[k] % ip;
    if (r < 0) r += ip;
    if (r != 0) {
      out.idx.push_back(v.idx[k]);
      out.val.push_back(r.convert_to<uint64_t>());
    }
  }
  return out;
}

SparseVecZ lift_to_int(const VecP& v) {
  SparseVecZ out;
  out.idx = v.idx;
  out.val.reserve(v.val.size());
  for (uint64_t u : v.val) out.val.push_back(Int(u));
  return out;
}

// a + c * b over F_p on sorted sparse vectors.
VecP vp_axpy(const VecP& a, const VecP& b, uint64_t c, uint64_t p) {
  VecP out;
  out.idx.reserve(a.idx.size() + b.idx.size());
  out.val.reserve(a.idx.size() + b.idx.size());
  size_t i = 0, j = 0;
  while (i < a.idx.size() || j < b.idx.size()) {
    if (j == b.idx.size() || (i < a.idx.size() && a.idx[i] < b.idx[j])) {
      out.idx.push_back(a.idx[i]);
      out.val.push_back(a.val[i]);
      ++i;
    } else if (i == a.idx.size() || b.idx[j] < a.idx[i]) {
      uint64_t v = mulmod(c, b.val[j], p);
      if (v) {
        out.idx.push_back(b.idx[j]);
        out.val.push_back(v);
      }
      ++j;
    } else {
      uint64_t v = (a.val[i] + mulmod(c, b.val[j], p)) % p;
      if (v) {
        out.idx.push_back(a.idx[i]);
        out.val.push_back(v);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

// Monic RREF basis over F_p with a dense reduction scratch.
class SpanBasisP {
 public:
  SpanBasisP(int ambient, uint64_t p) : p_(p), row_of_pivot_(ambient, -1), scratch_(ambient, 0) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  const VecP& row_by_pivot(int32_t col) const { return rows_[row_of_pivot_[col]]; }

  // Reduce v; if independent, insert the monic residue (with full back
  // substitution) and return its pivot column.
  std::optional<int32_t> insert(const VecP& v) {
    if (v.empty()) return std::nullopt;
    const int32_t amb = static_cast<int32_t>(scratch_.size());
    for (size_t k = 0; k < v.idx.size(); ++k) scratch_[v.idx[k]] = v.val[k];
    const int32_t lo = v.idx.front();
    for (int32_t pos = lo; pos < amb; ++pos) {
      uint64_t c = scratch_[pos];
      if (c == 0) continue;
      int r = row_of_pivot_[pos];
      if (r < 0) continue;  // non-pivot column: stays in the residue
      scratch_[pos] = 0;
      const VecP& row = rows_[r];
      for (size_t k = 1; k < row.idx.size(); ++k) {
        uint64_t sub = mulmod(c, row.val[k], p_);
        uint64_t& cur = scratch_[row.idx[k]];
        cur = cur >= sub ? cur - sub : cur + p_ - sub;
      }
    }
    VecP res;
    for (int32_t pos = lo; pos < amb; ++pos) {
      if (!scratch_[pos]) continue;
      res.idx.push_back(pos);
      res.val.push_back(scratch_[pos]);
      scratch_[pos] = 0;
    }
    if (res.empty()) return std::nullopt;
    uint64_t s = invmod(res.val.front(), p_);
    for (auto& u : res.val) u = mulmod(u, s, p_);
    const int32_t pc = res.idx.front();
    for (auto& row : rows_) {
      auto it = std::lower_bound(row.idx.begin(), row.idx.end(), pc);
      if (it == row.idx.end() || *it != pc) continue;
      uint64_t c = row.val[static_cast<size_t>(it - row.idx.begin())];
      row = vp_axpy(row, res, p_ - c, p_);
    }
    int ins = 0;
    while (ins < dim() && rows_[ins].idx.front() < pc) ++ins;
    rows_.insert(rows_.begin() + ins, std::move(res));
    for (int i = ins; i < dim(); ++i) row_of_pivot_[rows_[i].idx.front()] = i;
    return pc;
  }

 private:
  uint64_t p_;
  std::vector<VecP> rows_;  // monic, sorted by pivot column
  std::vector<int> row_of_pivot_;
  std::vector<uint64_t> scratch_;
};

}  // namespace

LieClosureResult lie_closure_reference(const std::vector<SparseVecZ>& gens, int ambient,
                                       const BracketFn& bracket,
                                       std::optional<double> max_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  LieClosureResult res{SpanBasis(ambient), static_cast<int>(gens.size()), 0};
  SpanBasis& basis = res.basis;
  // FIFO queue of new rows, identified by pivot column (stable under the
  // back-substitution that later insertions apply to a row).
  std::vector<int32_t> queue;
  for (const auto& g : gens) {
    SparseVecZ r = basis.reduce(g);
    if (r.empty()) continue;
    queue.push_back(r.lead_index());
    basis.insert_residue(std::move(r));
  }
  size_t head = 0;
  while (head < queue.size()) {
    check_budget(t0, max_seconds);
    SparseVecZ w = basis.row(basis.row_with_pivot(queue[head++]));
    std::vector<int32_t> snapshot;
    snapshot.reserve(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) snapshot.push_back(basis.pivot(i));
    for (int32_t p : snapshot) {
      SparseVecZ c = bracket(w, basis.row(basis.row_with_pivot(p)));
      ++res.bracket_evaluations;
      if (c.empty()) continue;
      SparseVecZ r = basis.reduce(c);
      if (r.empty()) continue;
      queue.push_back(r.lead_index());
      basis.insert_residue(std::move(r));
    }
  }
  return res;
}

LieClosureResult lie_closure_fast(const std::vector<SparseVecZ>& seeds,
                                  const std::vector<BracketWith>& multipliers, int ambient,
                                  std::optional<double> max_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  LieClosureResult res{SpanBasis(ambient), static_cast<int>(seeds.size()), 0};
  SpanBasis& basis = res.basis;
  std::vector<int32_t> queue;
  for (const auto& s : seeds) {
    SparseVecZ r = basis.reduce(s);
    if (r.empty()) continue;
    queue.push_back(r.lead_index());
    basis.insert_residue(std::move(r));
  }
  const size_t nm = multipliers.size();
  constexpr size_t kBatch = 16;
  size_t head = 0;
  std::vector<SparseVecZ> work, cand;
  while (head < queue.size()) {
    check_budget(t0, max_seconds);
    size_t take = std::min(kBatch, queue.size() - head);
    work.clear();
    for (size_t i = 0; i < take; ++i)
      work.push_back(basis.row(basis.row_with_pivot(queue[head + i])));
    head += take;
    cand.assign(take * nm, SparseVecZ{});
    // Pre-reduce candidates against the basis snapshot in parallel; the
    // basis is not modified during this phase.
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(take * nm); ++k) {
      SparseVecZ c = multipliers[k % nm](work[k / nm]);
      if (!c.empty()) cand[k] = basis.reduce(c);
    }
    res.bracket_evaluations += take * nm;
    // Serial, order-deterministic insertion.
    for (size_t k = 0; k < take * nm; ++k) {
      if (cand[k].empty()) continue;
      SparseVecZ r = basis.reduce(cand[k]);
      if (r.empty()) continue;
      queue.push_back(r.lead_index());
      basis.insert_residue(std::move(r));
    }
  }
  return res;
}

ModPClosure lie_closure_dim_modp(const std::vector<SparseVecZ>& seeds,
                                 const std::vector<BracketWith>& multipliers, int ambient,
                                 uint32_t prime, std::optional<double> max_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  const uint64_t p = prime;
  SpanBasisP basis(ambient, p);
  ModPClosure res;
  res.prime = prime;
  std::vector<int32_t> queue;
  for (const auto& s : seeds)
    if (auto pc = basis.insert(reduce_mod_p(s, p))) queue.push_back(*pc);
  size_t head = 0;
  while (head < queue.size()) {
    check_budget(t0, max_seconds);
    SparseVecZ w = lift_to_int(basis.row_by_pivot(queue[head++]));
    for (const auto& m : multipliers) {
      ++res.bracket_evaluations;
      SparseVecZ c = m(w);
      if (c.empty()) continue;
      if (auto pc = basis.insert(reduce_mod_p(c, p))) queue.push_back(*pc);
    }
  }
  res.dim = basis.dim();
  return res;
}

SpanBasis derived_subalgebra(const SpanBasis& closure, const BracketFn& bracket) {
  SpanBasis out(closure.ambient());
  for (int i = 0; i < closure.dim(); ++i)
    for (int j = i + 1; j < closure.dim(); ++j)
      out.insert(bracket(closure.row(i), closure.row(j)));
  return out;
}

SpanBasis center_of_closure(const SpanBasis& closure,
                            const std::vector<BracketWith>& multipliers) {
  const int m = closure.dim();
  // Constraint rows over coordinates c: sum_i c_i [mult, row_i] = 0,
  // one row per (multiplier, ambient coordinate).
  std::vector<SparseVecZ> constraints;
  for (const auto& mult : multipliers) {
    std::map<int32_t, std::map<int32_t, Int>> by_coord;
    for (int i = 0; i < m; ++i) {
      SparseVecZ b = mult(closure.row(i));
      for (size_t k = 0; k < b.idx.size(); ++k) by_coord[b.idx[k]][i] += b.val[k];
    }
    for (auto& [coord, row] : by_coord) {
      SparseVecZ r = SparseVecZ::from_map(row);
      if (!r.empty()) constraints.push_back(std::move(r));
    }
  }
  SpanBasis kernel = nullspace_of_rows(constraints, m);
  SpanBasis out(closure.ambient());
  for (int k = 0; k < kernel.dim(); ++k) {
    const SparseVecZ& c = kernel.row(k);
    SparseVecZ x;
    for (size_t t = 0; t < c.idx.size(); ++t)
      x = sv_add(x, sv_scale(closure.row(c.idx[t]), c.val[t]));
    out.insert(x);
  }
  return out;
}

BracketFn group_algebra_bracket(const GroupIndex& idx) {
  return [&idx](const SparseVecZ& a, const SparseVecZ& b) {
    std::map<int32_t, Int> m;
    for (size_t i = 0; i < a.idx.size(); ++i)
      for (size_t j = 0; j < b.idx.size(); ++j) {
        Int p = a.val[i] * b.val[j];
        m[idx.mul_index(a.idx[i], b.idx[j])] += p;
        m[idx.mul_index(b.idx[j], a.idx[i])] -= p;
      }
    return SparseVecZ::from_map(m);
  };
}

BracketWith group_multiplier(const GroupIndex& idx, const SignedPermutation& m) {
  return [left = idx.left_action(m), right = idx.right_action(m)](const SparseVecZ& x) {
    std::map<int32_t, Int> out;
    for (size_t k = 0; k < x.idx.size(); ++k) {
      out[left[x.idx[k]]] += x.val[k];
      out[right[x.idx[k]]] -= x.val[k];
    }
    return SparseVecZ::from_map(out);
  };
}

BracketFn matrix_space_bracket(int d) {
  return [d](const SparseVecZ& a, const SparseVecZ& b) {
    // [A, B] on row-major flattened d x d integer matrices.
    std::map<int32_t, Int> out;
    for (size_t s = 0; s < a.idx.size(); ++s) {
      int32_t ar = a.idx[s] / d, ac = a.idx[s] % d;
      for (size_t t = 0; t < b.idx.size(); ++t) {
        int32_t br = b.idx[t] / d, bc = b.idx[t] % d;
        Int p = a.val[s] * b.val[t];
        if (ac == br) out[ar * d + bc] += p;
        if (bc == ar) out[br * d + ac] -= p;
      }
    }
    return SparseVecZ::from_map(out);
  };
}

BracketWith matrix_multiplier(const IMatSparse& m) {
  // Column lists of m, for the M*X half of the bracket.
  const int d = m.n;
  std::vector<std::vector<std::pair<int32_t, Int>>> cols(d);
  for (int i = 0; i < d; ++i)
    for (const auto& [j, v] : m.row_entries[i]) cols[j].push_back({i, v});
  // Result is den * [M, X]; the positive scale is irrelevant to span
  // computations, which is the only use of this builder.
  return [d, rows = m.row_entries, cols = std::move(cols)](const SparseVecZ& x) {
    std::map<int32_t, Int> out;
    for (size_t s = 0; s < x.idx.size(); ++s) {
      int32_t r = x.idx[s] / d, c = x.idx[s] % d;
      const Int& v = x.val[s];
      for (const auto& [i, mv] : cols[r]) out[i * d + c] += mv * v;
      for (const auto& [j, mv] : rows[c]) out[r * d + j] -= mv * v;
    }
    return SparseVecZ::from_map(out);
  };
}

}  // namespace reflecta
