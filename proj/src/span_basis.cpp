#include "reflecta/span_basis.hpp"

#include <algorithm>
#include <cassert>

namespace reflecta {
namespace {

Int vec_content(const std::vector<Int>& vals) {
  Int g = 0;
  for (const Int& v : vals) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

// Dense scratch for one reduction.  touched tracks which slots may be
// nonzero so gather/clear stay proportional to the work done.
struct DenseScratch {
  std::vector<Int> zval;
  std::vector<Rational> qval;
  std::vector<int32_t> touched;
  std::vector<char> mark;

  void ensure(int ambient) {
    if (static_cast<int>(mark.size()) < ambient) {
      zval.resize(ambient);
      qval.resize(ambient);
      mark.assign(ambient, 0);
    }
  }
  void touch(int32_t i) {
    if (!mark[i]) {
      mark[i] = 1;
      touched.push_back(i);
    }
  }
  void clear() {
    for (int32_t i : touched) {
      zval[i] = 0;
      qval[i] = Rational(0);
      mark[i] = 0;
    }
    touched.clear();
  }
};

thread_local DenseScratch tl_scratch;

}  // namespace

SparseVecZ SparseVecZ::from_map(const std::map<int32_t, Int>& m) {
  SparseVecZ v;
  for (const auto& [i, x] : m) {
    if (x != 0) {
      v.idx.push_back(i);
      v.val.push_back(x);
    }
  }
  return v;
}

SparseVecZ SparseVecZ::from_rationals(const std::map<int32_t, Rational>& m) {
  Int den = 1;
  for (const auto& [i, q] : m)
    if (q != 0) den = boost::multiprecision::lcm(den, denominator(q));
  SparseVecZ v;
  for (const auto& [i, q] : m) {
    if (q != 0) {
      v.idx.push_back(i);
      v.val.push_back(numerator(q) * (den / denominator(q)));
    }
  }
  v.canonicalize();
  return v;
}

SparseVecZ SparseVecZ::unit(int32_t i) {
  SparseVecZ v;
  v.idx.push_back(i);
  v.val.push_back(1);
  return v;
}

void SparseVecZ::canonicalize() {
  if (idx.empty()) return;
  Int g = vec_content(val);
  if (val.front() < 0) g = -g;
  if (g != 1)
    for (Int& x : val) x /= g;
}

Rational SparseVecZ::value_at(int32_t i) const {
  auto it = std::lower_bound(idx.begin(), idx.end(), i);
  if (it == idx.end() || *it != i) return Rational(0);
  return Rational(val[it - idx.begin()]);
}

SparseVecZ sv_add(const SparseVecZ& a, const SparseVecZ& b) {
  SparseVecZ out;
  size_t i = 0, j = 0;
  while (i < a.idx.size() || j < b.idx.size()) {
    if (j == b.idx.size() || (i < a.idx.size() && a.idx[i] < b.idx[j])) {
      out.idx.push_back(a.idx[i]);
      out.val.push_back(a.val[i]);
      ++i;
    } else if (i == a.idx.size() || b.idx[j] < a.idx[i]) {
      out.idx.push_back(b.idx[j]);
      out.val.push_back(b.val[j]);
      ++j;
    } else {
      Int s = a.val[i] + b.val[j];
      if (s != 0) {
        out.idx.push_back(a.idx[i]);
        out.val.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVecZ sv_scale(const SparseVecZ& a, const Int& c) {
  SparseVecZ out;
  if (c == 0) return out;
  out.idx = a.idx;
  out.val.reserve(a.val.size());
  for (const Int& v : a.val) out.val.push_back(v * c);
  return out;
}

// Two exact reduction paths: an all-integer accumulator that rescales
// the whole residue at each elimination (wins when basis rows are
// dense), and a rational accumulator that touches only the pivot row's
// support (wins when rows are sparse).  Both produce the same canonical
// residue.
SparseVecZ SpanBasis::reduce(const SparseVecZ& v) const {
  if (v.empty() || rows_.empty()) {
    SparseVecZ r = v;
    r.canonicalize();
    return r;
  }
  size_t total_nnz = 0;
  for (const auto& r : rows_) total_nnz += r.nnz();
  bool dense_path = total_nnz * 8 > rows_.size() * static_cast<size_t>(ambient_);

  DenseScratch& ws = tl_scratch;
  ws.ensure(ambient_);
  SparseVecZ out;

  if (dense_path) {
    for (size_t k = 0; k < v.idx.size(); ++k) {
      ws.touch(v.idx[k]);
      ws.zval[v.idx[k]] = v.val[k];
    }
    std::sort(ws.touched.begin(), ws.touched.end());
    size_t scan = 0;
    long bits_since_strip = 0;
    while (scan < ws.touched.size()) {
      int32_t c = ws.touched[scan];
      if (ws.zval[c] == 0) {
        ++scan;
        continue;
      }
      int ri = row_of_pivot_[c];
      if (ri < 0) {
        ++scan;
        continue;
      }
      const SparseVecZ& p = rows_[ri];
      const Int a = p.val.front();
      const Int b = ws.zval[c];
      size_t before = ws.touched.size();
      for (int32_t t : ws.touched)
        if (ws.zval[t] != 0) ws.zval[t] *= a;
      for (size_t k = 0; k < p.idx.size(); ++k) {
        int32_t j = p.idx[k];
        if (!ws.mark[j]) {
          ws.mark[j] = 1;
          ws.touched.push_back(j);
        }
        ws.zval[j] -= b * p.val[k];
      }
      assert(ws.zval[c] == 0);
      std::inplace_merge(ws.touched.begin() + scan,
                         ws.touched.begin() + before, ws.touched.end());
      bits_since_strip += 1 + static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(a) + 1));
      if (bits_since_strip > 192) {
        Int g = 0;
        for (int32_t t : ws.touched) {
          if (ws.zval[t] != 0) g = boost::multiprecision::gcd(g, ws.zval[t]);
          if (g == 1) break;
        }
        if (g > 1)
          for (int32_t t : ws.touched)
            if (ws.zval[t] != 0) ws.zval[t] /= g;
        bits_since_strip = 0;
      }
      ++scan;
    }
    std::map<int32_t, Int> m;
    for (int32_t t : ws.touched)
      if (ws.zval[t] != 0) m[t] = ws.zval[t];
    ws.clear();
    out = SparseVecZ::from_map(m);
    out.canonicalize();
  } else {
    for (size_t k = 0; k < v.idx.size(); ++k) {
      ws.touch(v.idx[k]);
      ws.qval[v.idx[k]] = Rational(v.val[k]);
    }
    std::sort(ws.touched.begin(), ws.touched.end());
    size_t scan = 0;
    while (scan < ws.touched.size()) {
      int32_t c = ws.touched[scan];
      if (ws.qval[c] == 0) {
        ++scan;
        continue;
      }
      int ri = row_of_pivot_[c];
      if (ri < 0) {
        ++scan;
        continue;
      }
      const SparseVecZ& p = rows_[ri];
      Rational q = ws.qval[c] / Rational(p.val.front());
      size_t before = ws.touched.size();
      for (size_t k = 0; k < p.idx.size(); ++k) {
        int32_t j = p.idx[k];
        if (!ws.mark[j]) {
          ws.mark[j] = 1;
          ws.touched.push_back(j);
        }
        ws.qval[j] -= q * Rational(p.val[k]);
      }
      assert(ws.qval[c] == 0);
      std::inplace_merge(ws.touched.begin() + scan,
                         ws.touched.begin() + before, ws.touched.end());
      ++scan;
    }
    std::map<int32_t, Rational> m;
    for (int32_t t : ws.touched)
      if (ws.qval[t] != 0) m[t] = ws.qval[t];
    ws.clear();
    out = SparseVecZ::from_rationals(m);
  }
  return out;
}

SparseVecZ SpanBasis::reduce_with_coords(const SparseVecZ& v,
                                         std::vector<Rational>* coords) const {
  coords->assign(rows_.size(), Rational(0));
  DenseScratch& ws = tl_scratch;
  ws.ensure(ambient_);
  for (size_t k = 0; k < v.idx.size(); ++k) {
    ws.touch(v.idx[k]);
    ws.qval[v.idx[k]] = Rational(v.val[k]);
  }
  std::sort(ws.touched.begin(), ws.touched.end());
  size_t scan = 0;
  while (scan < ws.touched.size()) {
    int32_t c = ws.touched[scan];
    if (ws.qval[c] == 0) {
      ++scan;
      continue;
    }
    int ri = row_of_pivot_[c];
    if (ri < 0) {
      ++scan;
      continue;
    }
    const SparseVecZ& p = rows_[ri];
    Rational q = ws.qval[c] / Rational(p.val.front());
    (*coords)[ri] += q * Rational(p.val.front());  // coefficient w.r.t. leading-1 row
    size_t before = ws.touched.size();
    for (size_t k = 0; k < p.idx.size(); ++k) {
      int32_t j = p.idx[k];
      if (!ws.mark[j]) {
        ws.mark[j] = 1;
        ws.touched.push_back(j);
      }
      ws.qval[j] -= q * Rational(p.val[k]);
    }
    std::inplace_merge(ws.touched.begin() + scan, ws.touched.begin() + before,
                       ws.touched.end());
    ++scan;
  }
  std::map<int32_t, Rational> m;
  for (int32_t t : ws.touched)
    if (ws.qval[t] != 0) m[t] = ws.qval[t];
  ws.clear();
  return SparseVecZ::from_rationals(m);
}

std::optional<std::vector<Rational>> SpanBasis::coordinates(const SparseVecZ& v) const {
  std::vector<Rational> coords;
  SparseVecZ r = reduce_with_coords(v, &coords);
  if (!r.empty()) return std::nullopt;
  return coords;
}

bool SpanBasis::insert(const SparseVecZ& v) {
  SparseVecZ r = reduce(v);
  if (r.empty()) return false;
  insert_residue(std::move(r));
  return true;
}

void SpanBasis::insert_residue(SparseVecZ r) {
  r.canonicalize();
  assert(!r.empty());
  int32_t p = r.lead_index();
  assert(row_of_pivot_[p] < 0);
  // Back-substitute the new pivot column out of every existing row.
  const Int& a = r.val.front();
  for (auto& row : rows_) {
    Rational b = row.value_at(p);
    if (b == 0) continue;
    SparseVecZ updated = sv_add(sv_scale(row, a), sv_scale(r, -numerator(b)));
    updated.canonicalize();
    row = std::move(updated);
  }
  auto pos = std::upper_bound(rows_.begin(), rows_.end(), p,
                              [](int32_t col, const SparseVecZ& row) {
                                return col < row.lead_index();
                              });
  rows_.insert(pos, std::move(r));
  for (size_t i = 0; i < rows_.size(); ++i)
    row_of_pivot_[rows_[i].lead_index()] = static_cast<int>(i);
}

std::vector<Rational> SpanBasis::rational_row(int i) const {
  std::vector<Rational> out(ambient_, Rational(0));
  const SparseVecZ& r = rows_[i];
  Rational lead(r.val.front());
  for (size_t k = 0; k < r.idx.size(); ++k)
    out[r.idx[k]] = Rational(r.val[k]) / lead;
  return out;
}

SpanBasis nullspace_of_rows(const std::vector<SparseVecZ>& rows, int ambient) {
  SpanBasis row_space(ambient);
  for (const auto& r : rows) row_space.insert(r);
  std::vector<char> is_pivot(ambient, 0);
  for (int i = 0; i < row_space.dim(); ++i) is_pivot[row_space.pivot(i)] = 1;
  SpanBasis kernel(ambient);
  for (int32_t f = 0; f < ambient; ++f) {
    if (is_pivot[f]) continue;
    std::map<int32_t, Rational> m;
    m[f] = Rational(1);
    for (int i = 0; i < row_space.dim(); ++i) {
      const SparseVecZ& r = row_space.row(i);
      Rational a = r.value_at(f);
      if (a != 0) m[r.lead_index()] = -a / Rational(r.val.front());
    }
    kernel.insert(SparseVecZ::from_rationals(m));
  }
  return kernel;
}

}  // namespace reflecta
