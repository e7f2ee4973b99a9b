#include "reflecta/irreps.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "reflecta/linear_solve.hpp"
#include "reflecta/span_basis.hpp"

namespace reflecta {

namespace {

using PosKey = std::vector<Box>;

std::map<PosKey, int> position_index(const std::vector<StandardBitableau>& basis) {
  std::map<PosKey, int> out;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) out[basis[i].pos] = i;
  return out;
}

int index_of(const std::map<PosKey, int>& m, const StandardBitableau& t, const char* what) {
  auto it = m.find(t.pos);
  if (it == m.end()) throw std::logic_error(std::string(what) + ": tableau missing from basis");
  return it->second;
}

// Relative position of the entries i, i+1 in T; kind 3 carries the
// axial distance r = res_T(i+1) - res_T(i), with |r| >= 2.
struct AdjCase {
  int kind;  // 0 different sides, 1 same row, 2 same column, 3 same tableau
  int r = 0;
};

AdjCase adjacent_case(const StandardBitableau& t, int i) {
  Box b1 = t.pos[i - 1], b2 = t.pos[i];
  if (b1.side != b2.side) return {0, 0};
  if (b1.row == b2.row) return {1, 0};
  if (b1.col == b2.col) return {2, 0};
  return {3, (b2.col - b2.row) - (b1.col - b1.row)};
}

void fill_exact_matrices(RepMatrixSet& rep, const std::map<PosKey, int>& idx) {
  const int n = rep.n, dim = rep.dim;
  rep.s.assign(n > 1 ? n - 1 : 0, RatMat(dim, dim));
  rep.t.assign(n, RatMat(dim, dim));
  for (int i = 1; i < n; ++i) {
    RatMat& m = rep.s[i - 1];
    for (int v = 0; v < dim; ++v) {
      const StandardBitableau& T = rep.basis[v];
      AdjCase c = adjacent_case(T, i);
      if (c.kind == 1) {
        m.at(v, v) = 1;
        continue;
      }
      if (c.kind == 2) {
        m.at(v, v) = -1;
        continue;
      }
      auto S = apply_adjacent(T, i);
      if (!S) throw std::logic_error("fill_exact_matrices: adjacent move not standard");
      int w = index_of(idx, *S, "fill_exact_matrices");
      if (c.kind == 0) {
        m.at(w, v) = 1;
        continue;
      }
      Rational rr(c.r);
      m.at(v, v) = 1 / rr;
      m.at(w, v) = c.r >= 2 ? Rational(1) - 1 / (rr * rr) : Rational(1);
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int v = 0; v < dim; ++v) rep.t[i - 1].at(v, v) = rho_of(rep.basis[v], i);
}

void fill_approx_matrices(RepMatrixSet& rep, const std::map<PosKey, int>& idx) {
  const int n = rep.n, dim = rep.dim;
  rep.as.assign(n > 1 ? n - 1 : 0, ApproxMat(dim, dim));
  rep.at.assign(n, ApproxMat(dim, dim));
  for (int i = 1; i < n; ++i) {
    ApproxMat& m = rep.as[i - 1];
    for (int v = 0; v < dim; ++v) {
      const StandardBitableau& T = rep.basis[v];
      AdjCase c = adjacent_case(T, i);
      if (c.kind == 1) {
        m.at(v, v) = make_approx(1);
        continue;
      }
      if (c.kind == 2) {
        m.at(v, v) = make_approx(-1);
        continue;
      }
      auto S = apply_adjacent(T, i);
      if (!S) throw std::logic_error("fill_approx_matrices: adjacent move not standard");
      int w = index_of(idx, *S, "fill_approx_matrices");
      if (c.kind == 0) {
        m.at(w, v) = make_approx(1);
        continue;
      }
      ApproxScalar a = make_approx(1) / make_approx(c.r);
      m.at(v, v) = a;
      m.at(w, v) = sqrt(make_approx(1) - a * a);
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int v = 0; v < dim; ++v) rep.at[i - 1].at(v, v) = make_approx(rho_of(rep.basis[v], i));
}

template <class Mat>
struct Ops;

template <>
struct Ops<RatMat> {
  static RatMat mul(const RatMat& a, const RatMat& b) { return mat_mul(a, b); }
  static bool eq(const RatMat& a, const RatMat& b) { return a == b; }
  static bool is_id(const RatMat& m) { return m == RatMat::identity(m.rows); }
};

template <>
struct Ops<ApproxMat> {
  static ApproxMat mul(const ApproxMat& a, const ApproxMat& b) { return amat_mul(a, b); }
  static bool eq(const ApproxMat& a, const ApproxMat& b) {
    return amat_max_abs(amat_sub(a, b)) < approx_zero_tolerance();
  }
  static bool is_id(const ApproxMat& m) { return eq(m, ApproxMat::identity(m.rows)); }
};

// (ab)^k
template <class Mat>
Mat alt_power(const Mat& a, const Mat& b, int k) {
  Mat p = Ops<Mat>::mul(a, b);
  Mat out = p;
  for (int j = 1; j < k; ++j) out = Ops<Mat>::mul(out, p);
  return out;
}

template <class Mat>
void check_s_relations(const std::vector<Mat>& s, int n, const std::string& label) {
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("defining relations fail for " + label + ": " + what);
  };
  for (int i = 0; i + 1 < n; ++i)
    if (!Ops<Mat>::is_id(Ops<Mat>::mul(s[i], s[i]))) fail("s_i^2, i=" + std::to_string(i + 1));
  for (int i = 0; i + 2 < n; ++i)
    if (!Ops<Mat>::is_id(alt_power(s[i], s[i + 1], 3))) fail("(s_i s_{i+1})^3, i=" + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 2; j + 1 < n; ++j)
      if (!Ops<Mat>::is_id(alt_power(s[i], s[j], 2)))
        fail("(s_i s_j)^2, i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1));
}

template <class Mat>
void check_relations_b(const std::vector<Mat>& s, const std::vector<Mat>& t, int n,
                       const std::string& label) {
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("defining relations fail for " + label + ": " + what);
  };
  check_s_relations(s, n, label);
  if (!Ops<Mat>::is_id(Ops<Mat>::mul(t[n - 1], t[n - 1]))) fail("t_n^2");
  if (n >= 2) {
    if (!Ops<Mat>::is_id(alt_power(s[n - 2], t[n - 1], 4))) fail("(s_{n-1} t_n)^4");
    for (int i = 0; i + 2 < n; ++i)
      if (!Ops<Mat>::is_id(alt_power(s[i], t[n - 1], 2)))
        fail("(s_i t_n)^2, i=" + std::to_string(i + 1));
  }
  for (int i = n - 1; i >= 1; --i) {
    Mat rhs = Ops<Mat>::mul(Ops<Mat>::mul(s[i - 1], t[i]), s[i - 1]);
    if (!Ops<Mat>::eq(t[i - 1], rhs)) fail("t_i = s_i t_{i+1} s_i, i=" + std::to_string(i));
  }
}

// Type D check on (s_i, u_i = t_1 t_{i+1}): Coxeter relations for the
// s_i and for stilde_n = t_{n-1} t_n s_{n-1}, the u_i as commuting
// involutions, and the conjugation rules s_j u_i s_j = u_{s_j(i+1)-1}
// (j >= 2) resp. s_1 u_i s_1 = u_1 u_i.
template <class Mat>
void check_relations_d(const std::vector<Mat>& s, const std::vector<Mat>& u, int n,
                       const std::string& label) {
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("defining relations fail for " + label + ": " + what);
  };
  if (n < 2) return;
  check_s_relations(s, n, label);
  for (int i = 0; i + 1 < n; ++i)
    if (!Ops<Mat>::is_id(Ops<Mat>::mul(u[i], u[i]))) fail("u_i^2, i=" + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j + 1 < n; ++j)
      if (!Ops<Mat>::eq(Ops<Mat>::mul(u[i], u[j]), Ops<Mat>::mul(u[j], u[i])))
        fail("u_i u_j = u_j u_i");
  for (int j = 1; j < n; ++j)
    for (int i = 1; i < n; ++i) {
      Mat lhs = Ops<Mat>::mul(Ops<Mat>::mul(s[j - 1], u[i - 1]), s[j - 1]);
      Mat rhs = [&] {
        if (j == 1) return i == 1 ? u[0] : Ops<Mat>::mul(u[0], u[i - 1]);
        int target = i + 1 == j ? j + 1 : (i + 1 == j + 1 ? j : i + 1);
        return u[target - 2];
      }();
      if (!Ops<Mat>::eq(lhs, rhs))
        fail("s_j u_i s_j, i=" + std::to_string(i) + ", j=" + std::to_string(j));
    }
  Mat st = n >= 3 ? Ops<Mat>::mul(Ops<Mat>::mul(u[n - 3], u[n - 2]), s[n - 2])
                  : Ops<Mat>::mul(u[0], s[0]);
  if (!Ops<Mat>::is_id(Ops<Mat>::mul(st, st))) fail("stilde_n^2");
  if (n == 2) {
    if (!Ops<Mat>::is_id(alt_power(st, s[0], 2))) fail("(stilde_2 s_1)^2");
    return;
  }
  if (!Ops<Mat>::is_id(alt_power(st, s[n - 3], 3))) fail("(stilde_n s_{n-2})^3");
  for (int j = 1; j < n; ++j) {
    if (j == n - 2) continue;
    if (!Ops<Mat>::is_id(alt_power(st, s[j - 1], 2)))
      fail("(stilde_n s_j)^2, j=" + std::to_string(j));
  }
}

// Multiplicative recurrence shared by the diagonal Gram entries and the
// eps'' scale factors: value 1 at the start tableau, unchanged across
// different-side moves, divided by (1 - r^-2) when moving off the
// positive member of a same-tableau pair (and multiplied when moving
// off the negative member).
std::vector<Rational> ratio_bfs(const std::vector<StandardBitableau>& basis,
                                const std::map<PosKey, int>& idx, int n, int start) {
  std::vector<Rational> out(basis.size(), Rational(0));
  std::vector<char> seen(basis.size(), 0);
  std::deque<int> queue;
  out[start] = 1;
  seen[start] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const StandardBitableau& T = basis[v];
    for (int i = 1; i < n; ++i) {
      AdjCase c = adjacent_case(T, i);
      if (c.kind == 1 || c.kind == 2) continue;
      auto S = apply_adjacent(T, i);
      if (!S) throw std::logic_error("ratio_bfs: adjacent move not standard");
      int w = index_of(idx, *S, "ratio_bfs");
      if (seen[w]) continue;
      seen[w] = 1;
      if (c.kind == 0) {
        out[w] = out[v];
      } else {
        Rational rr(c.r);
        Rational f = Rational(1) - 1 / (rr * rr);
        out[w] = c.r >= 2 ? Rational(out[v] / f) : Rational(out[v] * f);
      }
      queue.push_back(w);
    }
  }
  for (char sflag : seen)
    if (!sflag) throw std::logic_error("ratio_bfs: tableau graph not connected");
  return out;
}

// Integer-scaled copy of a dense rational vector; *scale receives the
// common denominator, so v = (returned vector) / *scale.
SparseVecZ scaled_sparse(const std::vector<Rational>& v, Int* scale) {
  Int lcm_den = 1;
  for (const auto& x : v)
    if (x != 0) lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(x)));
  SparseVecZ out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) {
      out.idx.push_back(i);
      out.val.push_back(Int(numerator(v[i])) * (lcm_den / Int(denominator(v[i]))));
    }
  *scale = lcm_den;
  return out;
}

// Matrix of m restricted to an invariant subspace, in the coordinates
// of the leading-1 rows of image.
RatMat project_matrix(const RatMat& m, const SpanBasis& image,
                      const std::vector<std::vector<Rational>>& image_rows) {
  int d = image.dim();
  RatMat out(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> w(m.rows, Rational(0));
    for (int a = 0; a < m.rows; ++a) {
      Rational acc(0);
      for (int b = 0; b < m.cols; ++b) {
        const Rational& x = m.at(a, b);
        if (x != 0 && image_rows[j][b] != 0) acc += x * image_rows[j][b];
      }
      w[a] = acc;
    }
    Int scale;
    SparseVecZ sv = scaled_sparse(w, &scale);
    std::vector<Rational> coords;
    SparseVecZ residue = image.reduce_with_coords(sv, &coords);
    if (!residue.empty()) throw std::runtime_error("project_matrix: subspace not invariant");
    for (int k = 0; k < d; ++k) out.at(k, j) = coords[k] / Rational(scale);
  }
  return out;
}

}  // namespace

RatMat RepMatrixSet::exact_matrix(const SignedPermutation& g) const {
  if (!exact()) throw std::logic_error("exact_matrix on an approx set");
  RatMat m = RatMat::identity(dim);
  if (family == Family::type_b) {
    BWord w = decompose_b(g);
    for (int i : w.t_indices) m = mat_mul(m, t[i - 1]);
    for (int i : w.s_word) m = mat_mul(m, s[i - 1]);
  } else {
    DWord w = decompose_d(g);
    for (int i : w.u_indices) m = mat_mul(m, u[i - 1]);
    for (int i : w.s_word) m = mat_mul(m, s[i - 1]);
  }
  return m;
}

ApproxMat RepMatrixSet::approx_matrix(const SignedPermutation& g) const {
  if (exact()) throw std::logic_error("approx_matrix on an exact set");
  ApproxMat m = ApproxMat::identity(dim);
  if (family == Family::type_b) {
    BWord w = decompose_b(g);
    for (int i : w.t_indices) m = amat_mul(m, at[i - 1]);
    for (int i : w.s_word) m = amat_mul(m, as[i - 1]);
  } else {
    DWord w = decompose_d(g);
    for (int i : w.u_indices) m = amat_mul(m, au[i - 1]);
    for (int i : w.s_word) m = amat_mul(m, as[i - 1]);
  }
  return m;
}

RepMatrixSet build_rep_b(const Bipartition& shape, ScalarMode mode, uint64_t budget) {
  int n = shape.n();
  if (n < 1) throw std::invalid_argument("build_rep_b: need n >= 1");
  RepMatrixSet rep;
  rep.family = Family::type_b;
  rep.mode = mode;
  rep.shape = shape;
  rep.label = bipartition_to_string(shape);
  rep.n = n;
  rep.basis = standard_bitableaux(shape, budget);
  rep.dim = static_cast<int>(rep.basis.size());
  auto idx = position_index(rep.basis);
  if (mode == ScalarMode::exact_seminormal) {
    fill_exact_matrices(rep, idx);
    check_relations_b(rep.s, rep.t, n, rep.label);
  } else {
    fill_approx_matrices(rep, idx);
    check_relations_b(rep.as, rep.at, n, rep.label);
  }
  return rep;
}

RepMatrixSet restrict_to_d(const RepMatrixSet& rep) {
  if (rep.family != Family::type_b) throw std::invalid_argument("restrict_to_d: need a type B set");
  RepMatrixSet out = rep;
  out.family = Family::type_d;
  out.label = unordered_label_to_string(unordered_normal_form(rep.shape));
  if (rep.exact()) {
    out.u.clear();
    for (int i = 1; i < rep.n; ++i) out.u.push_back(mat_mul(rep.t[0], rep.t[i]));
    out.t.clear();
  } else {
    out.au.clear();
    for (int i = 1; i < rep.n; ++i) out.au.push_back(amat_mul(rep.at[0], rep.at[i]));
    out.at.clear();
  }
  return out;
}

std::vector<RepMatrixSet> split_module(const RepMatrixSet& rep) {
  if (!rep.exact()) throw std::invalid_argument("split_module: need the exact mode");
  if (rep.family != Family::type_d) throw std::invalid_argument("split_module: need a type D set");
  std::vector<RatMat> gens;
  gens.insert(gens.end(), rep.s.begin(), rep.s.end());
  gens.insert(gens.end(), rep.u.begin(), rep.u.end());
  std::vector<RatMat> comm = solve_commutant(gens);
  if (comm.size() == 1) return {rep};
  if (comm.size() != 2)
    throw std::runtime_error("split_module: commutant dimension " + std::to_string(comm.size()));
  if (!(rep.shape.first == rep.shape.second))
    throw std::runtime_error("split_module: doubled commutant off a doubled shape");

  RatMat C = comm[0];
  if (mat_is_scalar(C)) C = comm[1];
  if (mat_is_scalar(C)) throw std::runtime_error("split_module: no non-scalar commutant member");
  RatMat C2 = mat_mul(C, C);
  // Minimal polynomial x^2 - b x - a of C.
  Rational a, b;
  bool off_diag = false;
  for (int i = 0; i < C.rows && !off_diag; ++i)
    for (int j = 0; j < C.cols && !off_diag; ++j)
      if (i != j && C.at(i, j) != 0) {
        b = C2.at(i, j) / C.at(i, j);
        off_diag = true;
      }
  if (off_diag) {
    a = C2.at(0, 0) - b * C.at(0, 0);
  } else {
    int j = -1;
    for (int k = 1; k < C.rows; ++k)
      if (C.at(k, k) != C.at(0, 0)) {
        j = k;
        break;
      }
    if (j < 0) throw std::logic_error("split_module: scalar slipped through");
    b = (C2.at(0, 0) - C2.at(j, j)) / (C.at(0, 0) - C.at(j, j));
    a = C2.at(0, 0) - b * C.at(0, 0);
  }
  RatMat probe =
      mat_sub(C2, mat_add(mat_scale(C, b), mat_scale(RatMat::identity(C.rows), a)));
  if (!mat_is_zero(probe)) throw std::runtime_error("split_module: minimal polynomial degree > 2");
  Rational disc = b * b + Rational(4) * a;
  Int num = Int(numerator(disc)), den = Int(denominator(disc));
  if (num <= 0) throw std::runtime_error("split_module: non-real or repeated eigenvalues");
  Int sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den)
    throw std::runtime_error("split_module: irrational eigenvalues");
  Rational root(sn, sd);
  Rational r1 = (b + root) / 2, r2 = (b - root) / 2;
  RatMat P = mat_scale(mat_sub(C, mat_scale(RatMat::identity(C.rows), r2)), 1 / (r1 - r2));
  RatMat Q = mat_sub(RatMat::identity(C.rows), P);

  auto make_piece = [&](const RatMat& proj) {
    SpanBasis image(rep.dim);
    for (int j = 0; j < rep.dim; ++j) {
      std::map<int32_t, Rational> col;
      for (int i = 0; i < rep.dim; ++i)
        if (proj.at(i, j) != 0) col[i] = proj.at(i, j);
      if (!col.empty()) image.insert(SparseVecZ::from_rationals(col));
    }
    std::vector<std::vector<Rational>> rows;
    for (int k = 0; k < image.dim(); ++k) rows.push_back(image.rational_row(k));
    RepMatrixSet piece;
    piece.family = Family::type_d;
    piece.mode = rep.mode;
    piece.shape = rep.shape;
    piece.n = rep.n;
    piece.dim = image.dim();
    for (int k = 0; k < image.dim(); ++k) {
      const StandardBitableau& tag = rep.basis[image.pivot(k)];
      if (rho_of(tag, 1) != 1) throw std::runtime_error("split_module: pivot tag has rho_1 = -1");
      piece.basis.push_back(tag);
    }
    for (const auto& m : rep.s) piece.s.push_back(project_matrix(m, image, rows));
    for (const auto& m : rep.u) piece.u.push_back(project_matrix(m, image, rows));
    return std::make_pair(piece, image);
  };
  auto p1 = make_piece(P);
  auto p2 = make_piece(Q);

  auto idx = position_index(rep.basis);
  StandardBitableau R = row_major_bitableau(rep.shape);
  std::map<int32_t, Int> plus_entries;
  plus_entries[index_of(idx, R, "split_module")] = 1;
  plus_entries[index_of(idx, swap_bt(R), "split_module")] = 1;
  SparseVecZ plus = SparseVecZ::from_map(plus_entries);
  bool p1_plus = p1.second.contains(plus);
  bool p2_plus = p2.second.contains(plus);
  if (p1_plus == p2_plus) throw std::runtime_error("split_module: +-signed vector not located");
  if (!p1_plus) std::swap(p1, p2);
  if (p1.first.dim != p2.first.dim || p1.first.dim * 2 != rep.dim)
    throw std::runtime_error("split_module: halves of unequal dimension");
  Partition lam = rep.shape.first;
  p1.first.dsign = 1;
  p1.first.label = d_label_to_string(DLabel{lam, lam, 1});
  p2.first.dsign = -1;
  p2.first.label = d_label_to_string(DLabel{lam, lam, -1});
  return {p1.first, p2.first};
}

RepMatrixSet build_rep_d(const DLabel& label, ScalarMode mode, uint64_t budget) {
  if (label.sign == 0) {
    Bipartition nf = unordered_normal_form(Bipartition{label.lambda, label.mu});
    RepMatrixSet out = restrict_to_d(build_rep_b(nf, mode, budget));
    out.label = d_label_to_string(label);
    return out;
  }
  Bipartition doubled{label.lambda, label.lambda};
  int n = doubled.n();
  if (mode == ScalarMode::exact_seminormal) {
    auto pieces = split_module(restrict_to_d(build_rep_b(doubled, mode, budget)));
    if (pieces.size() != 2) throw std::runtime_error("build_rep_d: doubled module did not split");
    RepMatrixSet out = label.sign > 0 ? std::move(pieces[0]) : std::move(pieces[1]);
    check_relations_d(out.s, out.u, n, out.label);
    return out;
  }
  // Approx mode: assemble the half directly from the doubled type B
  // matrices via M_half[W][V] = M[W][V] + sign * M[W][V-swap] over the
  // rho_1 = +1 tags; u_i is diagonal with entries rho_T(i+1).
  RepMatrixSet full = build_rep_b(doubled, mode, budget);
  RepMatrixSet out;
  out.family = Family::type_d;
  out.mode = mode;
  out.label = d_label_to_string(label);
  out.shape = doubled;
  out.dsign = label.sign;
  out.n = n;
  out.basis = bitableaux_rho1_positive(label.lambda);
  out.dim = static_cast<int>(out.basis.size());
  auto idx = position_index(full.basis);
  std::vector<int> tag(out.dim), swapped(out.dim);
  for (int k = 0; k < out.dim; ++k) {
    tag[k] = index_of(idx, out.basis[k], "build_rep_d");
    swapped[k] = index_of(idx, swap_bt(out.basis[k]), "build_rep_d");
  }
  for (const auto& A : full.as) {
    ApproxMat m(out.dim, out.dim);
    for (int k = 0; k < out.dim; ++k)
      for (int l = 0; l < out.dim; ++l)
        m.at(k, l) = A.at(tag[k], tag[l]) + make_approx(label.sign) * A.at(tag[k], swapped[l]);
    out.as.push_back(m);
  }
  for (int i = 1; i < n; ++i) {
    ApproxMat m(out.dim, out.dim);
    for (int k = 0; k < out.dim; ++k) m.at(k, k) = make_approx(rho_of(out.basis[k], i + 1));
    out.au.push_back(m);
  }
  check_relations_d(out.as, out.au, n, out.label);
  return out;
}

std::vector<Rational> seminormal_weights(const Bipartition& shape) {
  auto basis = standard_bitableaux(shape);
  auto idx = position_index(basis);
  int start = index_of(idx, row_major_bitableau(shape), "seminormal_weights");
  return ratio_bfs(basis, idx, shape.n(), start);
}

RatMat intertwiner_eps_prime(const Bipartition& shape) {
  auto src = standard_bitableaux(shape);
  auto tgt = standard_bitableaux(swap_parts(shape));
  auto tidx = position_index(tgt);
  RatMat out(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (int j = 0; j < static_cast<int>(src.size()); ++j)
    out.at(index_of(tidx, swap_bt(src[j]), "intertwiner_eps_prime"), j) = 1;
  return out;
}

RatMat intertwiner_eps_dprime(const Bipartition& shape) {
  auto src = standard_bitableaux(shape);
  auto sidx = position_index(src);
  auto tgt = standard_bitableaux(conjugate_parts(shape));
  auto tidx = position_index(tgt);
  int start = index_of(sidx, row_major_bitableau(shape), "intertwiner_eps_dprime");
  auto q = ratio_bfs(src, sidx, shape.n(), start);
  RatMat out(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (int j = 0; j < static_cast<int>(src.size()); ++j) {
    Rational entry = length_of(src[j]) % 2 ? -q[j] : q[j];
    out.at(index_of(tidx, transpose_bt(src[j]), "intertwiner_eps_dprime"), j) = entry;
  }
  return out;
}

RatMat intertwiner_eps(const Bipartition& shape) {
  return mat_mul(intertwiner_eps_dprime(swap_parts(shape)), intertwiner_eps_prime(shape));
}

BilinearFormMatrix bilinear_form(const Bipartition& label, FormKind kind) {
  int n = label.n();
  RatMat phi;
  if (kind == FormKind::b_form) {
    if (!(dual_partner(label) == label))
      throw std::invalid_argument("bilinear_form: b_form needs (lambda,mu) = (mu*,lambda*)");
    phi = intertwiner_eps(label);
  } else {
    if (!(conjugate_parts(label) == label))
      throw std::invalid_argument("bilinear_form: d_form needs (lambda,mu) = (lambda*,mu*)");
    phi = intertwiner_eps_dprime(label);
  }
  auto w = seminormal_weights(label);
  int dim = phi.rows;
  RatMat G(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (phi.at(i, j) != 0) G.at(i, j) = w[i] * phi.at(i, j);

  RatMat Gt = mat_transpose(G);
  bool symmetric = Gt == G;
  bool antisymmetric = Gt == mat_scale(G, Rational(-1));
  if (!symmetric && !antisymmetric)
    throw std::runtime_error("bilinear_form: form is neither symmetric nor antisymmetric");
  bool expect_symmetric;
  if (kind == FormKind::b_form) {
    expect_symmetric = (n / 2) % 2 == 0;
  } else {
    int k = (n - diagonal_length(label.first) - diagonal_length(label.second)) / 2;
    expect_symmetric = k % 2 == 0;
  }
  if (symmetric != expect_symmetric) throw std::runtime_error("bilinear_form: parity mismatch");

  for (int j = 0; j < dim; ++j) {
    bool nonzero = false;
    for (int i = 0; i < dim && !nonzero; ++i) nonzero = G.at(i, j) != 0;
    if (!nonzero) throw std::runtime_error("bilinear_form: degenerate form");
  }

  // Twisted invariance M^T G M = chi(g) G on the type B generators;
  // multiplicativity extends it to the whole group.
  RepMatrixSet rep = build_rep_b(label, ScalarMode::exact_seminormal);
  for (int i = 0; i + 1 < n; ++i) {
    RatMat lhs = mat_mul(mat_transpose(rep.s[i]), mat_mul(G, rep.s[i]));
    if (!(lhs == mat_scale(G, Rational(-1))))
      throw std::runtime_error("bilinear_form: invariance fails on s_" + std::to_string(i + 1));
  }
  Rational chi_t = kind == FormKind::b_form ? Rational(-1) : Rational(1);
  RatMat lhs = mat_mul(mat_transpose(rep.t[n - 1]), mat_mul(G, rep.t[n - 1]));
  if (!(lhs == mat_scale(G, chi_t)))
    throw std::runtime_error("bilinear_form: invariance fails on t_n");

  BilinearFormMatrix out;
  out.gram = G;
  out.symmetric = symmetric;
  return out;
}

}  // namespace reflecta
