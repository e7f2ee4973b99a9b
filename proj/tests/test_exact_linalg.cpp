#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "reflecta/linear_solve.hpp"
#include "reflecta/matrix.hpp"
#include "reflecta/span_basis.hpp"

using namespace reflecta;

namespace {

// Deterministic pseudo-random stream for test matrices.
struct Lcg {
  uint64_t state = 0x243f6a8885a308d3ull;
  int next(int lo, int hi) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((state >> 33) % static_cast<uint64_t>(hi - lo + 1));
  }
};

// Independent dense rank oracle: plain fraction Gaussian elimination.
int dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

SparseVecZ vec_of(const std::vector<int>& dense) {
  std::map<int32_t, Int> m;
  for (size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) m[static_cast<int32_t>(i)] = dense[i];
  return SparseVecZ::from_map(m);
}

std::vector<Rational> dense_of(const SparseVecZ& v, int ambient) {
  std::vector<Rational> out(ambient, Rational(0));
  for (size_t k = 0; k < v.idx.size(); ++k) out[v.idx[k]] = Rational(v.val[k]);
  return out;
}

RatMat rat_mat(std::vector<std::vector<int>> rows) {
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("sparse vectors canonicalize to content-free positive-lead form") {
  SparseVecZ v = SparseVecZ::from_rationals({{2, Rational(-4, 6)}, {5, Rational(2, 3)}});
  CHECK(v.idx == std::vector<int32_t>{2, 5});
  // entries -2/3, 2/3 scale to a coprime integer pair with positive lead.
  CHECK(v.val[0] == 1);
  CHECK(v.val[1] == -1);

  // from_map keeps raw entries; canonicalize strips the content
  SparseVecZ w = vec_of({0, -6, 0, 9});
  CHECK(w.val == std::vector<Int>{Int(-6), Int(9)});
  CHECK(w.lead_index() == 1);
  CHECK(w.value_at(0) == Rational(0));
  w.canonicalize();
  CHECK(w.val == std::vector<Int>{Int(2), Int(-3)});
  CHECK(w.value_at(3) == Rational(-3));

  CHECK(SparseVecZ::unit(4).nnz() == 1);
  CHECK(SparseVecZ::from_map({}).empty());
}

TEST_CASE("sparse add and scale match dense arithmetic") {
  Lcg rng;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> a(12), b(12);
    for (int i = 0; i < 12; ++i) {
      a[i] = rng.next(-5, 5);
      b[i] = rng.next(-5, 5);
    }
    SparseVecZ sum = sv_add(vec_of(a), vec_of(b));
    for (int i = 0; i < 12; ++i) CHECK(sum.value_at(i) == Rational(a[i] + b[i]));
    int c = rng.next(-4, 4);
    SparseVecZ scaled = sv_scale(vec_of(a), Int(c));
    for (int i = 0; i < 12; ++i) CHECK(scaled.value_at(i) == Rational(a[i] * c));
  }
}

TEST_CASE("span basis rank agrees with the dense oracle") {
  Lcg rng;
  for (int trial = 0; trial < 10; ++trial) {
    int rows = rng.next(3, 9), cols = rng.next(4, 12);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
    SpanBasis basis(cols);
    for (int r = 0; r < rows; ++r) {
      std::vector<int> row(cols);
      // sprinkle dependencies: sometimes copy a combination of earlier rows
      if (r >= 2 && rng.next(0, 2) == 0) {
        for (int c = 0; c < cols; ++c) {
          Rational v = dense[r - 1][c] * 2 - dense[r - 2][c];
          dense[r][c] = v;
          row[c] = static_cast<int>(v);
        }
      } else {
        for (int c = 0; c < cols; ++c) {
          row[c] = rng.next(-3, 3);
          dense[r][c] = row[c];
        }
      }
      basis.insert(vec_of(row));
    }
    CHECK(basis.dim() == dense_rank(dense));
  }
}

TEST_CASE("span basis rows are canonical regardless of insertion order") {
  std::vector<std::vector<int>> rows = {
      {2, 4, 0, -2, 6}, {1, 1, 1, 1, 1}, {0, 2, -2, -4, 4}, {3, 5, 1, -1, 7}, {0, 0, 5, 5, -10}};
  SpanBasis forward(5), backward(5), shuffled(5);
  for (const auto& r : rows) forward.insert(vec_of(r));
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) backward.insert(vec_of(*it));
  for (int i : {2, 0, 4, 1, 3}) shuffled.insert(vec_of(rows[i]));
  CHECK(forward == backward);
  CHECK(forward == shuffled);
  // pivots strictly increase and pivot columns are cleared in other rows
  for (int i = 0; i < forward.dim(); ++i) {
    if (i > 0) CHECK(forward.pivot(i - 1) < forward.pivot(i));
    for (int j = 0; j < forward.dim(); ++j)
      if (i != j) CHECK(forward.row(j).value_at(forward.pivot(i)) == 0);
  }
}

TEST_CASE("reduce, contains and coordinates recover membership") {
  SpanBasis basis(4);
  basis.insert(vec_of({1, 2, 0, 1}));
  basis.insert(vec_of({0, 1, 1, -1}));
  REQUIRE(basis.dim() == 2);

  // 3*(1,2,0,1) - 2*(0,1,1,-1) lies in the span
  SparseVecZ inside = vec_of({3, 4, -2, 5});
  CHECK(basis.contains(inside));
  auto coords = basis.coordinates(inside);
  REQUIRE(coords.has_value());
  std::vector<Rational> rebuilt(4, Rational(0));
  for (int i = 0; i < basis.dim(); ++i) {
    auto row = basis.rational_row(i);
    for (int c = 0; c < 4; ++c) rebuilt[c] += (*coords)[i] * row[c];
  }
  for (int c = 0; c < 4; ++c) CHECK(rebuilt[c] == inside.value_at(c));

  SparseVecZ outside = vec_of({0, 0, 0, 1});
  CHECK(!basis.contains(outside));
  CHECK(!basis.coordinates(outside).has_value());
  SparseVecZ residue = basis.reduce(outside);
  CHECK(!residue.empty());
  SpanBasis grown = basis;
  grown.insert_residue(residue);
  CHECK(grown.dim() == 3);
  CHECK(grown.contains(outside));
}

TEST_CASE("nullspace vectors annihilate the constraint rows") {
  Lcg rng;
  for (int trial = 0; trial < 8; ++trial) {
    int rows = rng.next(2, 5), cols = rng.next(4, 9);
    std::vector<SparseVecZ> constraint;
    std::vector<std::vector<Rational>> dense;
    for (int r = 0; r < rows; ++r) {
      std::vector<int> row(cols);
      for (int c = 0; c < cols; ++c) row[c] = rng.next(-2, 2);
      constraint.push_back(vec_of(row));
      dense.emplace_back(row.begin(), row.end());
    }
    SpanBasis null = nullspace_of_rows(constraint, cols);
    CHECK(null.dim() == cols - dense_rank(dense));
    for (int i = 0; i < null.dim(); ++i) {
      auto x = dense_of(null.row(i), cols);
      for (const auto& row : dense) {
        Rational dot(0);
        for (int c = 0; c < cols; ++c) dot += row[c] * x[c];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("matrix helpers: bracket, trace, scalar detection, flatten") {
  RatMat a = rat_mat({{1, 2}, {3, 4}});
  RatMat b = rat_mat({{0, 1}, {-1, 0}});
  CHECK(mat_bracket(a, b) == mat_scale(mat_bracket(b, a), Rational(-1)));
  CHECK(mat_trace(mat_bracket(a, b)) == 0);
  CHECK(mat_trace(a) == 5);
  CHECK(mat_is_zero(mat_sub(a, a)));
  Rational s;
  CHECK(mat_is_scalar(mat_scale(RatMat::identity(3), Rational(7, 2)), &s));
  CHECK(s == Rational(7, 2));
  CHECK(!mat_is_scalar(a));
  SparseVecZ flat = mat_flatten(b);
  CHECK(flat.value_at(1) == 1);
  CHECK(flat.value_at(2) == -1);
  CHECK(flat.nnz() == 2);
}

TEST_CASE("integer-scaled sparse matrices preserve the rational entries") {
  RatMat m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(-2, 3);
  m.at(1, 1) = Rational(5);
  IMatSparse s = IMatSparse::from_rat(m);
  CHECK(s.den == 6);
  std::map<std::pair<int, int32_t>, Int> got;
  for (int i = 0; i < s.n; ++i)
    for (const auto& [j, num] : s.row_entries[i]) got[{i, j}] = num;
  CHECK(got[{0, 0}] == 3);
  CHECK(got[{0, 1}] == -4);
  CHECK(got[{1, 1}] == 30);
}

TEST_CASE("commutant solver on known centralizers") {
  // distinct diagonal: commutant = diagonal matrices
  RatMat diag = rat_mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(solve_commutant({diag}).size() == 3);

  // 3-cycle permutation: commutant = circulants, dimension 3
  RatMat cyc = rat_mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  auto circ = solve_commutant({cyc});
  CHECK(circ.size() == 3);
  for (const auto& c : circ) CHECK(mat_bracket(c, cyc) == RatMat(3, 3));

  // both together: polynomials in cyc commuting with diag = scalars
  CHECK(solve_commutant({diag, cyc}).size() == 1);

  // simple 2-dimensional pair: scalars only
  RatMat s1 = rat_mat({{-1, 1}, {0, 1}});
  RatMat s2 = rat_mat({{1, 0}, {1, -1}});
  auto comm = solve_commutant({s1, s2});
  REQUIRE(comm.size() == 1);
  CHECK(mat_is_scalar(comm[0]));
}

TEST_CASE("invariant-form solver on the rotation generator") {
  // M = [[0,1],[-1,0]]: M^T G + G M = 0 forces a=d, b=-c (dimension 2)
  RatMat m = rat_mat({{0, 1}, {-1, 0}});
  auto forms = solve_invariant_form({m});
  REQUIRE(forms.size() == 2);
  for (const auto& g : forms) CHECK(mat_add(mat_mul(mat_transpose(m), g), mat_mul(g, m)) == RatMat(2, 2));
}

TEST_CASE("group-invariant forms of the permutation action") {
  // S_3 permuting coordinates: invariant forms = a*I + b*J, dimension 2
  RatMat s1 = rat_mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  RatMat s2 = rat_mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  std::vector<Rational> chi{Rational(1), Rational(1)};
  auto forms = solve_group_invariant_form({s1, s2}, chi);
  REQUIRE(forms.size() == 2);
  for (const auto& g : forms) {
    CHECK(mat_mul(mat_transpose(s1), mat_mul(g, s1)) == g);
    CHECK(mat_mul(mat_transpose(s2), mat_mul(g, s2)) == g);
  }
  // sign-twisted forms: the standard summand is self-associate under the
  // sign character, so s^T G s = -G has a 1-dimensional solution space
  std::vector<Rational> minus{Rational(-1), Rational(-1)};
  auto twisted = solve_group_invariant_form({s1, s2}, minus);
  REQUIRE(twisted.size() == 1);
  CHECK(mat_mul(mat_transpose(s1), mat_mul(twisted[0], s1)) ==
        mat_scale(twisted[0], Rational(-1)));
}

TEST_CASE("intertwiner space dimension counts multiplicities") {
  RatMat s1 = rat_mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  RatMat s2 = rat_mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  std::vector<Rational> chi{Rational(1), Rational(1)};
  // permutation rep = trivial + standard: End has dimension 1 + 1 = 2
  auto hom = solve_intertwiner_space({s1, s2}, {s1, s2}, chi);
  CHECK(hom.size() == 2);
  // intertwiners to the trivial representation: the all-ones row
  RatMat triv = RatMat::identity(1);
  auto to_triv = solve_intertwiner_space({s1, s2}, {triv, triv}, chi);
  REQUIRE(to_triv.size() == 1);
  CHECK(to_triv[0].at(0, 0) == to_triv[0].at(0, 1));
  CHECK(to_triv[0].at(0, 1) == to_triv[0].at(0, 2));
}
