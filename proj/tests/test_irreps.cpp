#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "reflecta/irreps.hpp"
#include "reflecta/linear_solve.hpp"
#include "reflecta/report.hpp"

using namespace reflecta;

namespace {

RatMat diag_of(const std::vector<Rational>& w) {
  RatMat m(static_cast<int>(w.size()), static_cast<int>(w.size()));
  for (size_t i = 0; i < w.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = w[i];
  return m;
}

std::vector<RatMat> all_generator_images(const RepMatrixSet& rep) {
  std::vector<RatMat> out = rep.s;
  const auto& extra = rep.family == Family::type_b ? rep.t : rep.u;
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

Rational character(const RepMatrixSet& rep, const SignedPermutation& g) {
  return mat_trace(rep.exact_matrix(g));
}

bool approx_close(const ApproxMat& a, const ApproxMat& b) {
  return amat_max_abs(amat_sub(a, b)) < approx_zero_tolerance();
}

ApproxMat amat_transpose(const ApproxMat& m) {
  ApproxMat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("matrix models have the predicted dimensions") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& bp : bipartitions(n, true)) {
      RepMatrixSet rep = build_rep_b(bp, ScalarMode::exact_seminormal);
      CHECK(Int(rep.dim) == dim_formula(bp));
      CHECK(rep.n == n);
      CHECK(static_cast<int>(rep.s.size()) == n - 1);
      CHECK(static_cast<int>(rep.t.size()) == n);
      CHECK(rep.basis.size() == static_cast<size_t>(rep.dim));
    }
    for (const auto& l : d_irrep_labels(n)) {
      RepMatrixSet rep = build_rep_d(l, ScalarMode::exact_seminormal);
      CHECK(Int(rep.dim) == d_label_dim(l, n));
      CHECK(static_cast<int>(rep.u.size()) == n - 1);
      CHECK(rep.dsign == l.sign);
    }
  }
}

TEST_CASE("word evaluation is a group homomorphism") {
  RepMatrixSet rep = build_rep_b({{2}, {1}}, ScalarMode::exact_seminormal);
  auto els = enumerate_group(3, Family::type_b);
  // generator images agree with the stored matrices
  for (int i = 1; i < 3; ++i) CHECK(rep.exact_matrix(sp_s(i, 3)) == rep.s[i - 1]);
  for (int i = 1; i <= 3; ++i) CHECK(rep.exact_matrix(sp_t(i, 3)) == rep.t[i - 1]);
  for (size_t i = 0; i < els.size(); i += 3)
    for (size_t j = 0; j < els.size(); j += 5)
      CHECK(rep.exact_matrix(sp_mul(els[i], els[j])) ==
            mat_mul(rep.exact_matrix(els[i]), rep.exact_matrix(els[j])));

  RepMatrixSet drep = build_rep_d(d_label_from_string("{[2],[1]}"), ScalarMode::exact_seminormal);
  auto dels = enumerate_group(3, Family::type_d);
  for (size_t i = 0; i < dels.size(); i += 2)
    for (size_t j = 0; j < dels.size(); j += 3)
      CHECK(drep.exact_matrix(sp_mul(dels[i], dels[j])) ==
            mat_mul(drep.exact_matrix(dels[i]), drep.exact_matrix(dels[j])));
}

TEST_CASE("characters are orthonormal across the full label set") {
  // sum_g chi_a(g) chi_b(g) = |G| delta_ab certifies that the models are
  // irreducible and pairwise non-isomorphic
  auto els = enumerate_group(3, Family::type_b);
  std::vector<std::vector<Rational>> chars;
  for (const auto& bp : bipartitions(3, true)) {
    RepMatrixSet rep = build_rep_b(bp, ScalarMode::exact_seminormal);
    std::vector<Rational> chi;
    for (const auto& g : els) chi.push_back(character(rep, g));
    chars.push_back(std::move(chi));
  }
  for (size_t a = 0; a < chars.size(); ++a)
    for (size_t b = a; b < chars.size(); ++b) {
      Rational dot(0);
      for (size_t k = 0; k < els.size(); ++k) dot += chars[a][k] * chars[b][k];
      CHECK(dot == (a == b ? Rational(els.size()) : Rational(0)));
    }

  auto dels = enumerate_group(3, Family::type_d);
  std::vector<std::vector<Rational>> dchars;
  for (const auto& l : d_irrep_labels(3)) {
    RepMatrixSet rep = build_rep_d(l, ScalarMode::exact_seminormal);
    std::vector<Rational> chi;
    for (const auto& g : dels) chi.push_back(character(rep, g));
    dchars.push_back(std::move(chi));
  }
  for (size_t a = 0; a < dchars.size(); ++a)
    for (size_t b = a; b < dchars.size(); ++b) {
      Rational dot(0);
      for (size_t k = 0; k < dels.size(); ++k) dot += dchars[a][k] * dchars[b][k];
      CHECK(dot == (a == b ? Rational(dels.size()) : Rational(0)));
    }
}

TEST_CASE("commutants are scalar: the models are irreducible") {
  for (int n : {3, 4}) {
    for (const auto& bp : bipartitions(n, true)) {
      RepMatrixSet rep = build_rep_b(bp, ScalarMode::exact_seminormal);
      auto comm = solve_commutant(all_generator_images(rep));
      REQUIRE(comm.size() == 1);
      CHECK(mat_is_scalar(comm[0]));
    }
    for (const auto& l : d_irrep_labels(n)) {
      RepMatrixSet rep = build_rep_d(l, ScalarMode::exact_seminormal);
      CHECK(solve_commutant(all_generator_images(rep)).size() == 1);
    }
  }
}

TEST_CASE("seminormal weights give an invariant diagonal gram matrix") {
  for (const auto& bp : bipartitions(4, true)) {
    auto w = seminormal_weights(bp);
    CHECK(w.size() == standard_bitableaux(bp).size());
    for (const auto& v : w) CHECK(v > 0);
    RepMatrixSet rep = build_rep_b(bp, ScalarMode::exact_seminormal);
    RatMat W = diag_of(w);
    for (const auto& g : all_generator_images(rep))
      CHECK(mat_mul(mat_transpose(g), mat_mul(W, g)) == W);
  }
}

TEST_CASE("approx mode: orthogonal matrices matching the exact traces") {
  for (const auto& bp : bipartitions(3, true)) {
    RepMatrixSet ex = build_rep_b(bp, ScalarMode::exact_seminormal);
    RepMatrixSet ap = build_rep_b(bp, ScalarMode::approx_orthogonal);
    CHECK(ap.dim == ex.dim);
    ApproxMat id = ApproxMat::identity(ap.dim);
    for (int i = 0; i < 2; ++i) {
      // the orthogonal model has symmetric orthogonal generator images
      CHECK(approx_close(amat_mul(amat_transpose(ap.as[i]), ap.as[i]), id));
      CHECK(approx_close(amat_transpose(ap.as[i]), ap.as[i]));
      // traces are conjugation-invariant, so the two modes must agree
      ApproxScalar tr = make_approx(0);
      for (int v = 0; v < ap.dim; ++v) tr += ap.as[i].at(v, v);
      CHECK(abs(tr - approx_from_rational(mat_trace(ex.s[i]))) < approx_zero_tolerance());
    }
    for (int i = 0; i < 3; ++i) {
      ApproxScalar tr = make_approx(0);
      for (int v = 0; v < ap.dim; ++v) tr += ap.at[i].at(v, v);
      CHECK(abs(tr - approx_from_rational(mat_trace(ex.t[i]))) < approx_zero_tolerance());
    }
    // relation residues stay far below the acceptance tolerance 2^-100
    for (int i = 0; i < 2; ++i)
      CHECK(amat_max_abs(amat_sub(amat_mul(ap.as[i], ap.as[i]), id)) < approx_zero_tolerance());
  }
}

TEST_CASE("restriction to D and the plus-minus split") {
  // lambda != mu: the restriction stays irreducible
  RepMatrixSet b = build_rep_b({{2}, {1}}, ScalarMode::exact_seminormal);
  RepMatrixSet restr = restrict_to_d(b);
  CHECK(restr.family == Family::type_d);
  CHECK(restr.dim == b.dim);
  CHECK(solve_commutant(all_generator_images(restr)).size() == 1);
  auto pieces = split_module(restr);
  REQUIRE(pieces.size() == 1);

  // lambda = mu: the restriction splits into two conjugate halves
  RepMatrixSet sq = restrict_to_d(build_rep_b({{2}, {2}}, ScalarMode::exact_seminormal));
  CHECK(solve_commutant(all_generator_images(sq)).size() == 2);
  auto halves = split_module(sq);
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].dim == sq.dim / 2);
  CHECK(halves[1].dim == sq.dim / 2);
  CHECK(halves[0].dsign == 1);
  CHECK(halves[1].dsign == -1);
  // the halves are non-isomorphic: some group element separates the traces
  auto dels = enumerate_group(4, Family::type_d);
  bool separated = false;
  for (const auto& g : dels) {
    Rational t0 = character(halves[0], g), t1 = character(halves[1], g);
    CHECK(t0 + t1 == character(sq, g));  // characters add up to the restriction
    if (t0 != t1) separated = true;
  }
  CHECK(separated);

  // build_rep_d returns the same halves directly
  RepMatrixSet plus = build_rep_d(d_label_from_string("{[2],+}"), ScalarMode::exact_seminormal);
  CHECK(plus.dim == 3);
  CHECK(plus.dsign == 1);
  for (const auto& t : plus.basis) CHECK(rho_of(t, 1) == 1);
}

TEST_CASE("intertwiners obey their twisted equivariance") {
  for (const auto& bp : bipartitions(3, true)) {
    RepMatrixSet rep = build_rep_b(bp, ScalarMode::exact_seminormal);
    RepMatrixSet swp = build_rep_b(swap_parts(bp), ScalarMode::exact_seminormal);
    RepMatrixSet cnj = build_rep_b(conjugate_parts(bp), ScalarMode::exact_seminormal);
    RepMatrixSet dua = build_rep_b(dual_partner(bp), ScalarMode::exact_seminormal);

    RatMat p = intertwiner_eps_prime(bp);
    RatMat dp = intertwiner_eps_dprime(bp);
    RatMat e = intertwiner_eps(bp);
    for (int i = 0; i < 2; ++i) {
      CHECK(mat_mul(p, rep.s[i]) == mat_mul(swp.s[i], p));                            // eps'(s_i) = 1
      CHECK(mat_mul(dp, rep.s[i]) == mat_scale(mat_mul(cnj.s[i], dp), Rational(-1))); // eps''(s_i) = -1
      CHECK(mat_mul(e, rep.s[i]) == mat_scale(mat_mul(dua.s[i], e), Rational(-1)));
    }
    CHECK(mat_mul(p, rep.t[2]) == mat_scale(mat_mul(swp.t[2], p), Rational(-1)));     // eps'(t_n) = -1
    CHECK(mat_mul(dp, rep.t[2]) == mat_mul(cnj.t[2], dp));                            // eps''(t_n) = 1
    CHECK(mat_mul(e, rep.t[2]) == mat_scale(mat_mul(dua.t[2], e), Rational(-1)));

    // phi_eps' composed with its partner is the identity
    CHECK(mat_mul(intertwiner_eps_prime(swap_parts(bp)), p) == RatMat::identity(rep.dim));
  }
}

TEST_CASE("bilinear forms carry the predicted parity") {
  // ([1],[1]): b-form at n = 2, n/2 odd -> antisymmetric
  BilinearFormMatrix b11 = bilinear_form({{1}, {1}}, FormKind::b_form);
  CHECK(!b11.symmetric);
  CHECK(b11.gram.rows == 2);
  // ([1],[1]): d-form, (2 - 1 - 1)/2 even -> symmetric
  BilinearFormMatrix d11 = bilinear_form({{1}, {1}}, FormKind::d_form);
  CHECK(d11.symmetric);
  // ([2],[1,1]): b-form at n = 4, n/2 even -> symmetric
  CHECK(bilinear_form({{2}, {1, 1}}, FormKind::b_form).symmetric);
  // ([2,2],[]): d-form, (4 - 2 - 0)/2 odd -> antisymmetric
  CHECK(!bilinear_form({{2, 2}, {}}, FormKind::d_form).symmetric);
  // labels outside the fixed locus are rejected
  CHECK_THROWS(bilinear_form({{2}, {1}}, FormKind::b_form));
  CHECK_THROWS(bilinear_form({{2}, {1}}, FormKind::d_form));
}

TEST_CASE("artin-wedderburn counts close for both families") {
  for (int n = 2; n <= 8; ++n) {
    AWReport b = artin_wedderburn_check(n, Family::type_b);
    CHECK(b.pass);
    AWReport d = artin_wedderburn_check(n, Family::type_d);
    CHECK(d.pass);
    CHECK(b.group_order == 2 * d.group_order);
  }
  CHECK(artin_wedderburn_check(2, Family::type_b).label_count == 5);
  CHECK(artin_wedderburn_check(3, Family::type_d).label_count == 5);
}

TEST_CASE("representation export is deterministic and versioned") {
  RepMatrixSet rep = build_rep_b({{2}, {1}}, ScalarMode::exact_seminormal);
  std::string a = render_rep_export(rep);
  std::string b = render_rep_export(build_rep_b({{2}, {1}}, ScalarMode::exact_seminormal));
  CHECK(a == b);
  CHECK(a.find("\"schema_version\":1") != std::string::npos);
  CHECK(a.find("([2],[1])") != std::string::npos);
  CHECK(a.back() == '\n');
  RepMatrixSet ap = build_rep_b({{2}, {1}}, ScalarMode::approx_orthogonal);
  std::string c = render_rep_export(ap);
  CHECK(c.find("precision_bits") != std::string::npos);
}
