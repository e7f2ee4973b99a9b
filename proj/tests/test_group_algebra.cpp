#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "reflecta/group_algebra.hpp"

using namespace reflecta;

namespace {

AlgebraElement sample_element(const GroupIndex& idx, int seed) {
  AlgebraElement z(idx.family(), idx.n());
  for (int k = 0; k < 4; ++k) {
    int i = (seed * 7 + k * 13) % idx.size();
    z.add_term(idx.element(i), Rational(seed + k + 1, k + 2));
  }
  return z;
}

bool commutes_with_group(const AlgebraElement& z, const GroupIndex& idx) {
  for (const auto& g : generators(idx.n(), idx.family() == Family::type_b
                                               ? GeneratorSystem::coxeter_b
                                               : GeneratorSystem::coxeter_d)) {
    AlgebraElement ge = AlgebraElement::from_group(g, idx.family());
    if (!ae_bracket(z, ge).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("algebra arithmetic: units, linearity, cancellation") {
  GroupIndex idx(3, Family::type_b);
  AlgebraElement a = sample_element(idx, 1);
  AlgebraElement b = sample_element(idx, 2);

  CHECK(ae_add(a, ae_scale(a, Rational(-1))).is_zero());
  AlgebraElement e = AlgebraElement::from_group(SignedPermutation::identity(3), Family::type_b);
  CHECK(ae_mul(e, a).terms == a.terms);
  CHECK(ae_mul(a, e).terms == a.terms);
  // distributivity: a*(b + b) = a*b + a*b
  AlgebraElement lhs = ae_mul(a, ae_add(b, b));
  AlgebraElement rhs = ae_add(ae_mul(a, b), ae_mul(a, b));
  CHECK(ae_add(lhs, ae_scale(rhs, Rational(-1))).is_zero());
}

TEST_CASE("multiplication agrees with the regular representation") {
  GroupIndex idx(3, Family::type_b);
  for (int s : {1, 2, 5}) {
    AlgebraElement a = sample_element(idx, s);
    AlgebraElement b = sample_element(idx, s + 3);
    RatMat la = regular_representation_matrix(a, idx);
    SparseVecZ vb = algebra_to_vec(b, idx);
    SparseVecZ vab = algebra_to_vec(ae_mul(a, b), idx);
    // L_a * vec(b) must be a fixed scalar multiple of vec(a*b): the
    // coordinate vectors are canonical integer scalings
    std::vector<Rational> got(idx.size(), Rational(0));
    for (int i = 0; i < idx.size(); ++i)
      for (int j = 0; j < idx.size(); ++j) got[i] += la.at(i, j) * vb.value_at(j);
    Rational scale(0);
    for (int i = 0; i < idx.size(); ++i) {
      Rational want = vab.value_at(i);
      if (scale == 0 && want != 0) scale = got[i] / want;
      CHECK(got[i] == scale * want);
    }
    CHECK(scale != 0);
  }
  // L is a homomorphism: L_{ab} = L_a L_b
  AlgebraElement a = sample_element(idx, 4);
  AlgebraElement b = sample_element(idx, 9);
  CHECK(regular_representation_matrix(ae_mul(a, b), idx) ==
        mat_mul(regular_representation_matrix(a, idx), regular_representation_matrix(b, idx)));
}

TEST_CASE("bracket is antisymmetric and satisfies jacobi") {
  GroupIndex idx(3, Family::type_d);
  AlgebraElement a = sample_element(idx, 2);
  AlgebraElement b = sample_element(idx, 3);
  AlgebraElement c = sample_element(idx, 7);
  CHECK(ae_add(ae_bracket(a, b), ae_bracket(b, a)).is_zero());
  AlgebraElement jac = ae_add(ae_add(ae_bracket(a, ae_bracket(b, c)),
                                     ae_bracket(b, ae_bracket(c, a))),
                              ae_bracket(c, ae_bracket(a, b)));
  CHECK(jac.is_zero());
}

TEST_CASE("vector coordinates round-trip through the group index") {
  GroupIndex idx(3, Family::type_b);
  AlgebraElement a = sample_element(idx, 6);
  AlgebraElement back = vec_to_algebra(algebra_to_vec(a, idx), idx);
  // algebra_to_vec clears denominators, so compare up to the scale on a
  // reference term
  auto it = a.terms.begin();
  Rational scale = back.terms.at(it->first) / it->second;
  CHECK(scale != 0);
  for (const auto& [g, c] : a.terms) CHECK(back.terms.at(g) == scale * c);
  CHECK(back.support_size() == a.support_size());
}

TEST_CASE("jucys-murphy elements commute pairwise") {
  for (int n : {3, 4}) {
    std::vector<AlgebraElement> x;
    for (int i = 1; i <= n; ++i) x.push_back(yjm_element(i, n));
    CHECK(x[0].is_zero());  // X_1 = 0
    CHECK(x[1].support_size() == 2);
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = i + 1; j < x.size(); ++j) CHECK(ae_bracket(x[i], x[j]).is_zero());
    // X_i also commutes with every t_k
    for (int i = 2; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        AlgebraElement tk = AlgebraElement::from_group(sp_t(k, n), Family::type_b);
        CHECK(ae_bracket(x[i - 1], tk).is_zero());
      }
  }
}

TEST_CASE("script elements are the reflection class sums") {
  for (int n : {2, 3, 4}) {
    auto cls = class_sums_of_reflections(n, Family::type_b);
    REQUIRE(cls.size() == 2);
    AlgebraElement x = script_x(n);
    AlgebraElement t = script_t(n);
    CHECK(ae_add(x, ae_scale(cls[0], Rational(-1))).is_zero());
    CHECK(ae_add(t, ae_scale(cls[1], Rational(-1))).is_zero());
    CHECK(x.support_size() == static_cast<size_t>(n * (n - 1)));
    CHECK(t.support_size() == static_cast<size_t>(n));

    auto dcls = class_sums_of_reflections(n, Family::type_d);
    AlgebraElement dx = script_x(n, Family::type_d);
    AlgebraElement dsum(Family::type_d, n);
    for (const auto& c : dcls) dsum = ae_add(dsum, c);
    CHECK(ae_add(dx, ae_scale(dsum, Rational(-1))).is_zero());
  }
}

TEST_CASE("class sums and script elements are central") {
  for (Family f : {Family::type_b, Family::type_d}) {
    GroupIndex idx(3, f);
    for (const auto& c : class_sums_of_reflections(3, f)) CHECK(commutes_with_group(c, idx));
    CHECK(commutes_with_group(script_x(3, f), idx));
    if (f == Family::type_b) CHECK(commutes_with_group(script_t(3), idx));
  }
}

TEST_CASE("center projection averages into the center and fixes it") {
  GroupIndex idx(3, Family::type_b);
  AlgebraElement z = sample_element(idx, 11);
  AlgebraElement p = center_projection(z);
  CHECK(commutes_with_group(p, idx));
  // projection is idempotent
  AlgebraElement pp = center_projection(p);
  CHECK(ae_add(pp, ae_scale(p, Rational(-1))).is_zero());
  // class sums are already central, hence fixed
  AlgebraElement cs = class_sums_of_reflections(3, Family::type_b)[1];
  AlgebraElement pcs = center_projection(cs);
  CHECK(ae_add(pcs, ae_scale(cs, Rational(-1))).is_zero());
  // coefficients of p are constant on the conjugacy class of each term
  for (const auto& [g, coeff] : p.terms) {
    for (const auto& h : generators(3, GeneratorSystem::coxeter_b)) {
      SignedPermutation conj = sp_mul(sp_mul(h, g), sp_inv(h));
      CHECK(p.terms.at(conj) == coeff);
    }
  }
}
