#pragma once

#include <map>

#include "reflecta/matrix.hpp"
#include "reflecta/signed_perm.hpp"
#include "reflecta/span_basis.hpp"

namespace reflecta {

// Element of the rational group algebra of B_n or D_n: a sorted map
// from group elements to nonzero rational coefficients.
struct AlgebraElement {
  Family family = Family::type_b;
  int n = 0;
  std::map<SignedPermutation, Rational> terms;

  AlgebraElement() = default;
  AlgebraElement(Family f, int n_) : family(f), n(n_) {}
  static AlgebraElement from_group(const SignedPermutation& g, Family f);

  bool is_zero() const { return terms.empty(); }
  size_t support_size() const { return terms.size(); }
  void add_term(const SignedPermutation& g, const Rational& c);
};

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_scale(const AlgebraElement& a, const Rational& c);
AlgebraElement ae_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_bracket(const AlgebraElement& a, const AlgebraElement& b);

// Jucys-Murphy element X_i = sum_{k<i} [(k,i) + t_k t_i (k,i)]; X_1 = 0.
AlgebraElement yjm_element(int i, int n, Family f = Family::type_b);
// script X_n = sum_j X_j and script T_n = sum_j t_j.
AlgebraElement script_x(int n, Family f = Family::type_b);
AlgebraElement script_t(int n);

// Sums over the reflection conjugacy classes, in the reflections() class order.
std::vector<AlgebraElement> class_sums_of_reflections(int n, Family f);

// p(z) = (1/|G|) sum_g g z g^-1; lands in the center.
AlgebraElement center_projection(const AlgebraElement& z, uint64_t budget = 1000000);

// Coordinates of z in the canonical element order of idx.
SparseVecZ algebra_to_vec(const AlgebraElement& z, const GroupIndex& idx);
AlgebraElement vec_to_algebra(const SparseVecZ& v, const GroupIndex& idx);

// Matrix of left multiplication by z on the group algebra.
RatMat regular_representation_matrix(const AlgebraElement& z, const GroupIndex& idx);

}  // namespace reflecta
