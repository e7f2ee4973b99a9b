#include "reflecta/group_algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace reflecta {

AlgebraElement AlgebraElement::from_group(const SignedPermutation& g, Family f) {
  AlgebraElement z(f, g.n());
  if (f == Family::type_d && !in_type_d(g))
    throw std::invalid_argument("element is not in the type D subgroup");
  z.terms[g] = Rational(1);
  return z;
}

void AlgebraElement::add_term(const SignedPermutation& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b) {
  assert(a.family == b.family && a.n == b.n);
  AlgebraElement out = a;
  for (const auto& [g, c] : b.terms) out.add_term(g, c);
  return out;
}

AlgebraElement ae_scale(const AlgebraElement& a, const Rational& c) {
  AlgebraElement out(a.family, a.n);
  if (c == 0) return out;
  for (const auto& [g, x] : a.terms) out.terms[g] = x * c;
  return out;
}

AlgebraElement ae_mul(const AlgebraElement& a, const AlgebraElement& b) {
  assert(a.family == b.family && a.n == b.n);
  AlgebraElement out(a.family, a.n);
  for (const auto& [g, x] : a.terms)
    for (const auto& [h, y] : b.terms) out.add_term(sp_mul(g, h), x * y);
  return out;
}

AlgebraElement ae_bracket(const AlgebraElement& a, const AlgebraElement& b) {
  return ae_add(ae_mul(a, b), ae_scale(ae_mul(b, a), Rational(-1)));
}

AlgebraElement yjm_element(int i, int n, Family f) {
  AlgebraElement z(f, n);
  for (int k = 1; k < i; ++k) {
    z.add_term(sp_transposition(k, i, n), Rational(1));
    z.add_term(sp_neg_transposition(k, i, n), Rational(1));
  }
  return z;
}

AlgebraElement script_x(int n, Family f) {
  AlgebraElement z(f, n);
  for (int j = 1; j <= n; ++j) z = ae_add(z, yjm_element(j, n, f));
  return z;
}

AlgebraElement script_t(int n) {
  AlgebraElement z(Family::type_b, n);
  for (int j = 1; j <= n; ++j) z.add_term(sp_t(j, n), Rational(1));
  return z;
}

std::vector<AlgebraElement> class_sums_of_reflections(int n, Family f) {
  std::vector<AlgebraElement> out;
  for (const auto& cls : reflections(n, f)) {
    AlgebraElement z(f, n);
    for (const auto& g : cls) z.add_term(g, Rational(1));
    out.push_back(std::move(z));
  }
  return out;
}

AlgebraElement center_projection(const AlgebraElement& z, uint64_t budget) {
  auto group = enumerate_group(z.n, z.family, budget);
  AlgebraElement out(z.family, z.n);
  for (const auto& g : group) {
    SignedPermutation gi = sp_inv(g);
    for (const auto& [h, c] : z.terms) out.add_term(sp_mul(g, sp_mul(h, gi)), c);
  }
  return ae_scale(out, Rational(1, static_cast<long>(group.size())));
}

SparseVecZ algebra_to_vec(const AlgebraElement& z, const GroupIndex& idx) {
  std::map<int32_t, Rational> m;
  for (const auto& [g, c] : z.terms) m[idx.index_of(g)] = c;
  return SparseVecZ::from_rationals(m);
}

AlgebraElement vec_to_algebra(const SparseVecZ& v, const GroupIndex& idx) {
  AlgebraElement z(idx.family(), idx.n());
  for (size_t k = 0; k < v.idx.size(); ++k)
    z.terms[idx.element(v.idx[k])] = Rational(v.val[k]);
  return z;
}

RatMat regular_representation_matrix(const AlgebraElement& z, const GroupIndex& idx) {
  const int m = idx.size();
  RatMat out(m, m);
  for (const auto& [g, c] : z.terms) {
    const auto perm = idx.left_action(g);
    for (int j = 0; j < m; ++j) out.at(perm[j], j) += c;
  }
  return out;
}

}  // namespace reflecta
