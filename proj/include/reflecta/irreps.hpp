#pragma once

#include <string>
#include <vector>

#include "reflecta/matrix.hpp"
#include "reflecta/signed_perm.hpp"
#include "reflecta/tableaux.hpp"

namespace reflecta {

enum class ScalarMode { exact_seminormal, approx_orthogonal };

// Matrix model of one simple module.  Type B sets store matrices for
// s_1..s_{n-1} and t_1..t_n; type D sets store s_1..s_{n-1} and
// u_1..u_{n-1} (u_i = t_1 t_{i+1}), which is what the type D word
// decomposition consumes.  Exactly one of the exact / approx matrix
// families is populated, per mode.
struct RepMatrixSet {
  Family family = Family::type_b;
  ScalarMode mode = ScalarMode::exact_seminormal;
  std::string label;
  Bipartition shape;  // ordered shape backing the basis
  int dsign = 0;      // +-1 for {lambda,+-} labels, else 0
  int n = 0;
  int dim = 0;
  // Basis bitableaux; for {lambda,+-} these are the tags T of the
  // basis vectors built from the pair {T, T-swap}.
  std::vector<StandardBitableau> basis;

  std::vector<RatMat> s, t, u;
  std::vector<ApproxMat> as, at, au;

  bool exact() const { return mode == ScalarMode::exact_seminormal; }
  RatMat exact_matrix(const SignedPermutation& g) const;
  ApproxMat approx_matrix(const SignedPermutation& g) const;
};

// Normal-form model of S^(lambda,mu); construction verifies the
// defining relations and throws on failure.
RepMatrixSet build_rep_b(const Bipartition& shape, ScalarMode mode, uint64_t budget = 200000);

// Restriction of a type B set to the type D generator family.
RepMatrixSet restrict_to_d(const RepMatrixSet& rep);

// Exact splitting of a restricted module via commutant idempotents.
// dim(commutant) = 1 returns {rep}; dim 2 returns the two pieces, the
// one containing the +-signed row-major vector first.
std::vector<RepMatrixSet> split_module(const RepMatrixSet& rep);

// Simple type D modules: {lambda,mu} with lambda != mu, or {lambda,+-}.
RepMatrixSet build_rep_d(const DLabel& label, ScalarMode mode, uint64_t budget = 200000);

// Diagonal Gram entries <c_T, c_T> of the seminormal basis.
std::vector<Rational> seminormal_weights(const Bipartition& shape);

// phi_eps' : S^(lambda,mu) -> S^(mu,lambda), c_T -> c_{T-swap}; exact
// in seminormal coordinates.
RatMat intertwiner_eps_prime(const Bipartition& shape);
// phi_eps'': S^(lambda,mu) -> S^(lambda*,mu*); the seminormal matrix
// carries rational scale factors (normalized to 1 on the row-major
// tableau) alongside the (-1)^{l(T)} signs.
RatMat intertwiner_eps_dprime(const Bipartition& shape);
// phi_eps = phi_eps'' after phi_eps': S^(lambda,mu) -> S^(mu*,lambda*).
RatMat intertwiner_eps(const Bipartition& shape);

enum class FormKind { b_form, d_form };

struct BilinearFormMatrix {
  RatMat gram;
  bool symmetric = false;
};

// Invariant bilinear form <u, phi(v)> on the seminormal basis;
// b_form needs (lambda,mu) = (mu*,lambda*) (twist eps), d_form needs
// (lambda,mu) = (lambda*,mu*) (twist eps'').  Construction checks the
// claimed parity and the twisted invariance and throws on failure.
BilinearFormMatrix bilinear_form(const Bipartition& label, FormKind kind);

struct AWReport {
  Int group_order = 0;
  Int dim_square_sum = 0;
  int label_count = 0;
  bool pass = false;
};
AWReport artin_wedderburn_check(int n, Family f);

struct BranchBlock {
  std::string target;    // predicted smaller-rank label
  int size = 0;          // number of basis vectors in the block
  bool stable = false;   // block preserved by subgroup generators
  bool weights_match = false;
};

struct BranchReport {
  std::string label;
  std::string flavor;
  bool pass = false;
  std::vector<BranchBlock> blocks;
};

enum class BranchFlavor { b_to_b, d_to_d, d_to_folding };
BranchReport verify_branching(const DLabel& label, BranchFlavor flavor, ScalarMode mode);
BranchReport verify_branching_b(const Bipartition& shape);

struct ExtPowerReport {
  int n = 0, d = 0;
  char tag = 'b';
  int dim = 0;
  bool shift_identity = false;  // derivation action = wedge action + (d-1) Id
  bool traces_match = false;
  bool intertwiner_found = false;
  bool pass = false;
};
// Compares build_rep_b(beta_d or gamma_d) with the derivation action on
// the d-th wedge of the natural (resp. natural-twisted) module, as
// modules over the span of reflection brackets.
ExtPowerReport verify_exterior_power(int n, int d, char tag);

}  // namespace reflecta
