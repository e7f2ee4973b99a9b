#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "reflecta/irreps.hpp"
#include "reflecta/span_basis.hpp"
#include "reflecta/tableaux.hpp"

namespace reflecta {

// Image of the derived reflection algebra on one simple module: the
// span of all brackets [W, W] of the reflection-generated algebra W,
// computed as the ad(generator)-closure of the generator-pair brackets
// (seeding with brackets drops the center components up front; the
// ad-closure recovers the odd-depth bracket words that the pair
// brackets alone do not generate).
enum class AlgebraFamily { sl, so, sp, other };
enum class FormParity { none, symmetric, antisymmetric };

struct BlockImage {
  std::string label;
  Family family = Family::type_b;
  int n = 0;
  int module_dim = 0;
  SpanBasis basis{0};  // flattened module_dim x module_dim matrices
  // Coxeter generator images on the module, kept for form computations.
  std::vector<SignedPermutation> generator_elements;
  std::vector<RatMat> generator_images;

  // Modules wider than the exact-arithmetic cutoff are closed through a
  // sandwich certificate instead of the integer RREF (whose entries
  // swell exponentially there): the same ad-closure over a large prime
  // field is a certified lower bound for the rational dimension, and it
  // is accepted only when it meets an exactly verified containment
  // bound (osp(G) for a re-verified invariant form G, or sl since
  // brackets and their ad-images are traceless).  When the bounds do
  // not meet, the block is reported uncertified and fails its verdict.
  bool via_certificate = false;
  bool certificate_conclusive = false;
  int certified_dim = -1;
  AlgebraFamily certified_family = AlgebraFamily::other;
  FormParity certified_parity = FormParity::none;
  std::string certificate;

  int dim() const { return via_certificate ? std::max(certified_dim, 0) : basis.dim(); }
};

BlockImage block_image_b(const Bipartition& label,
                         std::optional<double> max_seconds = std::nullopt);
BlockImage block_image_d(const DLabel& label,
                         std::optional<double> max_seconds = std::nullopt);

std::string algebra_family_name(AlgebraFamily f);

struct ClassificationLabel {
  AlgebraFamily family = AlgebraFamily::other;
  int module_dim = 0;
  int algebra_dim = 0;
  FormParity form_parity = FormParity::none;
  std::string diagnostics;  // set when family == other
};
// "sl(40) dim 1599", "so(36) dim 630 (symmetric form)", ...
std::string classification_to_string(const ClassificationLabel& c);

// Identify a computed block against the classical families.  The
// commutant of the block must be scalar; the invariant-form space is
// then assembled from the group-twisted form spaces over the linear
// characters of the group, and its dimension together with the block
// dimension decides sl vs so vs sp.  A 3-dimensional block on a
// 2-dimensional module reports sl by the sl(2) = sp(2) tie-break.
ClassificationLabel classify(const BlockImage& block);

// What the decomposition theorem predicts for a single block.
struct PredictedBlock {
  AlgebraFamily type = AlgebraFamily::other;
  // The image is an isomorphic copy of an algebra attached to a
  // smaller module (arm-and-leg labels, hook rows of the symmetric
  // group part); only the dimension is compared for these.
  bool collapsed_copy = false;
  Int module_dim = 0;
  Int algebra_dim = 0;
  FormParity parity = FormParity::none;
};
PredictedBlock predicted_block_b(const Bipartition& label);
PredictedBlock predicted_block_d(const DLabel& label, int n);
// "sl dim 63 on module dim 8", "so dim 630 on module dim 36, symmetric form", ...
std::string predicted_block_to_string(const PredictedBlock& p);

// One summand of the predicted decomposition of the derived algebra.
struct PredictedSummand {
  std::string label;
  AlgebraFamily type = AlgebraFamily::other;
  Int module_dim = 0;
  Int algebra_dim = 0;
  FormParity parity = FormParity::none;
  // Labels whose blocks collapse onto / fuse into this summand.
  std::vector<std::string> members;
};

struct PredictedStructure {
  int n = 0;
  Family family = Family::type_b;
  std::vector<PredictedSummand> summands;
  Int derived_dim = 0;
  Int center_dim = 0;  // one per reflection conjugacy class
  Int total_dim = 0;
  bool n2_label_coincidence = false;  // beta = gamma = ([1],[1]) at n = 2
};
// Purely combinatorial: summand list and dimensions derived from the
// label classification, with no matrix computations.
PredictedStructure predicted_structure(int n, Family family);

// Symmetric group decomposition feeding the improper labels: sl(alpha)
// with every proper hook collapsing onto it, sl over the
// {lambda, lambda*} classes of non-symmetric non-hooks, and osp over
// the symmetric non-hooks with parity (n - b(lambda)) / 2.
std::vector<PredictedSummand> marin_structure(int n);

enum class VerifyScope { regular, blocks };

struct SummandVerdict {
  std::string label;
  std::string predicted;
  std::string computed;
  std::string predicted_type;  // sl / so / sp / zero
  Int predicted_dim = 0;
  Int computed_dim = -1;  // -1: not computed (budget)
  bool pass = false;
};

struct TheoremReport {
  int n = 0;
  Family family = Family::type_b;
  VerifyScope scope = VerifyScope::regular;
  bool pass = false;
  bool budget_exceeded = false;
  // regular scope: dimension of the reflection closure in the group
  // algebra against predicted derived + center.
  Int closure_dim = 0;
  Int predicted_derived = 0, predicted_center = 0, predicted_total = 0;
  bool n2_label_coincidence = false;
  // blocks scope: one verdict per requested label.
  std::vector<SummandVerdict> summands;
};

// scope regular: closes the reflections inside the group algebra and
// compares the dimension with the predicted total.  scope blocks:
// block_image + classify for each label (parsed per family; all proper
// labels when none are given).  A budget overrun marks the report
// instead of throwing.
TheoremReport verify_main_theorem(int n, Family family, VerifyScope scope,
                                  const std::vector<std::string>& labels = {},
                                  std::optional<double> max_seconds = std::nullopt);

}  // namespace reflecta
