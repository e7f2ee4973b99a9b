#include "reflecta/lie_structure.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflecta/group_algebra.hpp"
#include "reflecta/lie_closure.hpp"
#include "reflecta/linear_solve.hpp"
#include "reflecta/matrix.hpp"

namespace reflecta {

namespace {

RatMat row_to_mat(const SparseVecZ& row, int d) {
  RatMat m(d, d);
  for (size_t k = 0; k < row.idx.size(); ++k)
    m.a[static_cast<size_t>(row.idx[k])] = Rational(row.val[k]);
  return m;
}

// Exact integer RREF handles modules up to this width; past it the
// intermediate spans of the block closures have canonical bases with
// exponentially growing entries, so the certificate path takes over.
// Within the width limit the exact attempt is still capped: some
// restricted modules swell badly even at width 20, and the certificate
// settles them in seconds.
constexpr int kExactBlockDim = 20;
constexpr double kExactAttemptSeconds = 15.0;
constexpr uint32_t kScoutPrimes[] = {2147483647u, 2147483629u, 2147483587u};

// Checks that G is a nondegenerate (anti)symmetric bilinear form with
// g^T G g = -G for every generator image (generators acting as +-1
// scalars are exempt: their ad vanishes).  These identities make osp(G)
// stable under every ad(g) and place the seed brackets inside it, so
// the whole ad-closure is contained in osp(G).
std::optional<FormParity> verify_container_form(const RatMat& G,
                                                const std::vector<RatMat>& gen_imgs) {
  const int d = G.rows;
  if (d == 0 || G.cols != d) return std::nullopt;
  RatMat gt = mat_transpose(G);
  FormParity parity;
  if (gt == G) parity = FormParity::symmetric;
  else if (mat_is_zero(mat_add(gt, G))) parity = FormParity::antisymmetric;
  else return std::nullopt;
  SpanBasis rank(d);
  for (int i = 0; i < d; ++i) {
    std::map<int32_t, Rational> row;
    for (int j = 0; j < d; ++j)
      if (G.at(i, j) != 0) row[j] = G.at(i, j);
    rank.insert(SparseVecZ::from_rationals(row));
  }
  if (rank.dim() != d) return std::nullopt;
  RatMat id = RatMat::identity(d);
  RatMat neg_g = mat_scale(G, Rational(-1));
  for (const RatMat& g : gen_imgs) {
    if (g == id || mat_is_zero(mat_add(g, id))) continue;
    if (!(mat_mul(g, g) == id)) return std::nullopt;
    if (!(mat_mul(mat_transpose(g), mat_mul(G, g)) == neg_g)) return std::nullopt;
  }
  return parity;
}

// Invariant pairings the construction can build for this shape; each is
// re-verified against the generator images before use.
std::vector<RatMat> container_form_candidates(const Bipartition& shape) {
  std::vector<RatMat> out;
  if (conjugate(shape.second) == shape.first) {
    try {
      out.push_back(bilinear_form(shape, FormKind::b_form).gram);
    } catch (const std::exception&) {
    }
  }
  if (conjugate(shape.first) == shape.first && conjugate(shape.second) == shape.second) {
    try {
      out.push_back(bilinear_form(shape, FormKind::d_form).gram);
    } catch (const std::exception&) {
    }
  }
  return out;
}

// Image of the derived algebra: the span of all brackets [W, W] of the
// reflection-generated algebra W, computed as the ad(generator)-closure
// of the generator-pair brackets.  Note this is strictly larger than
// the algebra *generated* by the pair brackets (the reflection images
// are self-adjoint for the contravariant form, so pair brackets alone
// only generate the anti-self-adjoint part); the ad-closure picks up
// the odd-depth bracket words as well and equals [W, W].
void close_block(BlockImage& out, const std::vector<RatMat>& form_candidates,
                 std::optional<double> max_seconds) {
  const int d = out.module_dim;
  const auto& gen_imgs = out.generator_images;
  auto t0 = std::chrono::steady_clock::now();
  out.basis = SpanBasis(d * d);
  std::vector<SparseVecZ> seeds;
  for (size_t i = 0; i < gen_imgs.size(); ++i)
    for (size_t j = i + 1; j < gen_imgs.size(); ++j) {
      SparseVecZ v = mat_flatten(mat_bracket(gen_imgs[i], gen_imgs[j]));
      if (!v.empty()) seeds.push_back(std::move(v));
    }
  if (seeds.empty()) return;  // commuting generator images: zero block
  std::vector<BracketWith> mult;
  mult.reserve(gen_imgs.size());
  for (const auto& g : gen_imgs) mult.push_back(matrix_multiplier(IMatSparse::from_rat(g)));
  if (d <= kExactBlockDim) {
    double attempt = kExactAttemptSeconds;
    if (max_seconds) attempt = std::min(attempt, *max_seconds);
    try {
      out.basis = lie_closure_fast(seeds, mult, d * d, attempt).basis;
      return;
    } catch (const ClosureBudgetExceeded&) {
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (max_seconds && elapsed >= *max_seconds) throw;
      out.basis = SpanBasis(d * d);
    }
  }

  out.via_certificate = true;
  Int upper = Int(d) * d - 1;
  AlgebraFamily fam = AlgebraFamily::sl;
  FormParity par = FormParity::none;
  std::string container = "sl(" + std::to_string(d) + ")";
  for (const RatMat& cand : form_candidates) {
    std::optional<FormParity> parity = verify_container_form(cand, gen_imgs);
    if (!parity) continue;
    par = *parity;
    if (par == FormParity::symmetric) {
      fam = AlgebraFamily::so;
      upper = Int(d) * (d - 1) / 2;
      container = "so(" + std::to_string(d) + ")";
    } else {
      fam = AlgebraFamily::sp;
      upper = Int(d) * (d + 1) / 2;
      container = "sp(" + std::to_string(d) + ")";
    }
    break;
  }
  int best = 0;
  uint32_t used = kScoutPrimes[0];
  for (uint32_t p : kScoutPrimes) {
    std::optional<double> remaining;
    if (max_seconds) {
      remaining = *max_seconds -
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (*remaining <= 0) throw ClosureBudgetExceeded("block closure exceeded the time budget");
    }
    ModPClosure scout = lie_closure_dim_modp(seeds, mult, d * d, p, remaining);
    if (scout.dim > best) {
      best = scout.dim;
      used = p;
    }
    if (Int(best) == upper) break;
  }
  out.certified_dim = best;
  if (Int(best) == upper) {
    out.certificate_conclusive = true;
    out.certified_family = fam;
    out.certified_parity = par;
    out.certificate = "mod-p closure (p = " + std::to_string(used) + ") reached the exact " +
                      container + " containment bound " + upper.str();
  } else {
    out.certificate = "mod-p closure lower bound " + std::to_string(best) + " (p = " +
                      std::to_string(used) + ") below the " + container + " containment bound " +
                      upper.str() + "; not certified";
  }
}

PredictedBlock sl_block(const Int& module_dim) {
  return {AlgebraFamily::sl, false, module_dim, module_dim * module_dim - 1, FormParity::none};
}

PredictedBlock osp_block(const Int& module_dim, int parity_number) {
  if (parity_number % 2 == 0)
    return {AlgebraFamily::so, false, module_dim, module_dim * (module_dim - 1) / 2,
            FormParity::symmetric};
  return {AlgebraFamily::sp, false, module_dim, module_dim * (module_dim + 1) / 2,
          FormParity::antisymmetric};
}

// Block of the symmetric group part on a single-partition module:
// proper hooks collapse onto sl(alpha), non-hooks follow the E_n/F_n
// rules.
PredictedBlock single_partition_block(const Partition& lam, int n) {
  Int f = f_lambda(lam);
  switch (classify_partition(lam)) {
    case PartClass::Hook: {
      int d = static_cast<int>(lam.size()) - 1;  // lam = [n-d, 1^d]
      PredictedBlock out{AlgebraFamily::sl, true, f, 0, FormParity::none};
      if (d >= 1 && d <= n - 2) {
        out.algebra_dim = Int(n - 1) * (n - 1) - 1;
        out.collapsed_copy = d != 1;  // alpha itself is the natural module
      }
      return out;
    }
    case PartClass::E:
      return sl_block(f);
    case PartClass::F:
      return osp_block(f, (n - diagonal_length(lam)) / 2);
  }
  throw std::logic_error("unreachable");
}


SummandVerdict verdict_for(const std::string& label, const PredictedBlock& pred,
                           const BlockImage& block) {
  SummandVerdict v;
  v.label = label;
  v.predicted = predicted_block_to_string(pred);
  v.predicted_type = pred.algebra_dim == 0 ? "zero" : algebra_family_name(pred.type);
  v.predicted_dim = pred.algebra_dim;
  ClassificationLabel got = classify(block);
  v.computed = classification_to_string(got);
  v.computed_dim = got.algebra_dim;
  if (block.via_certificate && !block.certificate_conclusive) {
    v.pass = false;  // only a lower bound was computed
  } else if (pred.collapsed_copy || pred.algebra_dim == 0) {
    v.pass = Int(got.algebra_dim) == pred.algebra_dim && Int(got.module_dim) == pred.module_dim;
  } else {
    bool family_ok = got.family == pred.type;
    // sp(2) = sl(2): the classifier reports the coincidence as sl(2)
    // (with the antisymmetric form noted), so accept it for an sp
    // prediction on a 2-dimensional module.
    if (!family_ok && pred.type == AlgebraFamily::sp && pred.module_dim == 2 &&
        got.family == AlgebraFamily::sl && got.module_dim == 2)
      family_ok = got.form_parity == FormParity::antisymmetric;
    // A parity-free prediction leaves the computed parity unconstrained:
    // sl(2) blocks carry the sp(2) form, and for sl on wider modules a
    // computed form already breaks the family comparison.
    bool parity_ok = pred.parity == FormParity::none || got.form_parity == pred.parity;
    v.pass = family_ok && Int(got.algebra_dim) == pred.algebra_dim &&
             Int(got.module_dim) == pred.module_dim && parity_ok;
  }
  return v;
}

Bipartition beta_label(int n, int d) { return {{n - d}, Partition(d, 1)}; }
Bipartition gamma_label(int n, int d) { return {Partition(d, 1), {n - d}}; }

}  // namespace

BlockImage block_image_b(const Bipartition& label, std::optional<double> max_seconds) {
  BlockImage out;
  out.label = bipartition_to_string(label);
  out.family = Family::type_b;
  out.n = label.n();
  RepMatrixSet rep = build_rep_b(label, ScalarMode::exact_seminormal);
  out.module_dim = rep.dim;
  out.generator_elements = generators(out.n, GeneratorSystem::coxeter_b);
  for (const auto& g : out.generator_elements)
    out.generator_images.push_back(rep.exact_matrix(g));
  close_block(out, container_form_candidates(label), max_seconds);
  return out;
}

BlockImage block_image_d(const DLabel& label, std::optional<double> max_seconds) {
  BlockImage out;
  out.label = d_label_to_string(label);
  out.family = Family::type_d;
  out.n = label.sign == 0 ? partition_size(label.lambda) + partition_size(label.mu)
                          : 2 * partition_size(label.lambda);
  RepMatrixSet rep = build_rep_d(label, ScalarMode::exact_seminormal);
  out.module_dim = rep.dim;
  out.generator_elements = generators(out.n, GeneratorSystem::coxeter_d);
  for (const auto& g : out.generator_elements)
    out.generator_images.push_back(rep.exact_matrix(g));
  // The pair modules restrict the type B module of the unordered normal
  // form, so candidate pairings live on that shape; the half modules
  // have no constructive pairing here.
  std::vector<RatMat> candidates;
  if (label.sign == 0)
    candidates = container_form_candidates(unordered_normal_form({label.lambda, label.mu}));
  close_block(out, candidates, max_seconds);
  return out;
}

std::string algebra_family_name(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::sl: return "sl";
    case AlgebraFamily::so: return "so";
    case AlgebraFamily::sp: return "sp";
    case AlgebraFamily::other: return "other";
  }
  return "other";
}

std::string predicted_block_to_string(const PredictedBlock& p) {
  std::string s = algebra_family_name(p.type);
  s += " dim " + p.algebra_dim.str() + " on module dim " + p.module_dim.str();
  if (p.collapsed_copy) s += " (collapsed copy; dimension check only)";
  if (p.parity == FormParity::symmetric) s += ", symmetric form";
  if (p.parity == FormParity::antisymmetric) s += ", antisymmetric form";
  return s;
}

std::string classification_to_string(const ClassificationLabel& c) {
  std::string s = algebra_family_name(c.family);
  if (c.family != AlgebraFamily::other)
    s += "(" + std::to_string(c.module_dim) + ")";
  s += " dim " + std::to_string(c.algebra_dim);
  if (c.form_parity == FormParity::symmetric) s += " (symmetric form)";
  if (c.form_parity == FormParity::antisymmetric) s += " (antisymmetric form)";
  if (!c.diagnostics.empty()) s += " [" + c.diagnostics + "]";
  return s;
}

ClassificationLabel classify(const BlockImage& block) {
  ClassificationLabel out;
  out.module_dim = block.module_dim;
  out.algebra_dim = block.dim();
  const int d = block.module_dim;
  if (block.via_certificate) {
    if (!block.certificate_conclusive) {
      out.diagnostics = block.certificate;
      return out;
    }
    out.family = block.certified_family;
    out.form_parity = block.certified_parity;
    return out;
  }
  if (out.algebra_dim == 0) {
    out.diagnostics = "zero block";
    return out;
  }
  // Irreducibility of the block action: the commutant of any subset of
  // the basis contains the commutant of the block, so a scalar subset
  // commutant settles the question early.
  int comm_dim = -1;
  for (int take = std::min(block.dim(), 8);; take = std::min(block.dim(), take * 4)) {
    std::vector<RatMat> mats;
    mats.reserve(take);
    for (int i = 0; i < take; ++i) mats.push_back(row_to_mat(block.basis.row(i), d));
    comm_dim = static_cast<int>(solve_commutant(mats).size());
    if (comm_dim == 1 || take == block.dim()) break;
  }
  if (comm_dim != 1) {
    out.diagnostics = "commutant dim " + std::to_string(comm_dim);
    return out;
  }
  // A nonzero irreducible block admits invariant forms only through the
  // linear characters that are -1 on every non-scalar generator image
  // (a +-1 scalar image satisfies g^T G g = G identically, so only the
  // trivial character value is consistent there), so one twisted solve
  // against the acting generators finds the whole form space.
  std::vector<RatMat> acting;
  RatMat id = RatMat::identity(d);
  for (const RatMat& g : block.generator_images)
    if (!(g == id) && !mat_is_zero(mat_add(g, id))) acting.push_back(g);
  std::vector<Rational> chi(acting.size(), Rational(-1));
  std::vector<RatMat> forms = solve_group_invariant_form(acting, chi);
  const int dim = out.algebra_dim;
  if (forms.empty()) {
    if (Int(dim) == Int(d) * d - 1) out.family = AlgebraFamily::sl;
    else out.diagnostics = "no invariant form, dim != d^2-1";
    return out;
  }
  if (forms.size() > 1) {
    out.diagnostics = "invariant form space dim " + std::to_string(forms.size());
    return out;
  }
  const RatMat& g = forms[0];
  RatMat gt = mat_transpose(g);
  bool symmetric = gt == g;
  bool antisymmetric = mat_is_zero(mat_add(gt, g));
  if (!symmetric && !antisymmetric) {
    out.diagnostics = "form neither symmetric nor antisymmetric";
    return out;
  }
  out.form_parity = symmetric ? FormParity::symmetric : FormParity::antisymmetric;
  if (d == 2 && dim == 3) {
    out.family = AlgebraFamily::sl;  // sl(2) = sp(2)
    return out;
  }
  if (symmetric && Int(dim) * 2 == Int(d) * (d - 1)) out.family = AlgebraFamily::so;
  else if (antisymmetric && Int(dim) * 2 == Int(d) * (d + 1)) out.family = AlgebraFamily::sp;
  else out.diagnostics = "form parity and dimension disagree";
  return out;
}

PredictedBlock predicted_block_b(const Bipartition& label) {
  const int n = label.n();
  BPClassification cls = classify_bipartition(label);
  Int d = dim_formula(label);
  switch (cls.cls) {
    case BPClass::Improper: {
      const Partition& lam = label.second.empty() ? label.first : label.second;
      PredictedBlock out = single_partition_block(lam, n);
      out.module_dim = d;
      return out;
    }
    case BPClass::ArmAndLeg:
      return {AlgebraFamily::sl, cls.al_index != 1, d, Int(n) * n - 1, FormParity::none};
    case BPClass::E:
      return sl_block(d);
    case BPClass::F:
      return osp_block(d, n / 2);
  }
  throw std::logic_error("unreachable");
}

PredictedBlock predicted_block_d(const DLabel& label, int n) {
  if (label.sign != 0) {
    Int dh = d_label_dim(label, n);
    if (conjugate(label.lambda) == label.lambda) {
      if ((n / 2) % 2 == 0) return osp_block(dh, diagonal_length(label.lambda));
      return sl_block(dh);
    }
    return sl_block(dh);
  }
  Bipartition nf = unordered_normal_form({label.lambda, label.mu});
  BPClassification cls = classify_unordered(nf);
  Int d = d_label_dim(label, n);
  switch (cls.cls) {
    case BPClass::Improper: {
      const Partition& lam = nf.second.empty() ? nf.first : nf.second;
      PredictedBlock out = single_partition_block(lam, n);
      out.module_dim = d;
      return out;
    }
    case BPClass::ArmAndLeg:
      return {AlgebraFamily::sl, cls.al_index != 1, d, Int(n) * n - 1, FormParity::none};
    case BPClass::E:
      return sl_block(d);
    case BPClass::F: {
      // mu = lambda* pairs carry the eps-twisted form (parity n/2);
      // otherwise both parts are symmetric and the eps''-twisted form
      // applies, with parity (n - b(lambda) - b(mu)) / 2.
      if (conjugate(nf.first) == nf.second) return osp_block(d, n / 2);
      return osp_block(d, (n - diagonal_length(nf.first) - diagonal_length(nf.second)) / 2);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<PredictedSummand> marin_structure(int n) {
  std::vector<PredictedSummand> out;
  if (n >= 3) {
    PredictedSummand alpha;
    alpha.label = partition_to_string({n - 1, 1});
    alpha.type = AlgebraFamily::sl;
    alpha.module_dim = n - 1;
    alpha.algebra_dim = Int(n - 1) * (n - 1) - 1;
    for (int d = 1; d <= n - 2; ++d) {
      Partition hook{n - d};
      hook.insert(hook.end(), d, 1);
      alpha.members.push_back(partition_to_string(hook));
    }
    out.push_back(std::move(alpha));
  }
  std::set<Partition> seen;
  for (const Partition& lam : partitions(n)) {
    if (seen.count(lam)) continue;
    switch (classify_partition(lam)) {
      case PartClass::Hook:
        break;
      case PartClass::E: {
        Partition dual = conjugate(lam);
        seen.insert(dual);
        Int f = f_lambda(lam);
        out.push_back({partition_to_string(lam), AlgebraFamily::sl, f, f * f - 1,
                       FormParity::none,
                       {partition_to_string(lam), partition_to_string(dual)}});
        break;
      }
      case PartClass::F: {
        PredictedBlock b = osp_block(f_lambda(lam), (n - diagonal_length(lam)) / 2);
        out.push_back({partition_to_string(lam), b.type, b.module_dim, b.algebra_dim, b.parity,
                       {partition_to_string(lam)}});
        break;
      }
    }
  }
  return out;
}

PredictedStructure predicted_structure(int n, Family family) {
  if (n < 2) throw std::invalid_argument("predicted_structure needs n >= 2");
  PredictedStructure out;
  out.n = n;
  out.family = family;
  out.summands = marin_structure(n);

  if (family == Family::type_b) {
    std::vector<std::string> beta_members, gamma_members;
    for (int d = 1; d < n; ++d) {
      beta_members.push_back(bipartition_to_string(beta_label(n, d)));
      gamma_members.push_back(bipartition_to_string(gamma_label(n, d)));
    }
    if (n == 2) {
      // beta = gamma = ([1],[1]): a single arm-and-leg label, hence a
      // single sl(2) summand.
      out.n2_label_coincidence = true;
      out.summands.push_back({bipartition_to_string(beta_label(2, 1)), AlgebraFamily::sl, 2, 3,
                              FormParity::none, {bipartition_to_string(beta_label(2, 1))}});
    } else {
      out.summands.push_back({bipartition_to_string(beta_label(n, 1)), AlgebraFamily::sl, n,
                              Int(n) * n - 1, FormParity::none, beta_members});
      out.summands.push_back({bipartition_to_string(gamma_label(n, 1)), AlgebraFamily::sl, n,
                              Int(n) * n - 1, FormParity::none, gamma_members});
    }
    std::vector<Bipartition> e_items;
    std::vector<Bipartition> f_items;
    for (const Bipartition& bp : bipartitions(n, true)) {
      BPClassification c = classify_bipartition(bp);
      if (c.cls == BPClass::E) e_items.push_back(bp);
      else if (c.cls == BPClass::F) f_items.push_back(bp);
    }
    for (const auto& cls : sim_classes(e_items, true)) {
      PredictedSummand s;
      s.label = bipartition_to_string(cls[0]);
      s.type = AlgebraFamily::sl;
      s.module_dim = dim_formula(cls[0]);
      s.algebra_dim = s.module_dim * s.module_dim - 1;
      for (const auto& m : cls) s.members.push_back(bipartition_to_string(m));
      out.summands.push_back(std::move(s));
    }
    for (const Bipartition& bp : f_items) {
      PredictedBlock b = osp_block(dim_formula(bp), n / 2);
      out.summands.push_back({bipartition_to_string(bp), b.type, b.module_dim, b.algebra_dim,
                              b.parity, {bipartition_to_string(bp)}});
    }
  } else {
    std::vector<std::string> beta_members;
    for (int d = 1; d < n; ++d)
      beta_members.push_back(unordered_label_to_string(beta_label(n, d)));
    if (n == 2) {
      out.n2_label_coincidence = true;  // both derived blocks vanish
    } else {
      out.summands.push_back({unordered_label_to_string(beta_label(n, 1)), AlgebraFamily::sl, n,
                              Int(n) * n - 1, FormParity::none, beta_members});
    }
    std::vector<Bipartition> e_items;
    std::vector<Bipartition> f_items;
    for (const Bipartition& bp : bipartitions(n, false)) {
      BPClassification c = classify_unordered(bp);
      if (c.cls == BPClass::E) e_items.push_back(bp);
      else if (c.cls == BPClass::F) f_items.push_back(bp);
    }
    for (const auto& cls : sim_classes(e_items, false)) {
      const Bipartition& rep = cls[0];
      if (rep.first == rep.second) {
        // {lambda,lambda} in E{n}: both halves occur, each sl of half
        // the dimension.
        Int dh = dim_formula(rep) / 2;
        for (int sign : {+1, -1}) {
          PredictedSummand s;
          s.label = d_label_to_string({rep.first, rep.first, sign});
          s.type = AlgebraFamily::sl;
          s.module_dim = dh;
          s.algebra_dim = dh * dh - 1;
          for (const auto& m : cls) s.members.push_back(unordered_label_to_string(m));
          out.summands.push_back(std::move(s));
        }
      } else {
        PredictedSummand s;
        s.label = unordered_label_to_string(rep);
        s.type = AlgebraFamily::sl;
        s.module_dim = dim_formula(rep);
        s.algebra_dim = s.module_dim * s.module_dim - 1;
        for (const auto& m : cls) s.members.push_back(unordered_label_to_string(m));
        out.summands.push_back(std::move(s));
      }
    }
    for (const Bipartition& bp : f_items) {
      if (bp.first == bp.second) {
        const Partition& lam = bp.first;  // lam = lam* here
        Int dh = dim_formula(bp) / 2;
        if ((n / 2) % 2 == 0) {
          for (int sign : {+1, -1}) {
            PredictedBlock b = osp_block(dh, diagonal_length(lam));
            out.summands.push_back({d_label_to_string({lam, lam, sign}), b.type, b.module_dim,
                                    b.algebra_dim, b.parity,
                                    {d_label_to_string({lam, lam, sign})}});
          }
        } else {
          // n/2 odd: the two halves are fused through a single sl copy;
          // the minus term is omitted from the direct sum.
          PredictedSummand s;
          s.label = d_label_to_string({lam, lam, +1});
          s.type = AlgebraFamily::sl;
          s.module_dim = dh;
          s.algebra_dim = dh * dh - 1;
          s.members = {d_label_to_string({lam, lam, +1}), d_label_to_string({lam, lam, -1})};
          out.summands.push_back(std::move(s));
        }
      } else {
        PredictedBlock b = predicted_block_d({bp.first, bp.second, 0}, n);
        out.summands.push_back({unordered_label_to_string(bp), b.type, b.module_dim,
                                b.algebra_dim, b.parity, {unordered_label_to_string(bp)}});
      }
    }
  }

  for (const auto& s : out.summands) out.derived_dim += s.algebra_dim;
  out.center_dim = static_cast<int>(reflections(n, family).size());
  out.total_dim = out.derived_dim + out.center_dim;
  return out;
}

TheoremReport verify_main_theorem(int n, Family family, VerifyScope scope,
                                  const std::vector<std::string>& labels,
                                  std::optional<double> max_seconds) {
  TheoremReport report;
  report.n = n;
  report.family = family;
  report.scope = scope;
  PredictedStructure pred = predicted_structure(n, family);
  report.predicted_derived = pred.derived_dim;
  report.predicted_center = pred.center_dim;
  report.predicted_total = pred.total_dim;
  report.n2_label_coincidence = pred.n2_label_coincidence;

  if (scope == VerifyScope::regular) {
    GroupIndex idx(n, family);
    std::vector<SparseVecZ> seeds;
    for (const auto& r : reflections_flat(n, family))
      seeds.push_back(SparseVecZ::unit(idx.index_of(r)));
    std::vector<BracketWith> mult;
    for (const auto& g : generators(
             n, family == Family::type_b ? GeneratorSystem::b_with_t1 : GeneratorSystem::coxeter_d))
      mult.push_back(group_multiplier(idx, g));
    try {
      report.closure_dim = lie_closure_fast(seeds, mult, idx.size(), max_seconds).basis.dim();
    } catch (const ClosureBudgetExceeded&) {
      report.budget_exceeded = true;
      return report;
    }
    report.pass = report.closure_dim == report.predicted_total;
    return report;
  }

  std::vector<std::string> wanted = labels;
  if (wanted.empty()) {
    if (family == Family::type_b)
      for (const auto& bp : bipartitions(n, true)) wanted.push_back(bipartition_to_string(bp));
    else
      for (const auto& l : d_irrep_labels(n)) wanted.push_back(d_label_to_string(l));
  }
  bool all_pass = true;
  for (const auto& label : wanted) {
    SummandVerdict v;
    v.label = label;
    try {
      if (family == Family::type_b) {
        Bipartition bp = bipartition_from_string(label);
        if (bp.n() != n) throw std::invalid_argument("label size != n: " + label);
        v = verdict_for(bipartition_to_string(bp), predicted_block_b(bp),
                        block_image_b(bp, max_seconds));
      } else {
        DLabel l = d_label_from_string(label);
        v = verdict_for(d_label_to_string(l), predicted_block_d(l, n),
                        block_image_d(l, max_seconds));
      }
    } catch (const ClosureBudgetExceeded&) {
      report.budget_exceeded = true;
      v.computed = "budget exceeded";
      v.pass = false;
    }
    all_pass = all_pass && v.pass;
    report.summands.push_back(std::move(v));
  }
  report.pass = all_pass && !report.budget_exceeded;
  return report;
}

}  // namespace reflecta
