#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflecta/irreps.hpp"
#include "reflecta/linear_solve.hpp"

namespace reflecta {

namespace {

template <class Mat>
bool entry_zero(const Mat& m, int i, int j);

template <>
bool entry_zero<RatMat>(const RatMat& m, int i, int j) {
  return m.at(i, j) == 0;
}

template <>
bool entry_zero<ApproxMat>(const ApproxMat& m, int i, int j) {
  return abs(m.at(i, j)) < approx_zero_tolerance();
}

// Columns of the block map back into the block under every matrix.
template <class Mat>
bool block_stable(const std::vector<Mat>& mats, const std::vector<int>& idxs,
                  const std::vector<char>& member) {
  for (const auto& m : mats)
    for (int v : idxs)
      for (int w = 0; w < m.rows; ++w)
        if (!member[w] && !entry_zero(m, w, v)) return false;
  return true;
}

bool weights_agree(std::vector<Weight> got, std::vector<Weight> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

Weight truncated_d_weight(const StandardBitableau& t, int n) {
  Weight w = d_weight_of(t);
  w.rho.resize(n - 2);
  w.chi.resize(n - 1);
  return w;
}

// Effective weight over the folded subgroup generated by s_1..s_{n-2}
// and t_i' = t_i t_n: rho entries rho_i rho_n, chi unchanged.
Weight folded_weight(const StandardBitableau& t, int n) {
  Weight w = weight_of(t);
  int rn = w.rho[n - 1];
  w.rho.resize(n - 1);
  for (int& r : w.rho) r *= rn;
  w.chi.resize(n - 1);
  return w;
}

}  // namespace

AWReport artin_wedderburn_check(int n, Family f) {
  AWReport out;
  out.group_order = Int(group_order(n, f));
  if (f == Family::type_b) {
    auto labels = bipartitions(n, true);
    out.label_count = static_cast<int>(labels.size());
    for (const auto& bp : labels) {
      Int d = dim_formula(bp);
      out.dim_square_sum += d * d;
    }
  } else {
    auto labels = d_irrep_labels(n);
    out.label_count = static_cast<int>(labels.size());
    for (const auto& l : labels) {
      Int d = d_label_dim(l, n);
      out.dim_square_sum += d * d;
    }
  }
  out.pass = out.dim_square_sum == out.group_order;
  return out;
}

BranchReport verify_branching_b(const Bipartition& shape) {
  int n = shape.n();
  if (n < 2) throw std::invalid_argument("verify_branching_b: need n >= 2");
  BranchReport report;
  report.label = bipartition_to_string(shape);
  report.flavor = "b_to_b";

  RepMatrixSet rep = build_rep_b(shape, ScalarMode::exact_seminormal);

  std::map<std::pair<int, int>, Bipartition> predicted;
  for (const auto& [prev, res] : predecessors(shape, true)) {
    int rho = prev.first == shape.first ? -1 : 1;
    predicted[{rho, res}] = prev;
  }
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (int v = 0; v < rep.dim; ++v)
    blocks[{rho_of(rep.basis[v], n), residue_of(rep.basis[v], n)}].push_back(v);

  std::vector<RatMat> subgens;
  for (int i = 0; i + 2 < n; ++i) subgens.push_back(rep.s[i]);
  for (int i = 0; i + 1 < n; ++i) subgens.push_back(rep.t[i]);

  bool pass = blocks.size() == predicted.size();
  for (const auto& [key, idxs] : blocks) {
    BranchBlock bb;
    bb.size = static_cast<int>(idxs.size());
    auto it = predicted.find(key);
    if (it == predicted.end()) {
      bb.target = "?";
      pass = false;
      report.blocks.push_back(bb);
      continue;
    }
    bb.target = bipartition_to_string(it->second);
    std::vector<char> member(rep.dim, 0);
    for (int v : idxs) member[v] = 1;
    bb.stable = block_stable(subgens, idxs, member);
    std::vector<Weight> got;
    for (int v : idxs) {
      Weight w = weight_of(rep.basis[v]);
      w.rho.resize(n - 1);
      w.chi.resize(n - 1);
      got.push_back(std::move(w));
    }
    std::vector<Weight> want;
    for (const auto& t : standard_bitableaux(it->second)) want.push_back(weight_of(t));
    bb.weights_match = weights_agree(std::move(got), std::move(want));
    pass = pass && bb.stable && bb.weights_match;
    report.blocks.push_back(bb);
  }
  report.pass = pass;
  return report;
}

BranchReport verify_branching(const DLabel& label, BranchFlavor flavor, ScalarMode mode) {
  if (flavor == BranchFlavor::b_to_b)
    throw std::invalid_argument("verify_branching: use verify_branching_b for type B");
  int n = partition_size(label.lambda) + partition_size(label.mu);
  if (label.sign != 0) n = 2 * partition_size(label.lambda);
  if (n < 3) throw std::invalid_argument("verify_branching: need n >= 3");

  BranchReport report;
  report.label = d_label_to_string(label);
  report.flavor = flavor == BranchFlavor::d_to_d ? "d_to_d" : "d_to_folding";

  RepMatrixSet rep = build_rep_d(label, mode);
  bool folding = flavor == BranchFlavor::d_to_folding;

  // Subgroup generators: s_1..s_{n-2} plus the embedded generator,
  // stilde_{n-1} = t_{n-2} t_{n-1} s_{n-2} for the rank n-1 type D
  // subgroup, or t_{n-1} t_n for the folded copy of B_{n-1}.
  SignedPermutation extra =
      folding ? sp_mul(sp_t(n - 1, n), sp_t(n, n))
              : sp_mul(sp_mul(sp_t(n - 2, n), sp_t(n - 1, n)), sp_s(n - 2, n));
  std::vector<RatMat> exact_gens;
  std::vector<ApproxMat> approx_gens;
  if (rep.exact()) {
    for (int i = 0; i + 2 < n; ++i) exact_gens.push_back(rep.s[i]);
    exact_gens.push_back(rep.exact_matrix(extra));
  } else {
    for (int i = 0; i + 2 < n; ++i) approx_gens.push_back(rep.as[i]);
    approx_gens.push_back(rep.approx_matrix(extra));
  }

  struct BlockSpec {
    std::string target;
    std::vector<int> idxs;
    std::vector<Weight> want;
  };
  std::map<std::pair<int, int>, BlockSpec> blocks;  // key (rho_n or 0, res_n)

  if (label.sign == 0) {
    std::map<std::pair<int, int>, Bipartition> predicted;
    for (const auto& [prev, res] : predecessors(rep.shape, true)) {
      int rho = prev.first == rep.shape.first ? -1 : 1;
      predicted[{rho, res}] = prev;
    }
    for (int v = 0; v < rep.dim; ++v) {
      auto key = std::make_pair(rho_of(rep.basis[v], n), residue_of(rep.basis[v], n));
      blocks[key].idxs.push_back(v);
    }
    for (auto& [key, spec] : blocks) {
      auto it = predicted.find(key);
      if (it == predicted.end()) {
        spec.target = "?";
        continue;
      }
      const Bipartition& prev = it->second;
      if (folding) {
        Bipartition target = key.first == 1 ? prev : swap_parts(prev);
        spec.target = bipartition_to_string(target);
        for (const auto& t : standard_bitableaux(target)) spec.want.push_back(weight_of(t));
      } else {
        spec.target = unordered_label_to_string(unordered_normal_form(prev));
        for (const auto& t : standard_bitableaux(prev)) spec.want.push_back(d_weight_of(t));
      }
    }
  } else {
    std::map<int, Partition> predicted;
    for (const auto& [nu, res] : removable_corners(label.lambda)) predicted[res] = nu;
    for (int v = 0; v < rep.dim; ++v)
      blocks[{0, residue_of(rep.basis[v], n)}].idxs.push_back(v);
    for (auto& [key, spec] : blocks) {
      auto it = predicted.find(key.second);
      if (it == predicted.end()) {
        spec.target = "?";
        continue;
      }
      Bipartition target{it->second, label.lambda};
      if (folding) {
        spec.target = bipartition_to_string(target);
        for (const auto& t : standard_bitableaux(target)) spec.want.push_back(weight_of(t));
      } else {
        spec.target = unordered_label_to_string(unordered_normal_form(target));
        for (const auto& t : standard_bitableaux(target)) spec.want.push_back(d_weight_of(t));
      }
    }
  }

  bool pass = true;
  if (label.sign == 0) {
    pass = blocks.size() == predecessors(rep.shape, true).size();
  } else {
    pass = blocks.size() == removable_corners(label.lambda).size();
  }
  for (auto& [key, spec] : blocks) {
    BranchBlock bb;
    bb.target = spec.target;
    bb.size = static_cast<int>(spec.idxs.size());
    if (spec.target == "?") {
      pass = false;
      report.blocks.push_back(bb);
      continue;
    }
    std::vector<char> member(rep.dim, 0);
    for (int v : spec.idxs) member[v] = 1;
    bb.stable = rep.exact() ? block_stable(exact_gens, spec.idxs, member)
                            : block_stable(approx_gens, spec.idxs, member);
    std::vector<Weight> got;
    for (int v : spec.idxs) {
      const StandardBitableau& t = rep.basis[v];
      got.push_back(folding ? folded_weight(t, n) : truncated_d_weight(t, n));
    }
    bb.weights_match = weights_agree(std::move(got), spec.want);
    pass = pass && bb.stable && bb.weights_match;
    report.blocks.push_back(bb);
  }
  report.pass = pass;
  return report;
}

namespace {

RatMat natural_matrix(const SignedPermutation& g) {
  int n = g.n();
  RatMat m(n, n);
  for (int j = 0; j < n; ++j) m.at(g.images[j], j) = g.signs[g.images[j]];
  return m;
}

std::vector<std::vector<int>> d_subsets(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Rational small_det(RatMat m) {
  Rational det(1);
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int r = c; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(p, cc), m.at(c, cc));
      det = -det;
    }
    det *= m.at(c, c);
    for (int r = c + 1; r < m.rows; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) / m.at(c, c);
      for (int cc = c; cc < m.cols; ++cc) m.at(r, cc) -= f * m.at(c, cc);
    }
  }
  return det;
}

// Lambda^d of the group action: entry [I][J] = det of the (I, J) minor.
RatMat wedge_matrix(const RatMat& m, const std::vector<std::vector<int>>& subsets) {
  int dd = static_cast<int>(subsets.size());
  int d = subsets.empty() ? 0 : static_cast<int>(subsets[0].size());
  RatMat out(dd, dd);
  for (int a = 0; a < dd; ++a)
    for (int b = 0; b < dd; ++b) {
      RatMat minor(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) minor.at(i, j) = m.at(subsets[a][i], subsets[b][j]);
      out.at(a, b) = small_det(minor);
    }
  return out;
}

// Derivation (Lie) action on Lambda^d: sum over slots of the one-slot
// replacement, with the sign of sorting the replaced index into place.
RatMat derivation_matrix(const RatMat& m, const std::vector<std::vector<int>>& subsets,
                         const std::map<std::vector<int>, int>& subset_index) {
  int dd = static_cast<int>(subsets.size());
  RatMat out(dd, dd);
  for (int b = 0; b < dd; ++b) {
    const auto& J = subsets[b];
    for (size_t k = 0; k < J.size(); ++k)
      for (int i = 0; i < m.rows; ++i) {
        const Rational& coeff = m.at(i, J[k]);
        if (coeff == 0) continue;
        if (i == J[k]) {
          out.at(b, b) += coeff;
          continue;
        }
        if (std::find(J.begin(), J.end(), i) != J.end()) continue;
        std::vector<int> vec = J;
        vec[k] = i;
        int sign = 1;
        for (size_t x = 1; x < vec.size(); ++x)
          for (size_t y = x; y > 0 && vec[y] < vec[y - 1]; --y) {
            std::swap(vec[y], vec[y - 1]);
            sign = -sign;
          }
        out.at(subset_index.at(vec), b) += sign * coeff;
      }
  }
  return out;
}

}  // namespace

ExtPowerReport verify_exterior_power(int n, int d, char tag) {
  if (d < 0 || d > n) throw std::invalid_argument("verify_exterior_power: need 0 <= d <= n");
  if (tag != 'b' && tag != 'g') throw std::invalid_argument("verify_exterior_power: tag is b or g");
  ExtPowerReport report;
  report.n = n;
  report.d = d;
  report.tag = tag;

  // Natural signed-permutation module and its sign-twisted companion.
  std::vector<RatMat> nat;  // s_1..s_{n-1}, then t_1
  for (int i = 1; i < n; ++i) nat.push_back(natural_matrix(sp_s(i, n)));
  nat.push_back(natural_matrix(sp_t(1, n)));
  std::vector<RatMat> twisted = nat;  // tag 'g': t_1 picks up eps'(t_1) = -1
  twisted.back() = mat_scale(twisted.back(), Rational(-1));
  const std::vector<RatMat>& v_mats = tag == 'b' ? nat : twisted;

  auto subsets = d_subsets(n, d);
  std::map<std::vector<int>, int> subset_index;
  for (int i = 0; i < static_cast<int>(subsets.size()); ++i) subset_index[subsets[i]] = i;
  int wdim = static_cast<int>(subsets.size());

  // Shift identities relating the derivation action to the group action
  // on the wedge: der = wedge + (d-1) Id for the s_i and for t_1 on the
  // natural module; on the twisted module the group action of t_1 is
  // -wedge(t_1-natural) and the identity becomes der = group - (d-1) Id.
  RatMat shift = mat_scale(RatMat::identity(wdim), Rational(d - 1));
  bool shift_ok = true;
  std::vector<RatMat> group_side;  // group action of the generators on the wedge
  for (size_t k = 0; k < v_mats.size(); ++k) {
    bool is_t1 = k + 1 == v_mats.size();
    RatMat grp = wedge_matrix(nat[k], subsets);
    if (tag == 'g' && is_t1) grp = mat_scale(grp, Rational(-1));
    RatMat der = derivation_matrix(v_mats[k], subsets, subset_index);
    RatMat expected = (tag == 'g' && is_t1) ? mat_sub(grp, shift) : mat_add(grp, shift);
    if (!(der == expected)) shift_ok = false;
    group_side.push_back(std::move(grp));
  }
  report.shift_identity = shift_ok;

  // Matrix model of the predicted simple module.
  Bipartition shape;
  if (tag == 'b') {
    shape.first = d < n ? Partition{n - d} : Partition{};
    shape.second = Partition(d, 1);
  } else {
    shape.first = Partition(d, 1);
    shape.second = d < n ? Partition{n - d} : Partition{};
  }
  RepMatrixSet arep = build_rep_b(shape, ScalarMode::exact_seminormal);
  report.dim = arep.dim;
  bool dims_ok = arep.dim == wdim && Int(wdim) == binomial(n, d);

  std::vector<RatMat> a_side;
  for (int i = 0; i + 1 < n; ++i) a_side.push_back(arep.s[i]);
  a_side.push_back(arep.t[0]);

  bool traces_ok = true;
  for (size_t k = 0; k < a_side.size() && traces_ok; ++k) {
    if (mat_trace(a_side[k]) != mat_trace(group_side[k])) traces_ok = false;
    for (size_t l = 0; l < a_side.size() && traces_ok; ++l)
      if (mat_trace(mat_mul(a_side[k], a_side[l])) !=
          mat_trace(mat_mul(group_side[k], group_side[l])))
        traces_ok = false;
  }
  report.traces_match = traces_ok;

  std::vector<Rational> chi(a_side.size(), Rational(1));
  auto basis = solve_intertwiner_space(a_side, group_side, chi);
  report.intertwiner_found = basis.size() == 1 && small_det(basis[0]) != 0;

  report.pass = dims_ok && shift_ok && traces_ok && report.intertwiner_found;
  return report;
}

}  // namespace reflecta
