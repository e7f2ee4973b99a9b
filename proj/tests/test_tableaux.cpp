#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "reflecta/tableaux.hpp"

using namespace reflecta;

namespace {

// Independent standardness check on the position encoding: within each
// tableau, entries increase along rows and down columns.
bool is_standard(const StandardBitableau& t) {
  std::map<std::tuple<int, int, int>, int> entry_at;
  for (int k = 0; k < t.n(); ++k) {
    const Box& b = t.pos[k];
    auto key = std::make_tuple(int(b.side), int(b.row), int(b.col));
    if (entry_at.count(key)) return false;
    entry_at[key] = k + 1;
  }
  for (const auto& [key, e] : entry_at) {
    auto [side, row, col] = key;
    if (col > 0) {
      auto left = entry_at.find({side, row, col - 1});
      if (left == entry_at.end() || left->second >= e) return false;
    }
    if (row > 0) {
      auto up = entry_at.find({side, row - 1, col});
      if (up == entry_at.end() || up->second >= e) return false;
    }
  }
  return true;
}

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("partition enumeration matches the counting function") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int k = 0; k <= 9; ++k) {
    auto parts = partitions(k);
    CHECK(static_cast<int>(parts.size()) == p[k]);
    if (k > 0) CHECK(parts.front() == Partition{k});
    for (const auto& q : parts) {
      CHECK(partition_size(q) == k);
      CHECK(std::is_sorted(q.rbegin(), q.rend()));
      for (int part : q) CHECK(part > 0);
    }
    CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
  }
}

TEST_CASE("conjugation, diagonal, hooks") {
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  for (const auto& q : partitions(6)) CHECK(conjugate(conjugate(q)) == q);
  CHECK(diagonal_length({3, 3, 1}) == 2);
  CHECK(diagonal_length({1, 1, 1}) == 1);
  CHECK(diagonal_length({}) == 0);
  CHECK(is_hook({4, 1, 1}));
  CHECK(is_hook({1, 1}));
  CHECK(is_hook({5}));
  CHECK(!is_hook({2, 2}));
  CHECK(classify_partition({3, 1}) == PartClass::Hook);
  CHECK(classify_partition({3, 2}) == PartClass::E);       // not self-conjugate
  CHECK(classify_partition({2, 2}) == PartClass::F);       // self-conjugate non-hook
  CHECK(classify_partition({3, 2, 1}) == PartClass::F);
}

TEST_CASE("hook length dimensions: two paths and the square-sum identity") {
  for (int k = 1; k <= 8; ++k) {
    Int sq = 0;
    for (const auto& q : partitions(k)) {
      Int f = f_lambda(q);
      CHECK(f == f_lambda_by_counting(q));
      CHECK(f == f_lambda(conjugate(q)));
      sq += f * f;
    }
    CHECK(sq == factorial(k));
  }
  CHECK(f_lambda({2, 1}) == 2);
  CHECK(f_lambda({}) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("bipartition enumeration, dimensions, AW square sum") {
  for (int n = 2; n <= 6; ++n) {
    auto ordered = bipartitions(n, true);
    size_t expect = 0;
    for (int a = 0; a <= n; ++a) expect += partitions(a).size() * partitions(n - a).size();
    CHECK(ordered.size() == expect);
    Int sq = 0;
    for (const auto& bp : ordered) {
      CHECK(bp.n() == n);
      sq += dim_formula(bp) * dim_formula(bp);
    }
    CHECK(sq == factorial(n) << n);  // 2^n n!

    auto unordered = bipartitions(n, false);
    for (const auto& bp : unordered) CHECK(unordered_normal_form(bp) == bp);
    std::set<std::string> seen;
    for (const auto& bp : ordered) seen.insert(unordered_label_to_string(unordered_normal_form(bp)));
    CHECK(seen.size() == unordered.size());
  }
  CHECK(dim_formula({{2, 1}, {2, 1}}) == 80);   // C(6,3) * 2 * 2
  CHECK(dim_formula({{3, 1, 1}, {1}}) == 36);   // C(6,5) * 6 * 1... wait: C(6,5)=6, f(311)=6
}

TEST_CASE("label strings round-trip") {
  for (const auto& bp : bipartitions(4, true)) {
    CHECK(bipartition_from_string(bipartition_to_string(bp)) == bp);
    CHECK(bipartition_from_string(" ( " + partition_to_string(bp.first) + " , " +
                                  partition_to_string(bp.second) + " ) ") == bp);
  }
  CHECK(bipartition_to_string({{2, 1}, {1}}) == "([2,1],[1])");
  CHECK(unordered_label_to_string({{2, 1}, {1}}) == "{[2,1],[1]}");
  CHECK(partition_from_string("[3,2,2]") == Partition{3, 2, 2});
  CHECK(partition_from_string("[]") == Partition{});
  for (const auto& l : d_irrep_labels(4)) {
    DLabel back = d_label_from_string(d_label_to_string(l));
    CHECK(back == l);
  }
  DLabel plus = d_label_from_string("{[2,1],+}");
  CHECK(plus.sign == 1);
  CHECK(plus.lambda == Partition{2, 1});
  CHECK_THROWS(bipartition_from_string("([2,1]"));
  CHECK_THROWS(partition_from_string("[1,2]"));  // not weakly decreasing
}

TEST_CASE("involutions on bipartitions") {
  for (const auto& bp : bipartitions(5, true)) {
    CHECK(swap_parts(swap_parts(bp)) == bp);
    CHECK(conjugate_parts(conjugate_parts(bp)) == bp);
    CHECK(dual_partner(dual_partner(bp)) == bp);
    CHECK(dual_partner(bp) == conjugate_parts(swap_parts(bp)));
    CHECK(dim_formula(dual_partner(bp)) == dim_formula(bp));
  }
}

TEST_CASE("bipartition classification and arm-and-leg recognition") {
  CHECK(classify_bipartition({{3}, {}}).cls == BPClass::Improper);
  CHECK(classify_bipartition({{}, {2, 1}}).cls == BPClass::Improper);
  auto beta = classify_bipartition({{3}, {1, 1}});  // beta_2 at n = 5
  CHECK(beta.cls == BPClass::ArmAndLeg);
  CHECK(beta.al_kind == 'b');
  CHECK(beta.al_index == 2);
  auto gamma = classify_bipartition({{1, 1, 1}, {2}});  // gamma_3 at n = 5
  CHECK(gamma.cls == BPClass::ArmAndLeg);
  CHECK(gamma.al_kind == 'g');
  CHECK(gamma.al_index == 3);
  // the coincident n = 2 label reports beta_1
  auto both = classify_bipartition({{1}, {1}});
  CHECK(both.cls == BPClass::ArmAndLeg);
  CHECK(both.al_kind == 'b');
  CHECK(both.al_index == 1);
  // F: fixed by (lambda,mu) -> (mu*,lambda*); E: everything else proper.
  // Fixed labels that happen to be arm-and-leg stay arm-and-leg.
  CHECK(classify_bipartition({{2, 1}, {2, 1}}).cls == BPClass::F);
  CHECK(classify_bipartition({{2}, {1, 1}}).cls == BPClass::ArmAndLeg);
  CHECK(classify_bipartition({{2}, {2}}).cls == BPClass::E);
  CHECK(classify_bipartition({{2, 1}, {1}}).cls == BPClass::E);
  // unordered rule uses {lambda*, mu*} as a set
  CHECK(classify_unordered(unordered_normal_form({{2, 1}, {2, 1}})).cls == BPClass::F);
  CHECK(classify_unordered(unordered_normal_form({{3, 1, 1}, {1}})).cls == BPClass::F);
  CHECK(classify_unordered(unordered_normal_form({{3, 1}, {1}})).cls == BPClass::E);
}

TEST_CASE("similarity classes pair each label with its dual partner") {
  auto ordered = bipartitions(5, true);
  auto classes = sim_classes(ordered, true);
  size_t total = 0;
  int e_labels = 0, e_classes = 0;
  for (const auto& cls : classes) {
    total += cls.size();
    for (size_t i = 1; i < cls.size(); ++i) CHECK(bipartition_lex_less(cls[0], cls[i]));
    for (const auto& bp : cls) {
      const Bipartition& partner = dual_partner(bp);
      CHECK(std::find(cls.begin(), cls.end(), partner) != cls.end());
    }
    if (classify_bipartition(cls[0]).cls == BPClass::E) {
      ++e_classes;
      e_labels += static_cast<int>(cls.size());
    }
  }
  CHECK(total == ordered.size());
  CHECK(e_labels == 14);  // E(5) has 14 labels in 7 dual pairs
  CHECK(e_classes == 7);
}

TEST_CASE("type D labels: counts, dimensions, square sum") {
  for (int n = 2; n <= 6; ++n) {
    auto labels = d_irrep_labels(n);
    Int sq = 0;
    int pm = 0;
    for (const auto& l : labels) {
      Int d = d_label_dim(l, n);
      CHECK(d > 0);
      sq += d * d;
      if (l.sign != 0) {
        ++pm;
        CHECK(l.mu == l.lambda);
        CHECK(2 * partition_size(l.lambda) == n);
        // the two halves of a split pair have equal dimension
        CHECK(2 * d == dim_formula({l.lambda, l.lambda}));
      }
    }
    CHECK(sq == factorial(n) << (n - 1));  // 2^(n-1) n!
    if (n % 2 == 1) CHECK(pm == 0);
    if (n == 4) CHECK(pm == 4);  // {[2],+-}, {[1,1],+-}
  }
}

TEST_CASE("standard bitableaux enumerate to the dimension formula") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& bp : bipartitions(n, true)) {
      auto basis = standard_bitableaux(bp);
      CHECK(Int(basis.size()) == dim_formula(bp));
      std::set<StandardBitableau> seen;
      for (const auto& t : basis) {
        CHECK(is_standard(t));
        CHECK(t.shape == bp);
        seen.insert(t);
      }
      CHECK(seen.size() == basis.size());
      CHECK(std::is_sorted(basis.begin(), basis.end(),
                           [](const auto& a, const auto& b) { return a < b; }));
      // row-major filling is a member
      CHECK(seen.count(row_major_bitableau(bp)) == 1);
    }
  CHECK_THROWS(standard_bitableaux({{4, 4, 4}, {4, 4, 4}}, 10));  // budget
}

TEST_CASE("transpose and swap act as involutions on fillings") {
  for (const auto& bp : bipartitions(4, true))
    for (const auto& t : standard_bitableaux(bp)) {
      CHECK(transpose_bt(transpose_bt(t)) == t);
      CHECK(swap_bt(swap_bt(t)) == t);
      CHECK(transpose_bt(t).shape == conjugate_parts(bp));
      CHECK(swap_bt(t).shape == swap_parts(bp));
      CHECK(is_standard(transpose_bt(t)));
      CHECK(is_standard(swap_bt(t)));
    }
}

TEST_CASE("entry statistics: rho, residue, length, weights") {
  // shape ([2,1],[1]) with the row-major filling: 1 2 / 3 in the first
  // tableau, 4 in the second
  Bipartition bp{{2, 1}, {1}};
  StandardBitableau t = row_major_bitableau(bp);
  CHECK(rho_of(t, 1) == 1);
  CHECK(rho_of(t, 4) == -1);
  CHECK(residue_of(t, 1) == 0);
  CHECK(residue_of(t, 2) == 1);
  CHECK(residue_of(t, 3) == -1);
  CHECK(residue_of(t, 4) == 0);
  CHECK(length_of(t) == 0);  // row-major is the length-zero filling
  // moving an entry with s_i changes the length parity
  for (const auto& tab : standard_bitableaux(bp))
    for (int i = 1; i < 4; ++i)
      if (auto moved = apply_adjacent(tab, i))
        CHECK((length_of(*moved) - length_of(tab)) % 2 != 0);

  for (const auto& bp5 : bipartitions(5, true)) {
    auto basis = standard_bitableaux(bp5);
    std::set<Weight> weights;
    for (const auto& tab : basis) {
      Weight w = weight_of(tab);
      CHECK(w.rho.size() == 5);
      CHECK(w.chi.size() == 5);
      for (int k = 1; k <= 5; ++k) {
        CHECK(w.rho[k - 1] == rho_of(tab, k));
        CHECK(w.chi[k - 1] == 2 * residue_of(tab, k));
      }
      weights.insert(w);
    }
    // GZ weights separate the basis
    CHECK(weights.size() == basis.size());
  }
}

TEST_CASE("restricted type D weights fuse the sign pair") {
  Partition lam{2, 1};
  Bipartition bp{lam, lam};
  auto basis = standard_bitableaux(bp);
  for (const auto& t : basis) {
    Weight w = d_weight_of(t);
    CHECK(w.rho.size() == 5);  // u_1..u_{n-1} eigenvalues, n = 6
    for (int i = 1; i < 6; ++i) CHECK(w.rho[i - 1] == rho_of(t, 1) * rho_of(t, i + 1));
    // swapping the two tableaux flips every rho but fixes the d-weight
    CHECK(d_weight_of(swap_bt(t)) == w);
  }
  auto pos = bitableaux_rho1_positive(lam);
  CHECK(2 * pos.size() == basis.size());
  for (const auto& t : pos) CHECK(rho_of(t, 1) == 1);
}

TEST_CASE("adjacent transpositions act partially on fillings") {
  for (const auto& bp : bipartitions(4, true))
    for (const auto& t : standard_bitableaux(bp))
      for (int i = 1; i < 4; ++i) {
        auto moved = apply_adjacent(t, i);
        if (!moved) continue;
        CHECK(is_standard(*moved));
        CHECK(*moved != t);
        auto back = apply_adjacent(*moved, i);
        REQUIRE(back.has_value());
        CHECK(*back == t);
      }
  // same row: not standard after swapping 1,2
  StandardBitableau rm = row_major_bitableau({{2}, {}});
  CHECK(!apply_adjacent(rm, 1).has_value());
}

TEST_CASE("predecessors drive the dimension recursion") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& bp : bipartitions(n, true)) {
      Int total = 0;
      std::set<std::pair<int, int>> keys;  // (side-coded rho, residue) unique
      for (const auto& [prev, res] : predecessors(bp, true)) {
        total += dim_formula(prev);
        int rho = prev.first == bp.first ? -1 : 1;
        CHECK(keys.insert({rho, res}).second);
      }
      CHECK(total == dim_formula(bp));
    }
  for (const auto& q : partitions(6)) {
    auto corners = removable_corners(q);
    std::set<int> parts(q.begin(), q.end());
    CHECK(corners.size() == parts.size());  // one corner per distinct part
    for (const auto& [prev, res] : corners) CHECK(partition_size(prev) == 5);
  }
}
