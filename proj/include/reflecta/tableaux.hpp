#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflecta/numeric.hpp"

namespace reflecta {

// Weakly decreasing positive parts; [] is the empty partition.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
int diagonal_length(const Partition& p);  // b(lambda)
bool is_hook(const Partition& p);         // [n-d, 1^d]
Int binomial(int n, int k);
Int f_lambda(const Partition& p);              // hook length formula
Int f_lambda_by_counting(const Partition& p);  // removable-corner recursion
std::vector<Partition> partitions(int n);      // descending lex, [n] first
std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);

// Single-partition classification (symmetric group side): hooks,
// non-hooks with p != p*, non-hooks with p = p*.
enum class PartClass { Hook, E, F };
PartClass classify_partition(const Partition& p);

struct Bipartition {
  Partition first, second;
  int n() const { return partition_size(first) + partition_size(second); }
  bool operator==(const Bipartition&) const = default;
};

// Lexicographic on (first, second) as integer sequences.
bool bipartition_lex_less(const Bipartition& a, const Bipartition& b);
// Size-then-lex order used to pick the display order of unordered pairs.
bool partition_display_less(const Partition& a, const Partition& b);
Bipartition unordered_normal_form(const Bipartition& b);  // bigger half first

std::string bipartition_to_string(const Bipartition& b);      // "([2,1],[1])"
std::string unordered_label_to_string(const Bipartition& b);  // "{[2,1],[1]}"
Bipartition bipartition_from_string(const std::string& s);

Bipartition swap_parts(const Bipartition& b);     // (mu, lambda)
Bipartition conjugate_parts(const Bipartition& b);  // (lambda*, mu*)
Bipartition dual_partner(const Bipartition& b);   // (mu*, lambda*)

Int dim_formula(const Bipartition& b);  // C(n, |first|) f^first f^second

enum class BPClass { Improper, ArmAndLeg, E, F };
struct BPClassification {
  BPClass cls;
  // Set only for ArmAndLeg: ([n-d],[1^d]) is beta_d, ([1^d],[n-d]) is
  // gamma_d; ([1],[1]) at n=2 is both and reports beta.
  char al_kind = 0;  // 'b' or 'g'
  int al_index = 0;  // d
};
BPClassification classify_bipartition(const Bipartition& b);  // ordered E/F rule
BPClassification classify_unordered(const Bipartition& b);    // {lambda*,mu*} rule

std::vector<Bipartition> bipartitions(int n, bool ordered);
// ~-classes (partner = (mu*,lambda*), or {lambda*,mu*} unordered);
// each class lists its lexicographically least member first.
std::vector<std::vector<Bipartition>> sim_classes(const std::vector<Bipartition>& items,
                                                  bool ordered);

// Simple-module labels for the type D group: {lambda,mu} with
// lambda != mu (sign 0), or {lambda,+}/{lambda,-} (sign +1/-1, mu = lambda).
struct DLabel {
  Partition lambda, mu;
  int sign = 0;
  bool operator==(const DLabel&) const = default;
};
std::vector<DLabel> d_irrep_labels(int n);
Int d_label_dim(const DLabel& l, int n);
std::string d_label_to_string(const DLabel& l);
// Accepts "{[2,1],[1]}" (unordered; normalized) and "{[2,1],+}" forms.
DLabel d_label_from_string(const std::string& s);

// Position of one entry: side 0/1 (first/second tableau), then 0-based
// row and column.
struct Box {
  int8_t side = 0, row = 0, col = 0;
  auto operator<=>(const Box&) const = default;
};

struct StandardBitableau {
  Bipartition shape;
  std::vector<Box> pos;  // pos[k] = box containing entry k+1
  int n() const { return static_cast<int>(pos.size()); }
  bool operator==(const StandardBitableau&) const = default;
  // Canonical order: lexicographic on the position sequence.
  bool operator<(const StandardBitableau& o) const { return pos < o.pos; }
};

StandardBitableau row_major_bitableau(const Bipartition& shape);
std::vector<StandardBitableau> standard_bitableaux(const Bipartition& shape,
                                                   uint64_t budget = 4000000);

StandardBitableau transpose_bt(const StandardBitableau& t);  // T*
StandardBitableau swap_bt(const StandardBitableau& t);       // T^natural

int rho_of(const StandardBitableau& t, int entry);      // +1 / -1
int residue_of(const StandardBitableau& t, int entry);  // col - row
int length_of(const StandardBitableau& t);              // l(T)

struct Weight {
  std::vector<int> rho;  // +-1 per entry
  std::vector<int> chi;  // 2 * residue per entry
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};
Weight weight_of(const StandardBitableau& t);

// Restricted weight for the type D GZ-algebra: u_i = t_1 t_{i+1}
// eigenvalues rho_1 rho_{i+1} (length n-1), plus chi.
Weight d_weight_of(const StandardBitableau& t);

// s_i . T as a filling; nullopt when the result is not standard (i and
// i+1 in the same row or column).
std::optional<StandardBitableau> apply_adjacent(const StandardBitableau& t, int i);

// All (previous shape, residue of the removed box) in deterministic
// order; unordered flavor follows the restriction rule for unordered
// labels (one copy per removable box of lambda when lambda = mu).
std::vector<std::pair<Bipartition, int>> predecessors(const Bipartition& shape, bool ordered);
std::vector<std::pair<Partition, int>> removable_corners(const Partition& p);

// T(lambda,lambda)_{+1}: bitableaux of shape (lambda,lambda) with entry
// 1 in the first tableau, in canonical order.
std::vector<StandardBitableau> bitableaux_rho1_positive(const Partition& lambda);

}  // namespace reflecta
