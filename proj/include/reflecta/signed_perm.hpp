#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace reflecta {

enum class Family { type_b, type_d };

// Signed permutation on n letters, stored as (images, signs) with
// 0-based internals: the element maps e_j to signs[images[j]] * e_{images[j]},
// i.e. signs[i] is the sign attached to position i of the image.  The
// normal form is (product of t_i over negative positions) * permutation.
struct SignedPermutation {
  std::vector<int8_t> images;
  std::vector<int8_t> signs;  // +1 / -1 per target position

  int n() const { return static_cast<int>(images.size()); }
  static SignedPermutation identity(int n);
  bool is_identity() const;

  // Canonical order: lexicographic on (images, signs) with +1 before -1.
  bool operator<(const SignedPermutation& o) const;
  bool operator==(const SignedPermutation& o) const {
    return images == o.images && signs == o.signs;
  }
  uint64_t pack() const;  // injective for n <= 10
  std::string to_string() const;
};

SignedPermutation sp_mul(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation sp_inv(const SignedPermutation& g);

// Basic elements (1-based arguments to match the usual notation).
SignedPermutation sp_transposition(int i, int j, int n);       // (i,j)
SignedPermutation sp_neg_transposition(int i, int j, int n);   // t_i t_j (i,j)
SignedPermutation sp_t(int i, int n);                          // sign flip at i
SignedPermutation sp_s(int i, int n);                          // (i, i+1)
SignedPermutation sp_stilde(int n);                            // t_{n-1} t_n s_{n-1}

// Linear characters.
int eps_prime(const SignedPermutation& g);   // (-1)^{#negative signs}
int eps_dprime(const SignedPermutation& g);  // sign of the underlying permutation
int eps(const SignedPermutation& g);

inline bool in_type_d(const SignedPermutation& g) { return eps_prime(g) == 1; }

enum class GeneratorSystem { coxeter_b, coxeter_d, b_with_t1 };

std::vector<SignedPermutation> generators(int n, GeneratorSystem sys);

// Reflections grouped by conjugacy class.  Type B: the class of the
// (i,j) and t_i t_j (i,j) reflections, then the class of the t_i.
// Type D: one class for n >= 3, two singleton classes for n = 2.
std::vector<std::vector<SignedPermutation>> reflections(int n, Family f);
std::vector<SignedPermutation> reflections_flat(int n, Family f);

// Full group in canonical order; throws if the group order exceeds the budget.
std::vector<SignedPermutation> enumerate_group(int n, Family f,
                                               uint64_t budget = 1000000);
uint64_t group_order(int n, Family f);

// Closure of seeds under conjugation by the given generators.
std::vector<SignedPermutation> conjugation_closure(
    const std::vector<SignedPermutation>& seeds,
    const std::vector<SignedPermutation>& gens);

// Normal-form decompositions used to evaluate representations.
// Type B: g = prod(t_i, i in t_indices) * prod(s_i, i in s_word), both
// left to right.  Type D: the t-part is rewritten as a product of
// u_i = t_1 t_{i+1}.
struct BWord {
  std::vector<int> t_indices;  // 1-based
  std::vector<int> s_word;     // 1-based adjacent transpositions
};
struct DWord {
  std::vector<int> u_indices;  // 1-based, u_i = t_1 t_{i+1}
  std::vector<int> s_word;
};
BWord decompose_b(const SignedPermutation& g);
DWord decompose_d(const SignedPermutation& g);

// Indexed group for coordinate computations in the group algebra.
class GroupIndex {
 public:
  GroupIndex(int n, Family f, uint64_t budget = 1000000);

  int n() const { return n_; }
  Family family() const { return family_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const SignedPermutation& element(int i) const { return elements_[i]; }
  int index_of(const SignedPermutation& g) const;
  int mul_index(int i, int j) const;

  // Index permutations i -> index(m * g_i) and i -> index(g_i * m).
  std::vector<int32_t> left_action(const SignedPermutation& m) const;
  std::vector<int32_t> right_action(const SignedPermutation& m) const;

 private:
  int n_;
  Family family_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<uint64_t, int> index_;
};

}  // namespace reflecta
