#include "reflecta/signed_perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace reflecta {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation g;
  g.images.resize(n);
  std::iota(g.images.begin(), g.images.end(), 0);
  g.signs.assign(n, 1);
  return g;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images[i] != i || signs[i] != 1) return false;
  return true;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
  if (images != o.images) return images < o.images;
  // +1 sorts before -1.
  for (int i = 0; i < n(); ++i)
    if (signs[i] != o.signs[i]) return signs[i] > o.signs[i];
  return false;
}

uint64_t SignedPermutation::pack() const {
  uint64_t key = 0;
  for (int i = 0; i < n(); ++i) key = key * 21 + static_cast<uint64_t>(images[i]) * 2 + (signs[i] < 0);
  return key;
}

std::string SignedPermutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    if (signs[images[i]] < 0) s += "-";
    s += std::to_string(images[i] + 1);
  }
  return s + "]";
}

SignedPermutation sp_mul(const SignedPermutation& g, const SignedPermutation& h) {
  assert(g.n() == h.n());
  const int n = g.n();
  SignedPermutation out;
  out.images.resize(n);
  out.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    int k = h.images[j];
    int i = g.images[k];
    out.images[j] = static_cast<int8_t>(i);
    out.signs[i] = static_cast<int8_t>(g.signs[i] * h.signs[k]);
  }
  return out;
}

SignedPermutation sp_inv(const SignedPermutation& g) {
  const int n = g.n();
  SignedPermutation out;
  out.images.resize(n);
  out.signs.resize(n);
  for (int j = 0; j < n; ++j) out.images[g.images[j]] = static_cast<int8_t>(j);
  for (int i = 0; i < n; ++i) out.signs[i] = g.signs[g.images[i]];
  return out;
}

SignedPermutation sp_transposition(int i, int j, int n) {
  SignedPermutation g = SignedPermutation::identity(n);
  std::swap(g.images[i - 1], g.images[j - 1]);
  return g;
}

SignedPermutation sp_neg_transposition(int i, int j, int n) {
  SignedPermutation g = sp_transposition(i, j, n);
  g.signs[i - 1] = -1;
  g.signs[j - 1] = -1;
  return g;
}

SignedPermutation sp_t(int i, int n) {
  SignedPermutation g = SignedPermutation::identity(n);
  g.signs[i - 1] = -1;
  return g;
}

SignedPermutation sp_s(int i, int n) { return sp_transposition(i, i + 1, n); }

SignedPermutation sp_stilde(int n) {
  return sp_mul(sp_t(n - 1, n), sp_mul(sp_t(n, n), sp_s(n - 1, n)));
}

int eps_prime(const SignedPermutation& g) {
  int c = 0;
  for (int8_t s : g.signs) c += (s < 0);
  return (c % 2) ? -1 : 1;
}

int eps_dprime(const SignedPermutation& g) {
  int inv = 0;
  const int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inv += (g.images[i] > g.images[j]);
  return (inv % 2) ? -1 : 1;
}

int eps(const SignedPermutation& g) { return eps_prime(g) * eps_dprime(g); }

std::vector<SignedPermutation> generators(int n, GeneratorSystem sys) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i < n; ++i) out.push_back(sp_s(i, n));
  switch (sys) {
    case GeneratorSystem::coxeter_b:
      out.push_back(sp_t(n, n));
      break;
    case GeneratorSystem::coxeter_d:
      out.push_back(sp_stilde(n));
      break;
    case GeneratorSystem::b_with_t1:
      out.push_back(sp_t(1, n));
      break;
  }
  return out;
}

std::vector<std::vector<SignedPermutation>> reflections(int n, Family f) {
  std::vector<SignedPermutation> long_class;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long_class.push_back(sp_transposition(i, j, n));
      long_class.push_back(sp_neg_transposition(i, j, n));
    }
  std::sort(long_class.begin(), long_class.end());
  if (f == Family::type_b) {
    std::vector<SignedPermutation> short_class;
    for (int i = 1; i <= n; ++i) short_class.push_back(sp_t(i, n));
    std::sort(short_class.begin(), short_class.end());
    return {long_class, short_class};
  }
  if (n == 2) {
    return {{sp_transposition(1, 2, 2)}, {sp_neg_transposition(1, 2, 2)}};
  }
  return {long_class};
}

std::vector<SignedPermutation> reflections_flat(int n, Family f) {
  std::vector<SignedPermutation> out;
  for (const auto& cls : reflections(n, f))
    for (const auto& g : cls) out.push_back(g);
  return out;
}

uint64_t group_order(int n, Family f) {
  uint64_t o = 1;
  for (int i = 2; i <= n; ++i) o *= i;
  for (int i = 0; i < (f == Family::type_b ? n : n - 1); ++i) o *= 2;
  return o;
}

std::vector<SignedPermutation> enumerate_group(int n, Family f, uint64_t budget) {
  if (group_order(n, f) > budget)
    throw std::runtime_error("group order " + std::to_string(group_order(n, f)) +
                             " exceeds enumeration budget " + std::to_string(budget));
  std::vector<int8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (f == Family::type_d && (__builtin_popcount(mask) % 2)) continue;
      SignedPermutation g;
      g.images = perm;
      g.signs.resize(n);
      for (int i = 0; i < n; ++i) g.signs[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> conjugation_closure(
    const std::vector<SignedPermutation>& seeds,
    const std::vector<SignedPermutation>& gens) {
  std::set<SignedPermutation> seen(seeds.begin(), seeds.end());
  std::vector<SignedPermutation> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    SignedPermutation x = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      SignedPermutation y = sp_mul(g, sp_mul(x, sp_inv(g)));
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {
std::vector<int> adjacent_word(const std::vector<int8_t>& images) {
  // Bubble sort the one-line notation; sigma = product of the recorded
  // s_i in reverse order.
  std::vector<int8_t> arr = images;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < static_cast<int>(arr.size()); ++i)
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}
}  // namespace

BWord decompose_b(const SignedPermutation& g) {
  BWord w;
  for (int i = 0; i < g.n(); ++i)
    if (g.signs[i] < 0) w.t_indices.push_back(i + 1);
  w.s_word = adjacent_word(g.images);
  return w;
}

DWord decompose_d(const SignedPermutation& g) {
  assert(in_type_d(g));
  DWord w;
  std::vector<int> neg;
  for (int i = 0; i < g.n(); ++i)
    if (g.signs[i] < 0) neg.push_back(i + 1);
  // t_j t_k = u_{j-1} u_{k-1} with u_i = t_1 t_{i+1}; t_1 t_k = u_{k-1}.
  for (size_t a = 0; a < neg.size(); a += 2) {
    int j = neg[a], k = neg[a + 1];
    if (j != 1) w.u_indices.push_back(j - 1);
    w.u_indices.push_back(k - 1);
  }
  w.s_word = adjacent_word(g.images);
  return w;
}

GroupIndex::GroupIndex(int n, Family f, uint64_t budget) : n_(n), family_(f) {
  elements_ = enumerate_group(n, f, budget);
  index_.reserve(elements_.size() * 2);
  for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].pack()] = static_cast<int>(i);
}

int GroupIndex::index_of(const SignedPermutation& g) const {
  auto it = index_.find(g.pack());
  if (it == index_.end()) throw std::runtime_error("element not in group index");
  return it->second;
}

int GroupIndex::mul_index(int i, int j) const {
  return index_of(sp_mul(elements_[i], elements_[j]));
}

std::vector<int32_t> GroupIndex::left_action(const SignedPermutation& m) const {
  std::vector<int32_t> out(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    out[i] = index_of(sp_mul(m, elements_[i]));
  return out;
}

std::vector<int32_t> GroupIndex::right_action(const SignedPermutation& m) const {
  std::vector<int32_t> out(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    out[i] = index_of(sp_mul(elements_[i], m));
  return out;
}

}  // namespace reflecta
