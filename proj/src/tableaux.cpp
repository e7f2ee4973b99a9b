#include "reflecta/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace reflecta {

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.resize(p[0]);
  for (int j = 0; j < p[0]; ++j) {
    int c = 0;
    for (int part : p)
      if (part > j) ++c;
    out[j] = c;
  }
  return out;
}

int diagonal_length(const Partition& p) {
  int b = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] >= static_cast<int>(i) + 1) ++b;
  return b;
}

bool is_hook(const Partition& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] != 1) return false;
  return true;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

Int f_lambda(const Partition& p) {
  int n = partition_size(p);
  Partition pc = conjugate(p);
  Int num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      Int hook = (p[i] - j) + (pc[j] - static_cast<int>(i)) - 1;
      num /= hook;
    }
  return num;
}

std::vector<std::pair<Partition, int>> removable_corners(const Partition& p) {
  std::vector<std::pair<Partition, int>> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i] == p[i + 1]) continue;
    Partition q = p;
    if (--q[i] == 0) q.pop_back();
    out.push_back({std::move(q), (p[i] - 1) - static_cast<int>(i)});
  }
  return out;
}

namespace {
Int f_count_memo(const Partition& p, std::map<Partition, Int>& memo) {
  if (p.empty()) return 1;
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (const auto& [q, res] : removable_corners(p)) {
    (void)res;
    total += f_count_memo(q, memo);
  }
  memo[p] = total;
  return total;
}
}  // namespace

Int f_lambda_by_counting(const Partition& p) {
  std::map<Partition, Int> memo;
  return f_count_memo(p, memo);
}

namespace {
void partitions_rec(int rem, int maxp, Partition& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rem, maxp); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Partition partition_from_string(const std::string& s) {
  size_t a = s.find('[');
  size_t b = s.find(']', a);
  if (a == std::string::npos || b == std::string::npos)
    throw std::invalid_argument("bad partition string: " + s);
  Partition out;
  std::string body = s.substr(a + 1, b - a - 1);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t start = tok.find_first_not_of(" \t");
    if (start != std::string::npos) out.push_back(std::stoi(tok.substr(start)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] > out[i - 1] || out[i] <= 0)
      throw std::invalid_argument("not a partition: " + s);
  return out;
}

PartClass classify_partition(const Partition& p) {
  if (is_hook(p)) return PartClass::Hook;
  return p == conjugate(p) ? PartClass::F : PartClass::E;
}

bool bipartition_lex_less(const Bipartition& a, const Bipartition& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

bool partition_display_less(const Partition& a, const Partition& b) {
  int sa = partition_size(a), sb = partition_size(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

Bipartition unordered_normal_form(const Bipartition& b) {
  if (partition_display_less(b.first, b.second)) return {b.second, b.first};
  return b;
}

std::string bipartition_to_string(const Bipartition& b) {
  return "(" + partition_to_string(b.first) + "," + partition_to_string(b.second) + ")";
}

std::string unordered_label_to_string(const Bipartition& b) {
  Bipartition nf = unordered_normal_form(b);
  return "{" + partition_to_string(nf.first) + "," + partition_to_string(nf.second) + "}";
}

Bipartition bipartition_from_string(const std::string& s) {
  size_t a1 = s.find('[');
  if (a1 == std::string::npos) throw std::invalid_argument("bad bipartition string: " + s);
  size_t b1 = s.find(']', a1);
  size_t a2 = s.find('[', b1);
  if (b1 == std::string::npos || a2 == std::string::npos)
    throw std::invalid_argument("bad bipartition string: " + s);
  size_t b2 = s.find(']', a2);
  if (b2 == std::string::npos) throw std::invalid_argument("bad bipartition string: " + s);
  return {partition_from_string(s.substr(a1, b1 - a1 + 1)),
          partition_from_string(s.substr(a2, b2 - a2 + 1))};
}

Bipartition swap_parts(const Bipartition& b) { return {b.second, b.first}; }
Bipartition conjugate_parts(const Bipartition& b) {
  return {conjugate(b.first), conjugate(b.second)};
}
Bipartition dual_partner(const Bipartition& b) {
  return {conjugate(b.second), conjugate(b.first)};
}

Int dim_formula(const Bipartition& b) {
  return binomial(b.n(), partition_size(b.first)) * f_lambda(b.first) * f_lambda(b.second);
}

namespace {
bool all_ones(const Partition& p) {
  for (int x : p)
    if (x != 1) return false;
  return true;
}

// 'b' for ([n-d],[1^d]), 'g' for ([1^d],[n-d]), 0 otherwise.
char arm_and_leg_kind(const Bipartition& bp, int* index) {
  if (bp.first.empty() || bp.second.empty()) return 0;
  if (bp.first.size() == 1 && all_ones(bp.second)) {
    *index = static_cast<int>(bp.second.size());
    return 'b';
  }
  if (bp.second.size() == 1 && all_ones(bp.first)) {
    *index = static_cast<int>(bp.first.size());
    return 'g';
  }
  return 0;
}
}  // namespace

BPClassification classify_bipartition(const Bipartition& b) {
  if (b.first.empty() || b.second.empty()) return {BPClass::Improper};
  int d = 0;
  if (char kind = arm_and_leg_kind(b, &d)) return {BPClass::ArmAndLeg, kind, d};
  return {dual_partner(b) == b ? BPClass::F : BPClass::E};
}

BPClassification classify_unordered(const Bipartition& b) {
  if (b.first.empty() || b.second.empty()) return {BPClass::Improper};
  int d = 0;
  if (char kind = arm_and_leg_kind(b, &d)) return {BPClass::ArmAndLeg, kind, d};
  Bipartition conj = unordered_normal_form(conjugate_parts(b));
  return {conj == unordered_normal_form(b) ? BPClass::F : BPClass::E};
}

std::vector<Bipartition> bipartitions(int n, bool ordered) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& lam : partitions(a))
      for (const auto& mu : partitions(n - a)) {
        Bipartition bp{lam, mu};
        if (!ordered && partition_display_less(bp.first, bp.second)) continue;
        out.push_back(std::move(bp));
      }
  return out;
}

std::vector<std::vector<Bipartition>> sim_classes(const std::vector<Bipartition>& items,
                                                  bool ordered) {
  std::vector<std::vector<Bipartition>> out;
  std::vector<bool> used(items.size(), false);
  for (size_t i = 0; i < items.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Bipartition partner = dual_partner(items[i]);
    if (!ordered) partner = unordered_normal_form(conjugate_parts(items[i]));
    std::vector<Bipartition> cls{items[i]};
    for (size_t j = i + 1; j < items.size(); ++j)
      if (!used[j] && items[j] == partner) {
        used[j] = true;
        cls.push_back(items[j]);
        break;
      }
    if (cls.size() == 2 && bipartition_lex_less(cls[1], cls[0])) std::swap(cls[0], cls[1]);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<DLabel> d_irrep_labels(int n) {
  std::vector<DLabel> out;
  for (const auto& bp : bipartitions(n, false)) {
    if (bp.first == bp.second) {
      out.push_back({bp.first, bp.second, +1});
      out.push_back({bp.first, bp.second, -1});
    } else {
      out.push_back({bp.first, bp.second, 0});
    }
  }
  return out;
}

Int d_label_dim(const DLabel& l, int n) {
  Int full = binomial(n, partition_size(l.lambda)) * f_lambda(l.lambda) * f_lambda(l.mu);
  return l.sign == 0 ? full : full / 2;
}

std::string d_label_to_string(const DLabel& l) {
  if (l.sign == 0) return unordered_label_to_string({l.lambda, l.mu});
  return "{" + partition_to_string(l.lambda) + "," + (l.sign > 0 ? "+" : "-") + "}";
}

DLabel d_label_from_string(const std::string& s) {
  size_t a1 = s.find('[');
  if (a1 == std::string::npos) throw std::invalid_argument("bad label string: " + s);
  size_t b1 = s.find(']', a1);
  if (b1 == std::string::npos) throw std::invalid_argument("bad label string: " + s);
  Partition lambda = partition_from_string(s.substr(a1, b1 - a1 + 1));
  size_t p = s.find_first_not_of(" ,", b1 + 1);
  if (p == std::string::npos) throw std::invalid_argument("bad label string: " + s);
  if (s[p] == '+' || s[p] == '-') return {lambda, lambda, s[p] == '+' ? +1 : -1};
  if (s[p] != '[') throw std::invalid_argument("bad label string: " + s);
  size_t b2 = s.find(']', p);
  if (b2 == std::string::npos) throw std::invalid_argument("bad label string: " + s);
  Partition mu = partition_from_string(s.substr(p, b2 - p + 1));
  Bipartition nf = unordered_normal_form({lambda, mu});
  if (nf.first == nf.second)
    throw std::invalid_argument("equal parts need a +/- sign: " + s);
  return {nf.first, nf.second, 0};
}

StandardBitableau row_major_bitableau(const Bipartition& shape) {
  StandardBitableau t;
  t.shape = shape;
  for (int side = 0; side < 2; ++side) {
    const Partition& p = side == 0 ? shape.first : shape.second;
    for (size_t r = 0; r < p.size(); ++r)
      for (int c = 0; c < p[r]; ++c)
        t.pos.push_back({static_cast<int8_t>(side), static_cast<int8_t>(r),
                         static_cast<int8_t>(c)});
  }
  return t;
}

namespace {
void enumerate_rec(const Bipartition& shape, int n, std::vector<int> filled[2],
                   StandardBitableau& cur, std::vector<StandardBitableau>& out) {
  int k = static_cast<int>(cur.pos.size());
  if (k == n) {
    out.push_back(cur);
    return;
  }
  for (int side = 0; side < 2; ++side) {
    const Partition& p = side == 0 ? shape.first : shape.second;
    for (size_t r = 0; r < p.size(); ++r) {
      int c = filled[side][r];
      if (c >= p[r]) continue;
      if (r > 0 && filled[side][r - 1] <= c) continue;
      cur.pos.push_back({static_cast<int8_t>(side), static_cast<int8_t>(r),
                         static_cast<int8_t>(c)});
      ++filled[side][r];
      enumerate_rec(shape, n, filled, cur, out);
      --filled[side][r];
      cur.pos.pop_back();
    }
  }
}
}  // namespace

std::vector<StandardBitableau> standard_bitableaux(const Bipartition& shape, uint64_t budget) {
  Int count = dim_formula(shape);
  if (count > budget) throw std::runtime_error("bitableau enumeration budget exceeded");
  std::vector<StandardBitableau> out;
  std::vector<int> filled[2] = {std::vector<int>(shape.first.size(), 0),
                                std::vector<int>(shape.second.size(), 0)};
  StandardBitableau cur;
  cur.shape = shape;
  enumerate_rec(shape, shape.n(), filled, cur, out);
  return out;
}

StandardBitableau transpose_bt(const StandardBitableau& t) {
  StandardBitableau out;
  out.shape = conjugate_parts(t.shape);
  out.pos = t.pos;
  for (auto& b : out.pos) std::swap(b.row, b.col);
  return out;
}

StandardBitableau swap_bt(const StandardBitableau& t) {
  StandardBitableau out;
  out.shape = swap_parts(t.shape);
  out.pos = t.pos;
  for (auto& b : out.pos) b.side = static_cast<int8_t>(1 - b.side);
  return out;
}

int rho_of(const StandardBitableau& t, int entry) { return t.pos[entry - 1].side == 0 ? 1 : -1; }
int residue_of(const StandardBitableau& t, int entry) {
  return t.pos[entry - 1].col - t.pos[entry - 1].row;
}

int length_of(const StandardBitableau& t) {
  // sigma_T maps the row-major entry of each box to T's entry there.
  int n = t.n();
  const Partition& lam = t.shape.first;
  int a = partition_size(lam);
  std::vector<int> sigma(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    const Box& b = t.pos[k - 1];
    const Partition& p = b.side == 0 ? t.shape.first : t.shape.second;
    int off = b.side == 0 ? 0 : a;
    for (int r = 0; r < b.row; ++r) off += p[r];
    sigma[off + b.col + 1] = k;
  }
  int inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv;
}

Weight weight_of(const StandardBitableau& t) {
  Weight w;
  for (const Box& b : t.pos) {
    w.rho.push_back(b.side == 0 ? 1 : -1);
    w.chi.push_back(2 * (b.col - b.row));
  }
  return w;
}

Weight d_weight_of(const StandardBitableau& t) {
  Weight full = weight_of(t);
  Weight w;
  for (size_t i = 1; i < full.rho.size(); ++i) w.rho.push_back(full.rho[0] * full.rho[i]);
  w.chi = full.chi;
  return w;
}

std::optional<StandardBitableau> apply_adjacent(const StandardBitableau& t, int i) {
  const Box& b1 = t.pos[i - 1];
  const Box& b2 = t.pos[i];
  if (b1.side == b2.side && (b1.row == b2.row || b1.col == b2.col)) return std::nullopt;
  StandardBitableau out = t;
  std::swap(out.pos[i - 1], out.pos[i]);
  return out;
}

std::vector<std::pair<Bipartition, int>> predecessors(const Bipartition& shape, bool ordered) {
  std::vector<std::pair<Bipartition, int>> out;
  if (ordered) {
    for (const auto& [nu, res] : removable_corners(shape.first))
      out.push_back({{nu, shape.second}, res});
    for (const auto& [tau, res] : removable_corners(shape.second))
      out.push_back({{shape.first, tau}, res});
    return out;
  }
  if (shape.first == shape.second) {
    for (const auto& [nu, res] : removable_corners(shape.first))
      out.push_back({unordered_normal_form({nu, shape.second}), res});
    return out;
  }
  for (const auto& [nu, res] : removable_corners(shape.first))
    out.push_back({unordered_normal_form({nu, shape.second}), res});
  for (const auto& [tau, res] : removable_corners(shape.second))
    out.push_back({unordered_normal_form({shape.first, tau}), res});
  return out;
}

std::vector<StandardBitableau> bitableaux_rho1_positive(const Partition& lambda) {
  std::vector<StandardBitableau> out;
  for (auto& t : standard_bitableaux({lambda, lambda}))
    if (t.pos[0].side == 0) out.push_back(std::move(t));
  return out;
}

}  // namespace reflecta
