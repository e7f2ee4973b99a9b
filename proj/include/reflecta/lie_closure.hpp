#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "reflecta/group_algebra.hpp"
#include "reflecta/matrix.hpp"
#include "reflecta/span_basis.hpp"

namespace reflecta {

// x -> [m, x] for a fixed multiplier m.
using BracketWith = std::function<SparseVecZ(const SparseVecZ&)>;
// (a, b) -> [a, b].
using BracketFn = std::function<SparseVecZ(const SparseVecZ&, const SparseVecZ&)>;

struct LieClosureResult {
  SpanBasis basis;
  int generator_count = 0;
  uint64_t bracket_evaluations = 0;
};

struct ClosureBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reference kernel, kept serial and simple: FIFO queue of newly
// inserted rows, each bracketed against all current rows.
LieClosureResult lie_closure_reference(const std::vector<SparseVecZ>& gens, int ambient,
                                       const BracketFn& bracket,
                                       std::optional<double> max_seconds = std::nullopt);

// Production kernel: seeds span the starting subspace, then new rows
// are bracketed against a fixed multiplier family whose span generates
// the target algebra.  Candidate reductions run under OpenMP; insertion
// order is serialized, so the result and statistics are independent of
// the thread count (and identical to the reference kernel's subspace,
// hence to its canonical basis).
LieClosureResult lie_closure_fast(const std::vector<SparseVecZ>& seeds,
                                  const std::vector<BracketWith>& multipliers, int ambient,
                                  std::optional<double> max_seconds = std::nullopt);

struct ModPClosure {
  int dim = 0;
  uint32_t prime = 0;
  uint64_t bracket_evaluations = 0;
};

// Same ad-closure computed over F_p.  Every inserted row is the
// reduction of an integer vector inside the rational closure subspace,
// whose integer lattice is saturated, so the reported dimension is a
// certified lower bound for the rational closure dimension (and equals
// it for all but finitely many primes).
ModPClosure lie_closure_dim_modp(const std::vector<SparseVecZ>& seeds,
                                 const std::vector<BracketWith>& multipliers, int ambient,
                                 uint32_t prime,
                                 std::optional<double> max_seconds = std::nullopt);

// Span of all pairwise brackets of basis rows (a subalgebra since the
// input is one).
SpanBasis derived_subalgebra(const SpanBasis& closure, const BracketFn& bracket);

// {x in span : [m, x] = 0 for all multipliers}; equals the center when
// the multipliers generate the algebra.
SpanBasis center_of_closure(const SpanBasis& closure, const std::vector<BracketWith>& multipliers);

// Bracket builders for the two ambient coordinate spaces.
BracketFn group_algebra_bracket(const GroupIndex& idx);
BracketWith group_multiplier(const GroupIndex& idx, const SignedPermutation& m);
BracketFn matrix_space_bracket(int d);
BracketWith matrix_multiplier(const IMatSparse& m);

}  // namespace reflecta
