#pragma once

#include <vector>

#include "reflecta/matrix.hpp"
#include "reflecta/span_basis.hpp"

namespace reflecta {

// Canonical basis of the commutant {C : C M = M C for every M in mats}.
// Diagonal members of mats are used structurally first (they restrict C
// to coordinate pairs with matching diagonal values), which keeps the
// nullspace system small for representation matrices.
std::vector<RatMat> solve_commutant(const std::vector<RatMat>& mats);

// Canonical basis of {G : M^T G + G M = 0 for every M in mats}.
std::vector<RatMat> solve_invariant_form(const std::vector<RatMat>& mats);

// Canonical basis of {G : M_k^T G M_k = chi_k G}.  Since every basis
// element of a reflection-generated Lie subalgebra is G-anti-self-adjoint
// as soon as the group generators satisfy this twisted identity, this is
// the cheap route to invariant forms of block images.
std::vector<RatMat> solve_group_invariant_form(const std::vector<RatMat>& mats,
                                               const std::vector<Rational>& chi);

// Canonical basis of {Phi : Phi A_k = chi_k B_k Phi}.
std::vector<RatMat> solve_intertwiner_space(const std::vector<RatMat>& a_mats,
                                            const std::vector<RatMat>& b_mats,
                                            const std::vector<Rational>& chi);

}  // namespace reflecta
