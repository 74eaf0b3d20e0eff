#pragma once

// Full-quantifier oracles: every mask b of {0..m-1} is enumerated and the
// masked inclusion is decided with the enumeration oracles in brute_force.hpp.

#include "farkas/op/operator_farkas.hpp"

namespace farkas::testing {

/// {bB <= 0} contains the intersection of {bA_k <= 0} for every mask b.
bool homogeneous_all_masks(const OperatorSystem& sys);

/// For every mask b: {kappa b B <= 0} contains {kappa b A <= 0} and
/// {~kappa b B <= 0} contains {~kappa b A >= 0}.
bool reconstruct_condition_for(const RatMatrix& a, const RatMatrix& b, const Projection& kappa);
bool reconstruct_some_kappa(const RatMatrix& a, const RatMatrix& b);

/// Every coordinate's constraint set {A_k,i x <= u_k,i} is nonempty.
bool strata_consistent(const OperatorSystem& sys);

/// {bBx <= bv} contains the intersection of {bA_k x <= b u_k} for every mask b.
bool inhomogeneous_all_masks(const OperatorSystem& sys);

/// {bP >= bv} contains the intersection of {bP_k <= b u_k} for every mask b.
bool sublinear_all_masks(const std::vector<SublinearOperator>& p_list, const std::vector<RatVector>& u_list,
                         const SublinearOperator& p, const RatVector& v);

}  // namespace farkas::testing
